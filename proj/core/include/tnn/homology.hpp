#pragma once

// Order complexes of finite posets and their reduced Betti numbers over GF(2).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tnn/poset.hpp"

namespace tnn {

struct OrderComplex {
  /// simplices[d] holds the chains with d+1 elements, each increasing.
  std::vector<std::vector<std::vector<std::uint32_t>>> simplices;

  [[nodiscard]] std::vector<std::size_t> f_vector() const;
  [[nodiscard]] std::size_t total() const;
};

inline constexpr std::size_t kDefaultSimplexCap = 5'000'000;

/// All nonempty chains of `poset`. Throws ComplexTooLarge past `cap`.
OrderComplex order_complex(const HassePoset& poset, std::size_t cap = kDefaultSimplexCap);

struct BettiProfile {
  /// reduced[d] = dim of reduced H_d, for d = -1 .. top dimension; index 0 is d = -1.
  std::vector<std::size_t> reduced;
  long reduced_euler = 0;

  [[nodiscard]] std::size_t betti(int d) const;
  /// True when every reduced Betti number vanishes except possibly at `d`,
  /// which must equal `value`.
  [[nodiscard]] bool concentrated_in(int d, std::size_t value) const;
};

BettiProfile gf2_betti(const OrderComplex& complex);

/// Convenience: order complex then Betti numbers.
BettiProfile reduced_homology(const HassePoset& poset, std::size_t cap = kDefaultSimplexCap);

/// {"f_vector":[...],"betti":[...]} with betti indexed from -1.
std::string homology_to_json(const OrderComplex& complex, const BettiProfile& profile);

}  // namespace tnn
