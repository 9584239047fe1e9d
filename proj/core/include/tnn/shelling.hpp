#pragma once

// Reflection orders, Dyer's EL-labeling of Bruhat intervals, and
// EL-property verification for edge-labelled graded posets.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tnn/bruhat.hpp"
#include "tnn/coxeter.hpp"
#include "tnn/poset.hpp"

namespace tnn {

struct ReflectionOrder {
  std::vector<Element> sequence;
  /// Reduced word of w0 realizing `sequence` by prefix conjugation.
  Word source_word;
  bool reversed = false;

  /// Position of t in the sequence; throws InvalidArgument if absent.
  [[nodiscard]] std::size_t rank_of(Element t) const;

  std::vector<std::size_t> rank_table;  // by element index; npos if not a reflection
};

/// t_j = s_{i_1} ... s_{i_{j-1}} s_{i_j} s_{i_{j-1}} ... s_{i_1}.
ReflectionOrder reflection_order_from_word(const CoxeterSystem& system, std::span<const int> w0_word);

ReflectionOrder reverse_order(const CoxeterSystem& system, const ReflectionOrder& order);

/// The unique reduced word of w0 whose prefix conjugates give `sequence`,
/// if there is one.
std::optional<Word> realizing_word(const CoxeterSystem& system, std::span<const Element> sequence);

bool is_reflection_order(const CoxeterSystem& system, std::span<const Element> sequence);

/// Extends a reduced word to a reduced word of w0 by appending, at each
/// step, the smallest generator that lengthens the product.
Word extend_to_longest(const CoxeterSystem& system, std::span<const int> prefix);

/// The order used to match S_x(w): reverse of the order generated by a
/// reduced word of w0 that begins with the reverse of `w_word`.
ReflectionOrder matching_reflection_order(const CoxeterSystem& system, std::span<const int> w_word);

struct ELLabeling {
  HassePoset poset;
  std::vector<Element> labels;          // per cover index
  std::vector<std::size_t> label_rank;  // per cover index, position in the order
};

/// Labels each cover by (smaller)^-1 (larger). With `dualize`, the poset is
/// the order dual of the interval (the S_x(w) convention) and labels are
/// unchanged, since reflections are involutions.
ELLabeling dyer_labeling(const CoxeterSystem& system, const BruhatInterval& interval,
                         const ReflectionOrder& order, bool dualize);

struct ELReport {
  bool ok = true;
  std::optional<Cover> violation;  // (bottom, top) of the first failing interval
  std::size_t increasing_chains = 0;
  std::size_t intervals_checked = 0;
};

/// Checks that every interval has exactly one weakly increasing maximal
/// chain and that it is lexicographically first. Throws NotGradedBounded.
ELReport verify_EL(const HassePoset& poset, std::span<const std::size_t> edge_rank);
ELReport verify_EL(const ELLabeling& labeling);

/// Same verdict by enumerating every maximal chain of every interval.
ELReport verify_EL_exhaustive(const HassePoset& poset, std::span<const std::size_t> edge_rank);

/// Lower covers of x reached by a maximal label.
std::vector<std::size_t> last_set(const ELLabeling& labeling, std::size_t x);

/// {"edges":[{"lower":i,"upper":j,"label_rank":r},...]}
std::string labeling_to_json(const ELLabeling& labeling);

}  // namespace tnn
