#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tnn/coxeter.hpp"
#include "tnn/poset.hpp"

namespace tnn {

/// v <= w by the lifting recursion along the normal form of w; O(l(w)).
bool bruhat_leq(const CoxeterSystem& system, Element v, Element w);

/// Bruhat order with precomputed lower sets for groups up to `dense_limit`
/// elements; larger groups fall back to bruhat_leq. Immutable once built.
class BruhatOrder {
 public:
  explicit BruhatOrder(const CoxeterSystem& system, std::size_t dense_limit = 8192);

  [[nodiscard]] const CoxeterSystem& system() const noexcept { return *system_; }
  [[nodiscard]] bool leq(Element v, Element w) const;
  [[nodiscard]] bool less(Element v, Element w) const { return v != w && leq(v, w); }
  [[nodiscard]] bool dense() const noexcept { return !lower_.empty(); }

 private:
  const CoxeterSystem* system_;
  std::vector<Bitset> lower_;  // lower_[w] = { v : v <= w }
};

/// All v with v covered by w, i.e. w*t for reflections t with l(wt) = l(w) - 1.
std::vector<Element> bruhat_covers(const CoxeterSystem& system, Element w);

struct BruhatInterval {
  Element bottom;
  Element top;
  std::vector<Element> elements;  // ShortLex order
  HassePoset poset;               // ranks are Coxeter lengths

  [[nodiscard]] std::optional<std::size_t> index_of(Element z) const;
};

/// Closed interval [v, w]. Throws NotComparable unless v <= w.
BruhatInterval bruhat_interval(const BruhatOrder& order, Element v, Element w);

struct ThinnessReport {
  bool thin = true;
  /// Endpoints of the first length-2 interval that is not a diamond.
  std::optional<Cover> violation;
  std::size_t middle_count = 0;
};

/// Every length-2 interval has exactly two middle elements. Throws NotGraded.
ThinnessReport is_thin(const HassePoset& poset);

/// Pairs (r, t), 1-based with r < t, such that the factor r..t of `word` is
/// not reduced while deleting either endpoint leaves a reduced word.
std::vector<std::pair<std::size_t, std::size_t>> find_deletion_pairs(const CoxeterSystem& system,
                                                                     std::span<const int> word);

/// Keeps the letters of `w_word` at positions in x_+ or >= p (1-based,
/// 1 <= p <= t+1) and reports whether the resulting word is reduced.
bool check_gamma_reduced(const CoxeterSystem& system, Element x, std::span<const int> w_word,
                         std::size_t p);

}  // namespace tnn
