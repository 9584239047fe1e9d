#pragma once

// Brute-force oracles for the tests. Nothing here calls into the library's
// group arithmetic: elements live in concrete permutation models and
// lengths come from breadth-first search over those models.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tnn/coxeter.hpp"

namespace oracle {

using Key = std::vector<int>;

/// A finite Coxeter group realised as permutations (possibly signed).
class Model {
 public:
  /// Supports A_n, B_n/C_n and G2.
  static Model of(const std::string& label);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const Key& identity() const { return identity_; }
  [[nodiscard]] Key act(const Key& k, int s) const;  // right multiplication by s
  [[nodiscard]] Key eval(const tnn::Word& word) const;
  [[nodiscard]] int length(const Key& k) const { return length_.at(k); }
  [[nodiscard]] std::size_t order() const { return length_.size(); }
  [[nodiscard]] const std::map<Key, int>& lengths() const { return length_; }
  [[nodiscard]] Key longest() const;

  /// One reduced word per element, found by BFS.
  [[nodiscard]] const tnn::Word& word(const Key& k) const { return words_.at(k); }
  [[nodiscard]] Key inverse(const Key& k) const;
  [[nodiscard]] Key multiply(const Key& a, const Key& b) const;

  /// Conjugates of the generators.
  [[nodiscard]] std::set<Key> reflections() const;

  /// Every reduced word of k, by exhaustive search over words of length l(k).
  [[nodiscard]] std::vector<tnn::Word> reduced_words(const Key& k) const;

  /// v <= w: some subword of a reduced word of w is a reduced word of v.
  [[nodiscard]] bool bruhat_leq(const Key& v, const Key& w) const;

 private:
  int rank_ = 0;
  char family_ = 'A';
  Key identity_;
  std::map<Key, int> length_;
  std::map<Key, tnn::Word> words_;
};

/// Rightmost reduced subexpression for v in `word`, by enumerating every
/// subset of positions (1-based, sorted). Empty optional when v is absent.
std::vector<std::size_t> rightmost_subexpression(const Model& model, const Key& v,
                                                 const tnn::Word& word, bool& found);

/// Index sets of the letters of `word` whose product is reduced and equal to v.
std::vector<std::vector<std::size_t>> reduced_subexpressions(const Model& model, const Key& v,
                                                             const tnn::Word& word);

/// Reduced Betti numbers over GF(2) by dense elimination; degree d at index d+1.
std::vector<std::size_t> dense_betti(const std::vector<std::vector<std::vector<std::uint32_t>>>& simplices);

}  // namespace oracle
