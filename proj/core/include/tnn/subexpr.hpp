#pragma once

// Positive (rightmost reduced) subexpressions inside a fixed reduced word.

#include <cstddef>
#include <span>
#include <vector>

#include "tnn/cell.hpp"
#include "tnn/coxeter.hpp"

namespace tnn {

struct Subexpression {
  Word host_word;
  std::vector<std::size_t> positions;  // sorted, 1-based
  Element value;
};

/// The positive subexpression v_+ of v in `w_word`, built greedily from the
/// right. Throws WordNotReduced, or NotComparable unless v <= w.
Subexpression positive_subexpression(const CoxeterSystem& system, Element v,
                                     std::span<const int> w_word);

/// Positions of the host word not in `sub` (1-based, sorted).
std::vector<std::size_t> complement(const Subexpression& sub);

/// The ascent property: for every unselected position r, the product of the
/// selected letters left of r is lengthened by s_{i_r}, and the selected
/// letters form a reduced word.
bool satisfies_positivity(const CoxeterSystem& system, std::span<const std::size_t> positions,
                          std::span<const int> w_word);

/// Product of the letters of `word` at the given 1-based positions.
Element subword_value(const CoxeterSystem& system, std::span<const std::size_t> positions,
                      std::span<const int> word);

/// Good-pair test for lo covered by hi inside one block (same w): the
/// positive subexpression of lo.x lo.u^-1 equals that of hi.x hi.u^-1 plus a
/// single position k, and the latter contains k+1..m. Pairs whose third
/// components differ are never good. Throws WordMismatch if `w_word` is not
/// a reduced word for w, NotACover if the projected elements are not a
/// Bruhat cover.
bool is_good_pair(const CoxeterSystem& system, const CellIndex& lo, const CellIndex& hi,
                  std::span<const int> w_word);

}  // namespace tnn
