#include "tnn/subexpr.hpp"

#include <algorithm>

#include "tnn/bruhat.hpp"
#include "tnn/error.hpp"

namespace tnn {

Subexpression positive_subexpression(const CoxeterSystem& system, Element v,
                                     std::span<const int> w_word) {
  if (!system.is_reduced(w_word)) {
    throw Error(ErrorCode::WordNotReduced, format_word(w_word));
  }
  Subexpression sub;
  sub.host_word.assign(w_word.begin(), w_word.end());
  sub.value = v;
  // Scan right to left, taking a letter whenever it is a right descent of
  // what remains of v.
  Element rest = v;
  for (std::size_t r = w_word.size(); r >= 1; --r) {
    const int s = w_word[r - 1];
    if (system.is_right_descent(rest, s)) {
      rest = system.right_multiply(rest, s);
      sub.positions.push_back(r);
    }
  }
  if (rest != system.identity()) {
    throw Error(ErrorCode::NotComparable, format_word(system.normal_form(v)) +
                                              " is not below " + format_word(w_word));
  }
  std::reverse(sub.positions.begin(), sub.positions.end());
  return sub;
}

std::vector<std::size_t> complement(const Subexpression& sub) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t r = 1; r <= sub.host_word.size(); ++r) {
    if (k < sub.positions.size() && sub.positions[k] == r) {
      ++k;
    } else {
      out.push_back(r);
    }
  }
  return out;
}

Element subword_value(const CoxeterSystem& system, std::span<const std::size_t> positions,
                      std::span<const int> word) {
  Element v = system.identity();
  for (auto j : positions) {
    if (j < 1 || j > word.size()) throw Error(ErrorCode::InvalidArgument, "position out of range");
    v = system.right_multiply(v, word[j - 1]);
  }
  return v;
}

bool satisfies_positivity(const CoxeterSystem& system, std::span<const std::size_t> positions,
                          std::span<const int> w_word) {
  Element prefix = system.identity();
  std::size_t k = 0;
  for (std::size_t r = 1; r <= w_word.size(); ++r) {
    const int s = w_word[r - 1];
    const bool selected = k < positions.size() && positions[k] == r;
    if (system.is_right_descent(prefix, s)) return false;
    if (selected) {
      prefix = system.right_multiply(prefix, s);
      ++k;
    }
  }
  return k == positions.size();
}

bool is_good_pair(const CoxeterSystem& system, const CellIndex& lo, const CellIndex& hi,
                  std::span<const int> w_word) {
  if (lo.is_bottom || hi.is_bottom) {
    throw Error(ErrorCode::NotACover, "the bottom element has no positive subexpression");
  }
  if (lo.w != hi.w) return false;
  if (!system.is_reduced(w_word) || system.evaluate(w_word) != hi.w) {
    throw Error(ErrorCode::WordMismatch,
                format_word(w_word) + " is not a reduced word for " +
                    format_word(system.normal_form(hi.w)));
  }
  const auto v_lo = lo.projected(system);
  const auto v_hi = hi.projected(system);
  if (system.length(v_lo) != system.length(v_hi) + 1 || !bruhat_leq(system, v_hi, v_lo)) {
    throw Error(ErrorCode::NotACover, lo.describe(system) + " is not covered by " + hi.describe(system));
  }
  const auto lo_pos = positive_subexpression(system, v_lo, w_word).positions;
  const auto hi_pos = positive_subexpression(system, v_hi, w_word).positions;
  std::vector<std::size_t> extra;
  std::set_difference(lo_pos.begin(), lo_pos.end(), hi_pos.begin(), hi_pos.end(),
                      std::back_inserter(extra));
  if (extra.size() != 1 || !std::includes(lo_pos.begin(), lo_pos.end(), hi_pos.begin(), hi_pos.end())) {
    return false;
  }
  const auto k = extra.front();
  for (auto r = k + 1; r <= w_word.size(); ++r) {
    if (!std::binary_search(hi_pos.begin(), hi_pos.end(), r)) return false;
  }
  return true;
}

}  // namespace tnn
