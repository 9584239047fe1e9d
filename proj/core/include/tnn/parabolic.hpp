#pragma once

#include <utility>
#include <vector>

#include "tnn/coxeter.hpp"

namespace tnn {

/// W_J together with the minimal (W^J) and maximal (W^J_max) length coset
/// representatives of W / W_J.
struct ParabolicData {
  std::vector<int> J;  // sorted, 1-based
  std::vector<Element> subgroup;
  std::vector<Element> min_reps;
  std::vector<Element> max_reps;
  Element subgroup_longest;  // u0
  Element min_rep_longest;   // w0^J

  [[nodiscard]] bool in_subgroup(Element w) const { return subgroup_flag[w.index()] != 0; }
  [[nodiscard]] bool is_min_rep(Element w) const { return min_flag[w.index()] != 0; }
  [[nodiscard]] bool is_max_rep(Element w) const { return max_flag[w.index()] != 0; }

  std::vector<char> subgroup_flag;
  std::vector<char> min_flag;
  std::vector<char> max_flag;
};

/// Validates and normalizes J (sorted, deduplicated, within 1..rank).
std::vector<int> normalize_parabolic(const CoxeterSystem& system, std::vector<int> J);

ParabolicData parabolic_data(const CoxeterSystem& system, std::vector<int> J);

/// w = w^J * w_J with w^J in W^J, w_J in W_J and lengths adding.
std::pair<Element, Element> parabolic_factor(const CoxeterSystem& system, const ParabolicData& data,
                                             Element w);

/// All (u1, u2) with u1 * u2 = u and l(u) = l(u1) + l(u2), ordered by
/// (l(u1), index of u1). Always contains (e, u) and (u, e).
std::vector<std::pair<Element, Element>> length_additive_factorizations(const CoxeterSystem& system,
                                                                        Element u);

}  // namespace tnn
