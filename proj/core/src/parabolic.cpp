#include "tnn/parabolic.hpp"

#include <algorithm>
#include <set>

#include "tnn/error.hpp"

namespace tnn {

std::vector<int> normalize_parabolic(const CoxeterSystem& system, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int s : J) {
    if (s < 1 || s > system.rank()) {
      throw Error(ErrorCode::InvalidArgument,
                  "parabolic index " + std::to_string(s) + " outside 1.." + std::to_string(system.rank()));
    }
  }
  return J;
}

ParabolicData parabolic_data(const CoxeterSystem& system, std::vector<int> J) {
  ParabolicData data;
  data.J = normalize_parabolic(system, std::move(J));
  const auto n = system.order();
  data.subgroup_flag.assign(n, 0);
  data.min_flag.assign(n, 0);
  data.max_flag.assign(n, 0);

  for (auto w : system.elements()) {
    const auto& word = system.normal_form(w);
    const bool in_j = std::all_of(word.begin(), word.end(), [&](int s) {
      return std::binary_search(data.J.begin(), data.J.end(), s);
    });
    bool no_descent = true;
    bool all_descent = true;
    for (int s : data.J) {
      if (system.is_right_descent(w, s)) {
        no_descent = false;
      } else {
        all_descent = false;
      }
    }
    if (in_j) {
      data.subgroup_flag[w.index()] = 1;
      data.subgroup.push_back(w);
    }
    if (no_descent) {
      data.min_flag[w.index()] = 1;
      data.min_reps.push_back(w);
    }
    if (all_descent) {
      data.max_flag[w.index()] = 1;
      data.max_reps.push_back(w);
    }
  }
  auto longest_of = [&](const std::vector<Element>& v) {
    return *std::max_element(v.begin(), v.end(), [&](Element a, Element b) {
      return system.length(a) < system.length(b);
    });
  };
  data.subgroup_longest = longest_of(data.subgroup);
  data.min_rep_longest = longest_of(data.min_reps);
  return data;
}

std::pair<Element, Element> parabolic_factor(const CoxeterSystem& system, const ParabolicData& data,
                                             Element w) {
  Element head = w;
  Element tail = system.identity();
  for (bool changed = true; changed;) {
    changed = false;
    for (int s : data.J) {
      if (system.is_right_descent(head, s)) {
        head = system.right_multiply(head, s);
        tail = system.left_multiply(s, tail);
        changed = true;
        break;
      }
    }
  }
  return {head, tail};
}

std::vector<std::pair<Element, Element>> length_additive_factorizations(const CoxeterSystem& system,
                                                                        Element u) {
  // Prefixes u1 of u are reached by stripping right descents.
  std::set<Element> prefixes{u};
  std::vector<Element> frontier{u};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (auto v : frontier) {
      for (int s = 1; s <= system.rank(); ++s) {
        if (!system.is_right_descent(v, s)) continue;
        auto vs = system.right_multiply(v, s);
        if (prefixes.insert(vs).second) next.push_back(vs);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<Element, Element>> out;
  for (auto u1 : prefixes) out.emplace_back(u1, system.multiply(system.inverse(u1), u));
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (system.length(a.first) != system.length(b.first)) {
      return system.length(a.first) < system.length(b.first);
    }
    return a.first < b.first;
  });
  return out;
}

}  // namespace tnn
