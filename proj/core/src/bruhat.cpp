#include "tnn/bruhat.hpp"

#include <algorithm>
#include <unordered_map>

#include "tnn/error.hpp"
#include "tnn/subexpr.hpp"

namespace tnn {

bool bruhat_leq(const CoxeterSystem& system, Element v, Element w) {
  system.check(v);
  system.check(w);
  while (true) {
    if (system.length(v) > system.length(w)) return false;
    if (system.length(w) == 0) return system.length(v) == 0;
    // s is a right descent of w: v <= w iff min(v, vs) <= ws.
    const int s = system.normal_form(w).back();
    if (system.is_right_descent(v, s)) v = system.right_multiply(v, s);
    w = system.right_multiply(w, s);
  }
}

BruhatOrder::BruhatOrder(const CoxeterSystem& system, std::size_t dense_limit) : system_(&system) {
  const auto n = system.order();
  if (n > dense_limit) return;
  lower_.assign(n, Bitset(n));
  lower_[0].set(0);
  // Elements are in ShortLex order, so ws precedes w.
  for (std::size_t i = 1; i < n; ++i) {
    const auto w = system.element(i);
    const int s = system.normal_form(w).back();
    const auto ws = system.right_multiply(w, s);
    auto& row = lower_[i];
    row = lower_[ws.index()];
    const auto& base = lower_[ws.index()];
    for (auto u = base.find_first(); u != Bitset::npos; u = base.find_next(u)) {
      row.set(system.right_multiply(system.element(u), s).index());
    }
  }
}

bool BruhatOrder::leq(Element v, Element w) const {
  if (lower_.empty()) return bruhat_leq(*system_, v, w);
  system_->check(v);
  system_->check(w);
  return lower_[w.index()].test(v.index());
}

std::vector<Element> bruhat_covers(const CoxeterSystem& system, Element w) {
  std::vector<Element> out;
  const int target = system.length(w) - 1;
  for (const auto& t : system.reflections()) {
    auto wt = system.multiply(w, t.element);
    if (system.length(wt) == target) out.push_back(wt);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> BruhatInterval::index_of(Element z) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), z);
  if (it == elements.end() || *it != z) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

BruhatInterval bruhat_interval(const BruhatOrder& order, Element v, Element w) {
  const auto& system = order.system();
  if (!order.leq(v, w)) {
    throw Error(ErrorCode::NotComparable, format_word(system.normal_form(v)) + " is not below " +
                                              format_word(system.normal_form(w)));
  }
  BruhatInterval out;
  out.bottom = v;
  out.top = w;
  for (auto z : system.elements()) {
    if (order.leq(v, z) && order.leq(z, w)) out.elements.push_back(z);
  }
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    const auto z = out.elements[i];
    labels.push_back(format_word(system.normal_form(z)));
    ranks.push_back(system.length(z));
    for (auto y : bruhat_covers(system, z)) {
      if (auto j = out.index_of(y)) covers.push_back({*j, i});
    }
  }
  out.poset = HassePoset(std::move(labels), std::move(ranks), std::move(covers));
  return out;
}

ThinnessReport is_thin(const HassePoset& poset) {
  if (!poset.is_graded()) throw Error(ErrorCode::NotGraded, "poset is not graded");
  ThinnessReport report;
  std::unordered_map<std::size_t, std::size_t> paths;
  for (std::size_t p = 0; p < poset.size(); ++p) {
    paths.clear();
    for (auto m : poset.up(p)) {
      for (auto q : poset.up(m)) ++paths[q];
    }
    std::vector<std::pair<std::size_t, std::size_t>> sorted(paths.begin(), paths.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto [q, count] : sorted) {
      if (count != 2) {
        report.thin = false;
        report.violation = Cover{p, q};
        report.middle_count = count;
        return report;
      }
    }
  }
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> find_deletion_pairs(const CoxeterSystem& system,
                                                                     std::span<const int> word) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = word.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = r + 1; t < n; ++t) {
      auto factor = word.subspan(r, t - r + 1);
      if (system.is_reduced(factor)) continue;
      if (system.is_reduced(factor.subspan(1)) &&
          system.is_reduced(factor.subspan(0, factor.size() - 1))) {
        out.emplace_back(r + 1, t + 1);
      }
    }
  }
  return out;
}

bool check_gamma_reduced(const CoxeterSystem& system, Element x, std::span<const int> w_word,
                         std::size_t p) {
  if (p < 1 || p > w_word.size() + 1) {
    throw Error(ErrorCode::InvalidArgument, "p must lie in 1..t+1");
  }
  const auto sub = positive_subexpression(system, x, w_word);
  std::vector<char> keep(w_word.size() + 1, 0);
  for (auto j : sub.positions) keep[j] = 1;
  Word gamma;
  for (std::size_t r = 1; r <= w_word.size(); ++r) {
    if (keep[r] || r >= p) gamma.push_back(w_word[r - 1]);
  }
  return system.is_reduced(gamma);
}

}  // namespace tnn
