#include "tnn/qposet.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "tnn/error.hpp"

namespace tnn {

namespace {

// For a = (x,u,w): the pairs (x u2^-1, w u1) over length-additive u = u1 u2
// with x u2^-1 <= w u1. Then a <= b iff some pair (p, q) has
// x' u'^-1 <= p and q <= w'.
std::vector<std::pair<Element, Element>> chain_pairs(const BruhatOrder& order, const CellIndex& a) {
  const auto& sys = order.system();
  std::vector<std::pair<Element, Element>> out;
  for (auto [u1, u2] : length_additive_factorizations(sys, a.u)) {
    auto p = sys.multiply(a.x, sys.inverse(u2));
    auto q = sys.multiply(a.w, u1);
    if (order.leq(p, q)) out.emplace_back(p, q);
  }
  return out;
}

bool leq_via_pairs(const BruhatOrder& order, const std::vector<std::pair<Element, Element>>& pairs,
                   Element b_projected, Element b_w) {
  return std::any_of(pairs.begin(), pairs.end(), [&](const auto& pq) {
    return order.leq(b_projected, pq.first) && order.leq(pq.second, b_w);
  });
}

bool is_bruhat_cover(const BruhatOrder& order, Element lower, Element upper) {
  const auto& sys = order.system();
  return sys.length(upper) == sys.length(lower) + 1 && order.leq(lower, upper);
}

}  // namespace

std::vector<CellIndex> enumerate_cells(const BruhatOrder& order, const ParabolicData& parabolic) {
  const auto& sys = order.system();
  std::vector<CellIndex> out;
  for (auto x : parabolic.max_reps) {
    for (auto u : parabolic.subgroup) {
      for (auto w : parabolic.min_reps) {
        if (order.leq(x, sys.multiply(w, u))) out.push_back(CellIndex{x, u, w, false});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const CellIndex& a, const CellIndex& b) {
    return a.dimension(sys) < b.dimension(sys);
  });
  return out;
}

bool q_leq(const BruhatOrder& order, const CellIndex& a, const CellIndex& b) {
  if (a.is_bottom) return true;
  if (b.is_bottom) return false;
  return leq_via_pairs(order, chain_pairs(order, a), b.projected(order.system()), b.w);
}

CoverType classify_cover(const BruhatOrder& order, const CellIndex& lo, const CellIndex& hi) {
  const auto& sys = order.system();
  if (hi.is_bottom) throw Error(ErrorCode::UnclassifiableCover, "bottom cannot be an upper cover");
  if (lo.is_bottom) {
    if (hi.dimension(sys) == 0 && hi.x == sys.multiply(hi.w, hi.u)) return CoverType::Type3;
    throw Error(ErrorCode::UnclassifiableCover, "bottom under non-0-cell " + hi.describe(sys));
  }
  if (lo.w == hi.w && order.less(hi.x, lo.x)) {
    if (is_bruhat_cover(order, hi.projected(sys), lo.projected(sys))) return CoverType::Type1;
    throw Error(ErrorCode::UnclassifiableCover,
                "type 1 consequence fails for " + lo.describe(sys) + " < " + hi.describe(sys));
  }
  if (lo.x == hi.x && order.leq(lo.w, hi.w)) {
    if (is_bruhat_cover(order, sys.multiply(lo.w, lo.u), sys.multiply(hi.w, hi.u))) {
      return CoverType::Type2;
    }
    throw Error(ErrorCode::UnclassifiableCover,
                "type 2 consequence fails for " + lo.describe(sys) + " < " + hi.describe(sys));
  }
  throw Error(ErrorCode::UnclassifiableCover, lo.describe(sys) + " < " + hi.describe(sys));
}

QPoset QPoset::build(const BruhatOrder& order, std::vector<int> J, const QPosetOptions& options) {
  const auto& sys = order.system();
  QPoset q;
  q.order_ = &order;
  q.parabolic_ = parabolic_data(sys, std::move(J));
  auto cells = enumerate_cells(order, q.parabolic_);
  if (cells.size() + 1 > options.max_cells) {
    throw Error(ErrorCode::GroupTooLarge, std::to_string(cells.size()) + " cells exceed the cap of " +
                                              std::to_string(options.max_cells));
  }
  q.cells_.push_back(CellIndex::bottom());
  q.cells_.insert(q.cells_.end(), cells.begin(), cells.end());
  const auto n = q.cells_.size();
  for (std::size_t i = 1; i < n; ++i) q.lookup_.emplace(q.key(q.cells_[i]), i);
  q.dims_.resize(n);
  for (std::size_t i = 0; i < n; ++i) q.dims_[i] = q.cells_[i].dimension(sys);

  std::vector<Element> projected(n);
  std::vector<std::vector<std::pair<Element, Element>>> pairs(n);
  for (std::size_t i = 1; i < n; ++i) {
    projected[i] = q.cells_[i].projected(sys);
    pairs[i] = chain_pairs(order, q.cells_[i]);
  }
  q.above_.assign(n, Bitset(n));
  for (std::size_t b = 1; b < n; ++b) q.above_[0].set(b);
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) {
      if (a != b && leq_via_pairs(order, pairs[a], projected[b], q.cells_[b].w)) q.above_[a].set(b);
    }
  }

  std::vector<Cover> plain;
  for (const auto& c : transitive_reduction(q.above_)) {
    q.covers_.push_back({c.lower, c.upper, classify_cover(order, q.cells_[c.lower], q.cells_[c.upper])});
    plain.push_back(c);
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& c : q.cells_) labels.push_back(c.describe(sys));
  q.hasse_ = HassePoset(std::move(labels), q.dims_, std::move(plain));

  const auto maxima = q.hasse_.maximal_elements();
  if (maxima.size() != 1) throw Error(ErrorCode::InvalidArgument, "Q^J has no unique greatest element");
  q.top_ = maxima.front();
  return q;
}

int QPoset::max_dimension() const { return *std::max_element(dims_.begin(), dims_.end()); }

std::optional<std::size_t> QPoset::index_of(const CellIndex& c) const {
  if (c.is_bottom) return 0;
  const auto it = lookup_.find(key(c));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t QPoset::key(const CellIndex& c) const {
  const std::uint64_t n = system().order();
  return (static_cast<std::uint64_t>(c.x.index()) * n + c.u.index()) * n + c.w.index();
}

std::vector<std::size_t> QPoset::dimension_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_dimension()) + 1, 0);
  for (std::size_t i = 1; i < cells_.size(); ++i) ++counts[static_cast<std::size_t>(dims_[i])];
  return counts;
}

std::string QPoset::cells_to_json() const {
  const auto& sys = system();
  auto arr = nlohmann::json::array();
  for (std::size_t i = 1; i < cells_.size(); ++i) {
    const auto& c = cells_[i];
    arr.push_back({{"x", sys.normal_form(c.x)},
                   {"u", sys.normal_form(c.u)},
                   {"w", sys.normal_form(c.w)},
                   {"dim", dims_[i]}});
  }
  return arr.dump();
}

std::string QPoset::to_dot() const {
  return hasse_.to_dot("Q^J " + system().label(), [&](std::size_t k) -> std::string {
    switch (covers_[k].type) {
      case CoverType::Type1: return "color=blue";
      case CoverType::Type2: return "color=red";
      case CoverType::Type3: return "color=gray, style=dashed";
    }
    return {};
  });
}

std::optional<std::size_t> CellSubposet::local_of(std::size_t global) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), global);
  if (it == cells.end() || *it != global) return std::nullopt;
  return static_cast<std::size_t>(it - cells.begin());
}

namespace {

CellSubposet induced(const QPoset& q, std::vector<std::size_t> members) {
  CellSubposet out;
  out.cells = std::move(members);
  std::vector<std::string> labels;
  std::vector<int> ranks;
  for (auto g : out.cells) {
    labels.push_back(q.hasse().label(g));
    ranks.push_back(q.dimension(g));
  }
  std::vector<Cover> covers;
  for (const auto& c : q.covers()) {
    auto lo = out.local_of(c.lower);
    auto hi = out.local_of(c.upper);
    if (lo && hi) covers.push_back({*lo, *hi});
  }
  out.hasse = HassePoset(std::move(labels), std::move(ranks), std::move(covers));
  return out;
}

}  // namespace

CellSubposet closure_poset(const QPoset& q, std::size_t c, bool include_bottom) {
  if (c == q.bottom()) throw Error(ErrorCode::InvalidArgument, "closure of the bottom element");
  std::vector<std::size_t> members;
  for (std::size_t d = include_bottom ? 0 : 1; d < q.size(); ++d) {
    if (q.leq(d, c)) members.push_back(d);
  }
  return induced(q, std::move(members));
}

CellSubposet boundary_poset(const QPoset& q, std::size_t c) {
  if (c == q.bottom() || q.dimension(c) == 0) {
    throw Error(ErrorCode::ZeroDimensional, "a 0-cell has empty boundary");
  }
  std::vector<std::size_t> members;
  for (std::size_t d = 1; d < q.size(); ++d) {
    if (d != c && q.leq(d, c)) members.push_back(d);
  }
  return induced(q, std::move(members));
}

std::vector<Block> partition_by_w(const QPoset& q, std::size_t c) {
  const auto& sys = q.system();
  const auto& order = q.bruhat();
  std::map<Element, Block> blocks;
  for (std::size_t d = 1; d < q.size(); ++d) {
    if (!q.leq(d, c)) continue;
    const auto& cell = q.cell(d);
    auto& block = blocks[cell.w];
    block.y = cell.w;
    block.cells.push_back(d);
    block.projected.push_back(cell.projected(sys));
  }
  std::vector<Block> out;
  for (auto& [y, block] : blocks) {
    // x'u'^-1 need not lie above the projection of c when J is nonempty, so
    // the base is the least projected element of the block itself.
    const auto& p = block.projected;
    const auto least = std::min_element(p.begin(), p.end(), [&](Element a, Element b) {
      return sys.length(a) < sys.length(b);
    });
    for (auto z : p) {
      if (!order.leq(*least, z)) {
        throw Error(ErrorCode::InvalidArgument,
                    "block of " + format_word(sys.normal_form(y)) + " has no least element");
      }
    }
    block.base = *least;
    out.push_back(std::move(block));
  }
  return out;
}

}  // namespace tnn
