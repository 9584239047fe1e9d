#include "tnn/morse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <json.hpp>

#include "tnn/error.hpp"
#include "tnn/subexpr.hpp"

namespace tnn {

namespace {

void normalize(MorseMatching& m) {
  std::sort(m.matched.begin(), m.matched.end());
  std::sort(m.critical.begin(), m.critical.end());
}

long sign(int rank) { return (rank % 2 == 0) ? 1 : -1; }

}  // namespace

bool is_matching(const HassePoset& poset, const MorseMatching& m) {
  std::vector<char> used(poset.size(), 0);
  for (const auto& c : m.matched) {
    if (!poset.cover_index(c.lower, c.upper)) return false;
    if (used[c.lower] || used[c.upper]) return false;
    used[c.lower] = used[c.upper] = 1;
  }
  std::vector<std::size_t> unmatched;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (!used[i]) unmatched.push_back(i);
  }
  auto critical = m.critical;
  std::sort(critical.begin(), critical.end());
  return critical == unmatched;
}

AcyclicityReport verify_acyclic(const HassePoset& poset, const MorseMatching& m) {
  const auto n = poset.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<char> matched_edge(poset.covers().size(), 0);
  for (const auto& c : m.matched) {
    if (auto k = poset.cover_index(c.lower, c.upper)) matched_edge[*k] = 1;
  }
  for (std::size_t k = 0; k < poset.covers().size(); ++k) {
    const auto& c = poset.covers()[k];
    if (matched_edge[k]) {
      out[c.lower].push_back(c.upper);
    } else {
      out[c.upper].push_back(c.lower);
    }
  }

  enum : char { White, Grey, Black };
  std::vector<char> colour(n, White);
  std::vector<std::size_t> parent(n, n);
  AcyclicityReport report;
  // Explicit stack of (vertex, next edge position).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != White) continue;
    stack.emplace_back(root, 0);
    colour[root] = Grey;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == out[v].size()) {
        colour[v] = Black;
        stack.pop_back();
        continue;
      }
      const auto next = out[v][pos++];
      if (colour[next] == White) {
        parent[next] = v;
        colour[next] = Grey;
        stack.emplace_back(next, 0);
      } else if (colour[next] == Grey) {
        report.acyclic = false;
        std::vector<std::size_t> cycle{next};
        for (auto u = v; u != next; u = parent[u]) cycle.push_back(u);
        cycle.push_back(next);
        std::reverse(cycle.begin(), cycle.end());
        report.cycle = std::move(cycle);
        return report;
      }
    }
  }
  return report;
}

std::size_t MorseSummary::total_critical() const {
  return std::accumulate(critical_by_dim.begin(), critical_by_dim.end(), std::size_t{0});
}

MorseSummary morse_summary(const HassePoset& poset, const MorseMatching& m) {
  MorseSummary s;
  if (poset.size() == 0) return s;
  const auto [lo, hi] = std::minmax_element(poset.ranks().begin(), poset.ranks().end());
  s.min_rank = *lo;
  s.critical_by_dim.assign(static_cast<std::size_t>(*hi - *lo + 1), 0);
  for (auto c : m.critical) {
    ++s.critical_by_dim[static_cast<std::size_t>(poset.rank(c) - s.min_rank)];
    s.euler_critical += sign(poset.rank(c));
  }
  for (auto r : poset.ranks()) s.euler_total += sign(r);
  return s;
}

MorseMatching chari_matching(const ELLabeling& labeling) {
  const auto& poset = labeling.poset;
  std::vector<std::size_t> order(poset.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return poset.rank(a) > poset.rank(b); });
  std::vector<char> matched(poset.size(), 0);
  MorseMatching m;
  for (auto sigma : order) {
    if (matched[sigma]) continue;
    const auto last = last_set(labeling, sigma);
    if (last.empty()) {
      m.critical.push_back(sigma);
      continue;
    }
    if (last.size() != 1) {
      throw Error(ErrorCode::MatchingConflict, "Last set of " + poset.label(sigma) + " is not a singleton");
    }
    const auto z = last.front();
    if (matched[z]) {
      throw Error(ErrorCode::MatchingConflict,
                  "Last element " + poset.label(z) + " of " + poset.label(sigma) + " is already matched");
    }
    matched[z] = matched[sigma] = 1;
    m.matched.push_back({z, sigma});
  }
  normalize(m);
  return m;
}

SxPoset make_Sx(const BruhatOrder& order, Element x, Element w, std::span<const int> w_word) {
  const auto& sys = order.system();
  if (!sys.is_reduced(w_word) || sys.evaluate(w_word) != w) {
    throw Error(ErrorCode::WordMismatch, format_word(w_word) + " is not a reduced word for " +
                                             format_word(sys.normal_form(w)));
  }
  SxPoset sx;
  sx.x = x;
  sx.w = w;
  sx.word.assign(w_word.begin(), w_word.end());
  sx.interval = bruhat_interval(order, x, w);
  sx.poset = sx.interval.poset.dual();
  for (auto v : sx.interval.elements) {
    sx.positive.push_back(positive_subexpression(sys, v, w_word).positions);
  }
  return sx;
}

SxMatching match_Sx(const BruhatOrder& order, Element x, Element w, std::span<const int> w_word,
                    const SxOptions& options) {
  const auto& sys = order.system();
  SxMatching out{make_Sx(order, x, w, w_word), {}};
  const auto& sx = out.sx;
  const auto n = sx.interval.elements.size();
  const auto m = w_word.size();

  std::vector<std::size_t> queue(n);
  std::iota(queue.begin(), queue.end(), std::size_t{0});
  std::sort(queue.begin(), queue.end(), [&](auto a, auto b) {
    if (sx.poset.rank(a) != sx.poset.rank(b)) return sx.poset.rank(a) > sx.poset.rank(b);
    return sx.positive[a] < sx.positive[b];
  });
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    for (auto first = queue.begin(); first != queue.end();) {
      auto last = std::find_if(first, queue.end(),
                               [&](auto i) { return sx.poset.rank(i) != sx.poset.rank(*first); });
      std::shuffle(first, last, rng);
      first = last;
    }
  }

  std::vector<char> matched(n, 0);
  for (auto i : queue) {
    if (matched[i]) continue;
    const auto& pos = sx.positive[i];
    std::size_t k = m;
    for (auto it = pos.rbegin(); it != pos.rend() && *it == k; ++it) --k;
    if (k == 0) {
      out.matching.critical.push_back(i);
      continue;
    }
    auto grown = pos;
    grown.insert(std::upper_bound(grown.begin(), grown.end(), k), k);
    const auto v = subword_value(sys, grown, w_word);
    const auto j = sx.interval.index_of(v);
    if (!j || sys.length(v) != sys.length(sx.interval.elements[i]) + 1 || sx.positive[*j] != grown) {
      throw Error(ErrorCode::MatchingConflict,
                  "v_+ plus position " + std::to_string(k) + " is not a positive subexpression");
    }
    if (matched[*j]) {
      throw Error(ErrorCode::MatchingConflict, "partner " + sx.poset.label(*j) + " already matched");
    }
    matched[i] = matched[*j] = 1;
    out.matching.matched.push_back({*j, i});
  }
  normalize(out.matching);
  return out;
}

bool order_independence_check(const BruhatOrder& order, Element x, Element w,
                              std::span<const int> w_word, std::size_t trials, std::uint64_t seed) {
  try {
    const auto reference = match_Sx(order, x, w, w_word).matching;
    for (std::size_t t = 0; t < trials; ++t) {
      SxOptions options;
      options.shuffle_seed = seed + t;
      if (match_Sx(order, x, w, w_word, options).matching != reference) return false;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MatchingConflict) return false;
    throw;
  }
  return true;
}

WordChoice shortlex_words(const CoxeterSystem& system) {
  return [&system](Element y) { return system.normal_form(y); };
}

ClosureMatching match_closure(const QPoset& q, std::size_t c, const WordChoice& words) {
  const auto& sys = q.system();
  const auto choose = words ? words : shortlex_words(sys);
  ClosureMatching out;
  out.cell = c;
  out.faces = closure_poset(q, c);
  for (const auto& block : partition_by_w(q, c)) {
    const auto word = choose(block.y);
    const auto sx = match_Sx(q.bruhat(), block.base, block.y, word);
    const auto& elems = sx.sx.interval.elements;
    if (elems.size() != block.cells.size()) {
      throw Error(ErrorCode::InvalidArgument, "block of " + format_word(sys.normal_form(block.y)) +
                                                  " does not match its Bruhat interval");
    }
    // Identify (a,b,y) with a b^-1.
    std::vector<std::size_t> global(elems.size());
    for (std::size_t k = 0; k < block.cells.size(); ++k) {
      auto idx = sx.sx.interval.index_of(block.projected[k]);
      if (!idx) throw Error(ErrorCode::InvalidArgument, "block element outside its Bruhat interval");
      global[*idx] = block.cells[k];
    }
    auto local = [&](std::size_t i) { return *out.faces.local_of(global[i]); };
    for (const auto& p : sx.matching.matched) out.matching.matched.push_back({local(p.lower), local(p.upper)});
    for (auto i : sx.matching.critical) out.matching.critical.push_back(local(i));
  }
  normalize(out.matching);
  return out;
}

ClosureMatching match_boundary(const QPoset& q, std::size_t c, const WordChoice& words) {
  if (c == q.bottom() || q.dimension(c) == 0) {
    throw Error(ErrorCode::ZeroDimensional, "a 0-cell has empty boundary");
  }
  const auto closure = match_closure(q, c, words);
  ClosureMatching out;
  out.cell = c;
  out.faces = boundary_poset(q, c);
  auto relocate = [&](std::size_t local) { return *out.faces.local_of(closure.faces.cells[local]); };
  for (const auto& p : closure.matching.matched) {
    const auto lo = closure.faces.cells[p.lower];
    const auto hi = closure.faces.cells[p.upper];
    if (hi == c) {
      out.matching.critical.push_back(relocate(p.lower));
    } else if (lo != c) {
      out.matching.matched.push_back({relocate(p.lower), relocate(p.upper)});
    }
  }
  for (auto i : closure.matching.critical) {
    if (closure.faces.cells[i] != c) out.matching.critical.push_back(relocate(i));
  }
  normalize(out.matching);
  return out;
}

GoodnessAudit audit_goodness(const QPoset& q, const ClosureMatching& m, const WordChoice& words) {
  const auto& sys = q.system();
  const auto choose = words ? words : shortlex_words(sys);
  GoodnessAudit audit;
  for (const auto& p : m.matching.matched) {
    const auto lo = m.faces.cells[p.lower];
    const auto hi = m.faces.cells[p.upper];
    ++audit.checked;
    bool good = false;
    try {
      good = is_good_pair(sys, q.cell(lo), q.cell(hi), choose(q.cell(hi).w));
    } catch (const Error&) {
      good = false;
    }
    if (good) {
      ++audit.good;
    } else if (!audit.first_bad) {
      audit.first_bad = Cover{lo, hi};
    }
  }
  return audit;
}

std::string matching_to_json(const HassePoset& poset, const MorseMatching& m) {
  auto matched = nlohmann::json::array();
  for (const auto& c : m.matched) matched.push_back({c.lower, c.upper});
  nlohmann::json j;
  j["matched"] = std::move(matched);
  j["critical"] = m.critical;
  j["labels"] = poset.labels();
  return j.dump();
}

std::string matching_to_dot(const HassePoset& poset, const MorseMatching& m, std::string_view name) {
  std::vector<char> is_matched(poset.covers().size(), 0);
  for (const auto& c : m.matched) {
    if (auto k = poset.cover_index(c.lower, c.upper)) is_matched[*k] = 1;
  }
  return poset.to_dot(name, [&](std::size_t k) -> std::string {
    return is_matched[k] ? "color=red, penwidth=3" : "color=gray60";
  });
}

}  // namespace tnn
