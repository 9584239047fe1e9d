#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "helpers.hpp"
#include "tnn/error.hpp"
#include "tnn/morse.hpp"
#include "tnn/subexpr.hpp"

using namespace tnn;
using testing::elem;
using testing::subset_from_mask;

namespace {

// Matched pairs as (lower, upper) group elements of S_x(w).
std::set<std::pair<Element, Element>> as_elements(const SxMatching& m) {
  std::set<std::pair<Element, Element>> out;
  for (const auto& c : m.matching.matched) {
    out.insert({m.sx.interval.elements[c.lower], m.sx.interval.elements[c.upper]});
  }
  return out;
}

// Acyclicity by repeatedly peeling off sources; independent of the DFS.
bool acyclic_by_peeling(const HassePoset& poset, const MorseMatching& m) {
  std::set<std::pair<std::size_t, std::size_t>> matched;
  for (const auto& c : m.matched) matched.insert({c.lower, c.upper});
  std::vector<std::vector<std::size_t>> out(poset.size());
  std::vector<std::size_t> indegree(poset.size(), 0);
  for (const auto& c : poset.covers()) {
    const bool up = matched.count({c.lower, c.upper}) > 0;
    const auto from = up ? c.lower : c.upper, to = up ? c.upper : c.lower;
    out[from].push_back(to);
    ++indegree[to];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++removed;
    for (auto t : out[v]) {
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }
  return removed == poset.size();
}

}  // namespace

TEST_CASE("matching invariants and acyclicity on small posets") {
  const HassePoset single({"p"}, {0}, {});
  const MorseMatching none{{}, {0}};
  CHECK(is_matching(single, none));
  CHECK(verify_acyclic(single, none).acyclic);

  const HassePoset diamond({"a", "b", "c", "d"}, {0, 1, 1, 2}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_matching(diamond, MorseMatching{{{0, 1}, {0, 2}}, {3}}));
  CHECK_FALSE(is_matching(diamond, MorseMatching{{{0, 3}}, {1, 2}}));
  CHECK(is_matching(diamond, MorseMatching{{{0, 1}, {2, 3}}, {}}));
  CHECK(verify_acyclic(diamond, MorseMatching{{{0, 1}}, {2, 3}}).acyclic);

  // Square boundary: matching around the cycle closes a gradient loop.
  const HassePoset square({"v1", "v2", "v3", "v4", "e12", "e23", "e34", "e41"}, {0, 0, 0, 0, 1, 1, 1, 1},
                          {{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {0, 7}});
  const MorseMatching loop{{{0, 4}, {1, 5}, {2, 6}, {3, 7}}, {}};
  const auto report = verify_acyclic(square, loop);
  CHECK_FALSE(report.acyclic);
  REQUIRE(report.cycle.size() >= 3);
  CHECK(report.cycle.front() == report.cycle.back());
  for (std::size_t i = 0; i + 1 < report.cycle.size(); ++i) {
    const auto a = report.cycle[i], b = report.cycle[i + 1];
    CHECK((square.cover_index(a, b).has_value() || square.cover_index(b, a).has_value()));
  }
  CHECK_FALSE(acyclic_by_peeling(square, loop));
}

TEST_CASE("M_x(w) examples") {
  const auto a2 = CoxeterSystem::build("A2");
  const BruhatOrder order(a2);
  const auto single = match_Sx(order, a2.generator(1), a2.generator(1), Word{1});
  CHECK(single.matching.matched.empty());
  CHECK(single.matching.critical.size() == 1);

  const auto full = match_Sx(order, a2.identity(), a2.longest(), Word{1, 2, 1});
  CHECK(full.matching.critical.empty());
  // (v, v') with v' = v plus one position; lower in S_x(w) is the longer element.
  const std::set<std::pair<Element, Element>> expected{
      {a2.generator(1), a2.identity()},
      {elem(a2, {2, 1}), a2.generator(2)},
      {a2.longest(), elem(a2, {1, 2})}};
  CHECK(as_elements(full) == expected);
  CHECK(is_matching(full.sx.poset, full.matching));
  CHECK(verify_acyclic(full.sx.poset, full.matching).acyclic);

  const auto a3 = CoxeterSystem::build("A3");
  const BruhatOrder o3(a3);
  const auto big = match_Sx(o3, a3.identity(), a3.longest(), a3.normal_form(a3.longest()));
  CHECK(big.matching.critical.empty());
  CHECK(big.matching.matched.size() == 12);

  try {
    (void)match_Sx(order, a2.generator(1), a2.generator(2), Word{2});
    FAIL("expected NotComparable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotComparable);
  }
  CHECK_THROWS_AS((void)match_Sx(order, a2.identity(), a2.longest(), Word{1, 2}), Error);
}

TEST_CASE("M_x(w) on every interval and reduced word") {
  for (const char* label : {"A3", "B2", "G2"}) {
    CAPTURE(label);
    const auto sys = CoxeterSystem::build(label);
    const BruhatOrder order(sys);
    for (auto w : sys.elements()) {
      for (const auto& word : all_reduced_words(sys, w)) {
        for (auto x : sys.elements()) {
          if (!order.leq(x, w)) continue;
          const auto m = match_Sx(order, x, w, word);
          CHECK(is_matching(m.sx.poset, m.matching));
          CHECK(m.matching.critical.size() == (x == w ? 1u : 0u));
          CHECK(verify_acyclic(m.sx.poset, m.matching).acyclic);
          CHECK(acyclic_by_peeling(m.sx.poset, m.matching));
          for (const auto& c : m.matching.matched) {
            CellIndex lo{m.sx.interval.elements[c.lower], sys.identity(), w};
            CellIndex hi{m.sx.interval.elements[c.upper], sys.identity(), w};
            CHECK(is_good_pair(sys, lo, hi, word));
          }
        }
      }
    }
  }
}

TEST_CASE("M_x(w) refines the Last sets of the matching reflection order") {
  for (const char* label : {"A2", "A3", "B2"}) {
    const auto sys = CoxeterSystem::build(label);
    const BruhatOrder order(sys);
    for (auto w : sys.elements()) {
      const auto& word = sys.normal_form(w);
      const auto ro = matching_reflection_order(sys, word);
      for (auto x : sys.elements()) {
        if (!order.leq(x, w)) continue;
        const auto m = match_Sx(order, x, w, word);
        const auto lab = dyer_labeling(sys, m.sx.interval, ro, true);
        for (const auto& c : m.matching.matched) {
          const auto last = last_set(lab, c.upper);
          CHECK(std::find(last.begin(), last.end(), c.lower) != last.end());
        }
      }
    }
  }
}

TEST_CASE("Chari matching") {
  const HassePoset single({"p"}, {0}, {});
  const ELLabeling trivial{single, {}, {}};
  const auto m0 = chari_matching(trivial);
  CHECK(m0.matched.empty());
  CHECK(m0.critical == std::vector<std::size_t>{0});

  // Dual of [e, w0] in A2 under the matching order: everything is matched,
  // and the result is M_e(w0) itself.
  const auto a2 = CoxeterSystem::build("A2");
  const BruhatOrder order(a2);
  const auto interval = bruhat_interval(order, a2.identity(), a2.longest());
  const auto lab = dyer_labeling(a2, interval, matching_reflection_order(a2, Word{1, 2, 1}), true);
  const auto m = chari_matching(lab);
  CHECK(m.critical.empty());
  CHECK(is_matching(lab.poset, m));
  CHECK(verify_acyclic(lab.poset, m).acyclic);
  CHECK(m == match_Sx(order, a2.identity(), a2.longest(), Word{1, 2, 1}).matching);

  // [e, s1s2s3s1s2s1] in A3, every reflection order from a reduced word of w0:
  // a matching of the whole interval with no critical element.
  const auto a3 = CoxeterSystem::build("A3");
  const BruhatOrder o3(a3);
  const auto iv = bruhat_interval(o3, a3.identity(), elem(a3, {1, 2, 3, 1, 2, 1}));
  for (const auto& word : all_reduced_words(a3, a3.longest())) {
    const auto l3 = dyer_labeling(a3, iv, reflection_order_from_word(a3, word), false);
    const auto m3 = chari_matching(l3);
    CHECK(is_matching(l3.poset, m3));
    CHECK(verify_acyclic(l3.poset, m3).acyclic);
    CHECK(acyclic_by_peeling(l3.poset, m3));
    CHECK(m3.critical.empty());
    for (const auto& c : m3.matched) {
      const auto last = last_set(l3, c.upper);
      CHECK(std::find(last.begin(), last.end(), c.lower) != last.end());
    }
  }
}

TEST_CASE("order independence") {
  const auto a2 = CoxeterSystem::build("A2");
  const BruhatOrder o2(a2);
  CHECK(order_independence_check(o2, a2.generator(1), a2.generator(1), Word{1}, 10, 1));
  CHECK(order_independence_check(o2, a2.identity(), a2.longest(), Word{1, 2, 1}, 10, 1));

  const auto a3 = CoxeterSystem::build("A3");
  const BruhatOrder o3(a3);
  const auto q = QPoset::build(o3, {});
  const auto reference = match_closure(q, q.top());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    // Shuffle inside every block by re-running M_x(w) with a seed.
    for (const auto& block : partition_by_w(q, q.top())) {
      const auto& word = a3.normal_form(block.y);
      SxOptions options;
      options.shuffle_seed = seed;
      CHECK(match_Sx(o3, block.base, block.y, word, options).matching ==
            match_Sx(o3, block.base, block.y, word).matching);
    }
  }
  CHECK(reference.matching.critical.size() == 1);
}

TEST_CASE("closure and boundary matchings") {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(label);
    const auto sys = CoxeterSystem::build(label);
    const BruhatOrder order(sys);
    for (int mask = 0; mask < (1 << sys.rank()); ++mask) {
      const auto q = QPoset::build(order, subset_from_mask(sys.rank(), mask));
      for (std::size_t c = 1; c < q.size(); ++c) {
        const auto cm = match_closure(q, c);
        const auto& poset = cm.faces.hasse;
        CHECK(is_matching(poset, cm.matching));
        CHECK(verify_acyclic(poset, cm.matching).acyclic);
        CHECK(acyclic_by_peeling(poset, cm.matching));
        REQUIRE(cm.matching.critical.size() == 1);
        const auto crit = cm.faces.cells[cm.matching.critical.front()];
        const auto& cell = q.cell(c);
        CHECK(q.dimension(crit) == 0);
        // The 0-cell over x whose third factor is the W^J part of x u^-1.
        const auto [wj, uj] = parabolic_factor(sys, q.parabolic(), cell.projected(sys));
        CHECK(q.cell(crit).x == cell.x);
        CHECK(q.cell(crit).w == wj);
        for (const auto& p : cm.matching.matched) {
          CHECK(q.cell(cm.faces.cells[p.lower]).w == q.cell(cm.faces.cells[p.upper]).w);
        }
        CHECK(audit_goodness(q, cm).all_good());

        const auto s = morse_summary(poset, cm.matching);
        CHECK(s.euler_total == 1);
        CHECK(s.euler_critical == s.euler_total);
        CHECK(s.total_critical() == 1);

        const int p = q.dimension(c);
        if (p == 0) {
          CHECK(cm.matching.matched.empty());
          CHECK_THROWS_AS((void)match_boundary(q, c), Error);
          continue;
        }
        const auto bm = match_boundary(q, c);
        CHECK(is_matching(bm.faces.hasse, bm.matching));
        CHECK(verify_acyclic(bm.faces.hasse, bm.matching).acyclic);
        const auto sb = morse_summary(bm.faces.hasse, bm.matching);
        std::multiset<int> dims;
        for (auto i : bm.matching.critical) dims.insert(bm.faces.hasse.rank(i));
        CHECK(dims == std::multiset<int>{0, p - 1});
        const long expected = 1 + ((p - 1) % 2 == 0 ? 1 : -1);
        CHECK(sb.euler_total == expected);
        CHECK(sb.euler_critical == expected);
      }
    }
  }
}

TEST_CASE("A1 top cell and Gr(2,4) top cell") {
  const auto a1 = CoxeterSystem::build("A1");
  const BruhatOrder o1(a1);
  const auto q1 = QPoset::build(o1, {});
  const auto m1 = match_closure(q1, q1.top());
  CHECK(m1.matching.matched.size() == 1);
  CHECK(m1.matching.critical.size() == 1);
  const auto b1 = match_boundary(q1, q1.top());
  CHECK(b1.matching.critical.size() == 2);
  CHECK(b1.matching.matched.empty());

  const auto a3 = CoxeterSystem::build("A3");
  const BruhatOrder o3(a3);
  const auto gr = QPoset::build(o3, {1, 3});
  const auto top = match_closure(gr, gr.top());
  CHECK(top.matching.critical.size() == 1);
  const auto audit = audit_goodness(gr, top);
  CHECK(audit.all_good());
  CHECK(audit.checked == top.matching.matched.size());
  const auto bd = match_boundary(gr, gr.top());
  std::multiset<int> dims;
  for (auto i : bd.matching.critical) dims.insert(bd.faces.hasse.rank(i));
  CHECK(dims == std::multiset<int>{0, 3});
}

TEST_CASE("goodness audit catches a corrupted matching") {
  const auto a2 = CoxeterSystem::build("A2");
  const BruhatOrder order(a2);
  const auto q = QPoset::build(order, {});
  auto cm = match_closure(q, q.top());
  // Re-pair the top cell with a different face.
  const auto top_local = *cm.faces.local_of(q.top());
  for (auto& p : cm.matching.matched) {
    if (p.upper != top_local) continue;
    for (auto d : cm.faces.hasse.down(top_local)) {
      if (d != p.lower) {
        p.lower = d;
        break;
      }
    }
  }
  const auto audit = audit_goodness(q, cm);
  CHECK_FALSE(audit.all_good());
  CHECK(audit.first_bad.has_value());
}

TEST_CASE("word choice") {
  const auto a3 = CoxeterSystem::build("A3");
  const BruhatOrder order(a3);
  const auto q = QPoset::build(order, {2});
  auto last_word = [&](Element y) { return all_reduced_words(a3, y).back(); };
  for (std::size_t c = 1; c < q.size(); ++c) {
    const auto cm = match_closure(q, c, last_word);
    CHECK(cm.matching.critical.size() == 1);
    CHECK(audit_goodness(q, cm, last_word).all_good());
    CHECK(verify_acyclic(cm.faces.hasse, cm.matching).acyclic);
  }
}

TEST_CASE("exports") {
  const auto a2 = CoxeterSystem::build("A2");
  const BruhatOrder order(a2);
  const auto m = match_Sx(order, a2.identity(), a2.longest(), Word{1, 2, 1});
  const auto j = nlohmann::json::parse(matching_to_json(m.sx.poset, m.matching));
  CHECK(j["matched"].size() == 3);
  CHECK(j["critical"].empty());
  const auto dot = matching_to_dot(m.sx.poset, m.matching, "M");
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("color=gray60") != std::string::npos);
}
