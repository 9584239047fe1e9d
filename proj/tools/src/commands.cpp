#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tnn/bruhat.hpp"
#include "tnn/cli/app.hpp"
#include "tnn/error.hpp"
#include "tnn/homology.hpp"
#include "tnn/morse.hpp"
#include "tnn/qposet.hpp"
#include "tnn/shelling.hpp"

namespace tnn::cli {

namespace {

using json = nlohmann::json;

struct IOFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word parse_word(const std::string& text) {
  Word word;
  if (text.empty() || text == "e") return word;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::ParseError, "bad generator '" + item + "' in word '" + text + "'");
    }
    word.push_back(std::stoi(item));
  }
  return word;
}

std::vector<std::string> split_colon(const std::string& text, std::size_t parts, const char* what) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(':', start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (out.size() != parts) throw Error(ErrorCode::ParseError, std::string("expected ") + what + ", got '" + text + "'");
  return out;
}

Element element_of(const CoxeterSystem& sys, const std::string& text) {
  return sys.evaluate(parse_word(text));
}

std::size_t cell_of(const QPoset& q, const std::optional<std::string>& text) {
  if (!text) return q.top();
  const auto& sys = q.system();
  const auto parts = split_colon(*text, 3, "x:u:w");
  const CellIndex c{element_of(sys, parts[0]), element_of(sys, parts[1]), element_of(sys, parts[2])};
  const auto idx = q.index_of(c);
  if (!idx || *idx == q.bottom()) throw Error(ErrorCode::InvalidArgument, "not a cell of Q^J: " + *text);
  return *idx;
}

std::string format_set(const std::vector<int>& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
  return s + "}";
}

json header(const RunConfig& config, const CoxeterSystem& sys) {
  json j;
  j["schema"] = kSchema;
  j["command"] = config.command;
  j["type"] = sys.label();
  return j;
}

struct Session {
  CoxeterSystem system;
  BruhatOrder order;

  explicit Session(const RunConfig& config)
      : system(CoxeterSystem::build(config.type, BuildOptions{config.cap_group})), order(system) {}
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IOFailure("cannot open " + path.string() + " for writing");
  file << text;
  file.close();
  if (!file) throw IOFailure("write failed: " + path.string());
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  Session s(config);
  const auto q = QPoset::build(s.order, config.parabolic);
  const auto counts = q.dimension_counts();
  switch (config.format) {
    case Format::Dot:
      out << q.to_dot();
      break;
    case Format::Json: {
      auto j = header(config, s.system);
      j["parabolic"] = q.parabolic().J;
      j["total"] = q.size() - 1;
      j["counts"] = counts;
      j["cells"] = json::parse(q.cells_to_json());
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      out << s.system.label() << " J=" << format_set(q.parabolic().J) << ": " << q.size() - 1
          << " cells plus bottom\n";
      for (std::size_t d = 0; d < counts.size(); ++d) out << "  dim " << d << ": " << counts[d] << "\n";
      for (std::size_t i = 1; i < q.size(); ++i) {
        out << "  " << q.dimension(i) << "  " << q.cell(i).describe(s.system) << "\n";
      }
      break;
  }
  return kExitOk;
}

// ---- label -----------------------------------------------------------------

int cmd_label(const RunConfig& config, std::ostream& out) {
  Session s(config);
  const auto& sys = s.system;
  Element v = sys.identity(), w = sys.longest();
  if (config.interval) {
    const auto parts = split_colon(*config.interval, 2, "v:w");
    v = element_of(sys, parts[0]);
    w = element_of(sys, parts[1]);
  }
  const Word w0_word = config.order_word ? parse_word(*config.order_word) : sys.normal_form(sys.longest());
  auto order = reflection_order_from_word(sys, w0_word);
  if (config.reverse_order) order = reverse_order(sys, order);
  const auto interval = bruhat_interval(s.order, v, w);
  const auto labeling = dyer_labeling(sys, interval, order, false);
  const auto report = verify_EL(labeling);

  switch (config.format) {
    case Format::Dot:
      out << labeling.poset.to_dot("labeling", [&](std::size_t k) {
        return "label=\"" + std::to_string(labeling.label_rank[k]) + "\"";
      });
      break;
    case Format::Json: {
      auto j = header(config, sys);
      j["interval"] = {{"bottom", sys.normal_form(v)}, {"top", sys.normal_form(w)}};
      j["order_word"] = w0_word;
      j["reversed"] = config.reverse_order;
      json el;
      el["ok"] = report.ok;
      el["intervals_checked"] = report.intervals_checked;
      el["increasing_chains"] = report.increasing_chains;
      el["violation"] = report.violation
                            ? json{labeling.poset.label(report.violation->lower),
                                   labeling.poset.label(report.violation->upper)}
                            : json(nullptr);
      j["el"] = el;
      j["poset"] = json::parse(labeling.poset.to_json());
      j["labeling"] = json::parse(labeling_to_json(labeling));
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      out << sys.label() << " [" << format_word(sys.normal_form(v)) << ", " << format_word(sys.normal_form(w))
          << "], order from " << format_word(w0_word) << (config.reverse_order ? " reversed" : "") << "\n";
      out << "  " << interval.elements.size() << " elements, " << labeling.poset.covers().size() << " covers\n";
      out << "  EL " << (report.ok ? "holds" : "FAILS") << " on " << report.intervals_checked << " intervals\n";
      if (report.violation) {
        out << "  violation: [" << labeling.poset.label(report.violation->lower) << ", "
            << labeling.poset.label(report.violation->upper) << "]\n";
      }
      break;
  }
  return report.ok ? kExitOk : kExitInvariant;
}

// ---- match -----------------------------------------------------------------

int cmd_match(const RunConfig& config, std::ostream& out) {
  Session s(config);
  const auto q = QPoset::build(s.order, config.parabolic);
  const auto c = cell_of(q, config.cell);
  const auto m = config.boundary ? match_boundary(q, c) : match_closure(q, c);
  const auto& poset = m.faces.hasse;
  const auto summary = morse_summary(poset, m.matching);
  const auto acyclic = verify_acyclic(poset, m.matching);
  const auto audit = audit_goodness(q, m);
  const bool ok = is_matching(poset, m.matching) && acyclic.acyclic && audit.all_good();

  switch (config.format) {
    case Format::Dot:
      out << matching_to_dot(poset, m.matching, config.boundary ? "boundary" : "closure");
      break;
    case Format::Json: {
      auto j = header(config, s.system);
      j["parabolic"] = q.parabolic().J;
      j["cell"] = q.cell(c).describe(s.system);
      j["boundary"] = config.boundary;
      j["matching"] = json::parse(matching_to_json(poset, m.matching));
      j["critical_by_dim"] = summary.critical_by_dim;
      j["min_dim"] = summary.min_rank;
      j["euler_critical"] = summary.euler_critical;
      j["euler_total"] = summary.euler_total;
      j["acyclic"] = acyclic.acyclic;
      j["good_pairs"] = audit.good;
      j["matched_pairs"] = audit.checked;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      out << (config.boundary ? "boundary of " : "closure of ") << q.cell(c).describe(s.system) << ": "
          << poset.size() << " faces, " << m.matching.matched.size() << " matched pairs\n";
      for (const auto& p : m.matching.matched) {
        out << "  " << poset.label(p.lower) << "  <  " << poset.label(p.upper) << "\n";
      }
      out << "  critical:";
      for (auto k : m.matching.critical) out << " " << poset.label(k) << " (dim " << poset.rank(k) << ")";
      out << "\n  euler " << summary.euler_total << ", acyclic " << (acyclic.acyclic ? "yes" : "NO")
          << ", good " << audit.good << "/" << audit.checked << "\n";
      break;
  }
  return ok ? kExitOk : kExitInvariant;
}

// ---- verify ----------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<std::string> witness;
};

// Tallies one named property over many cells, keeping the first failure.
struct Tally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::optional<std::string> witness;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      if (!witness) witness = what;
    }
  }

  [[nodiscard]] Check finish() const {
    std::string detail = std::to_string(checked - failed) + "/" + std::to_string(checked) + " cells";
    if (skipped) detail += ", " + std::to_string(skipped) + " skipped over the simplex cap";
    return Check{name, failed == 0, detail, witness};
  }
};

enum class Fault { None, Cycle, Goodness };

struct CellOutcome {
  struct Part {
    bool matching = true;
    bool acyclic = true;
    std::string cycle;
    bool critical = true;
    std::string critical_detail;
    bool euler = true;
    bool good = true;
    std::string bad_pair;
    enum { NotRun, Passed, Failed, Skipped } homology = NotRun;
  };
  Part closure;
  std::optional<Part> boundary;
};

std::string join_labels(const HassePoset& poset, const std::vector<std::size_t>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " -> " : "") + poset.label(ids[i]);
  return s;
}

// Pairs each vertex of a polygon with the next edge round it, which closes a
// gradient path into a loop.
void inject_cycle(ClosureMatching& m) {
  const auto& poset = m.faces.hasse;
  std::vector<Cover> pairs;
  std::vector<char> used(poset.size(), 0);
  std::size_t v = 0;
  while (poset.rank(v) != 0) ++v;
  for (;;) {
    used[v] = 1;
    const auto& up = poset.up(v);
    auto e = std::find_if(up.begin(), up.end(), [&](std::size_t x) { return !used[x] && poset.rank(x) == 1; });
    if (e == up.end()) break;
    used[*e] = 1;
    pairs.push_back({v, *e});
    const auto& ends = poset.down(*e);
    const auto next = ends[0] == v ? ends[1] : ends[0];
    if (used[next]) break;
    v = next;
  }
  std::sort(pairs.begin(), pairs.end());
  m.matching.matched = pairs;
  m.matching.critical.clear();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (!used[i]) m.matching.critical.push_back(i);
  }
}

// Re-pairs the top cell with another face it covers, freeing the faces that
// lose their partners.
void inject_bad_pair(const QPoset& q, ClosureMatching& m) {
  const auto& poset = m.faces.hasse;
  const auto top = *m.faces.local_of(m.cell);
  auto& matched = m.matching.matched;
  auto current = std::find_if(matched.begin(), matched.end(), [&](const Cover& c) { return c.upper == top; });
  for (auto f : poset.down(top)) {
    if (current != matched.end() && f == current->lower) continue;
    auto trial = m;
    auto& tm = trial.matching.matched;
    tm.erase(std::remove_if(tm.begin(), tm.end(),
                            [&](const Cover& c) { return c.upper == top || c.lower == f || c.upper == f; }),
             tm.end());
    tm.push_back({f, top});
    std::sort(tm.begin(), tm.end());
    std::vector<char> in(poset.size(), 0);
    for (const auto& c : tm) in[c.lower] = in[c.upper] = 1;
    trial.matching.critical.clear();
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (!in[i]) trial.matching.critical.push_back(i);
    }
    if (!audit_goodness(q, trial).all_good()) {
      m = std::move(trial);
      return;
    }
  }
}

CellOutcome::Part check_part(const QPoset& q, const ClosureMatching& m, int p, bool boundary,
                             const RunConfig& config) {
  CellOutcome::Part part;
  const auto& poset = m.faces.hasse;
  part.matching = is_matching(poset, m.matching);
  const auto cyc = verify_acyclic(poset, m.matching);
  part.acyclic = cyc.acyclic;
  if (!cyc.acyclic) part.cycle = join_labels(poset, cyc.cycle);

  std::vector<int> dims;
  for (auto k : m.matching.critical) dims.push_back(poset.rank(k));
  std::sort(dims.begin(), dims.end());
  const std::vector<int> expected = boundary ? std::vector<int>{0, p - 1} : std::vector<int>{0};
  part.critical = dims == expected;
  for (auto d : dims) part.critical_detail += (part.critical_detail.empty() ? "" : ",") + std::to_string(d);
  part.critical_detail = "critical dims [" + part.critical_detail + "]";

  const auto summary = morse_summary(poset, m.matching);
  const long want = boundary ? (p % 2 == 1 ? 2 : 0) : 1;
  part.euler = summary.euler_total == want && summary.euler_critical == summary.euler_total;

  const auto audit = audit_goodness(q, m);
  part.good = audit.all_good();
  if (audit.first_bad) {
    part.bad_pair = q.hasse().label(audit.first_bad->lower) + " < " + q.hasse().label(audit.first_bad->upper);
  }

  if (p <= config.homology_max_dim) {
    try {
      const auto betti = reduced_homology(poset, config.cap_simplices);
      const bool ok = boundary ? betti.concentrated_in(p - 1, 1)
                               : std::all_of(betti.reduced.begin(), betti.reduced.end(),
                                             [](std::size_t b) { return b == 0; });
      part.homology = ok ? CellOutcome::Part::Passed : CellOutcome::Part::Failed;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ComplexTooLarge) throw;
      part.homology = CellOutcome::Part::Skipped;
    }
  }
  return part;
}

CellOutcome check_cell(const QPoset& q, std::size_t c, Fault fault, const RunConfig& config) {
  CellOutcome out;
  const int p = q.dimension(c);
  auto closure = match_closure(q, c);
  if (fault == Fault::Cycle) inject_cycle(closure);
  if (fault == Fault::Goodness) inject_bad_pair(q, closure);
  out.closure = check_part(q, closure, p, false, config);
  if (p >= 1) out.boundary = check_part(q, match_boundary(q, c), p, true, config);
  return out;
}

std::vector<CellOutcome> run_cells(const QPoset& q, std::size_t fault_cell, Fault fault, const RunConfig& config) {
  std::vector<CellOutcome> results(q.size());
  std::atomic<std::size_t> next{1};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_lock;
  auto worker = [&] {
    for (;;) {
      const auto c = next.fetch_add(1);
      if (c >= q.size() || failed) return;
      try {
        results[c] = check_cell(q, c, c == fault_cell ? fault : Fault::None, config);
      } catch (...) {
        std::lock_guard lock(error_lock);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(q.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

void verify_parabolic(const Session& s, const std::vector<int>& J, Fault fault, const RunConfig& config,
                      std::vector<Check>& checks) {
  const auto& sys = s.system;
  const auto q = QPoset::build(s.order, J);
  const std::string prefix = "J=" + format_set(q.parabolic().J) + " ";

  checks.push_back({prefix + "graded", q.hasse().is_graded(), std::to_string(q.size()) + " elements", {}});
  const auto thin = is_thin(q.hasse());
  checks.push_back({prefix + "thin", thin.thin, std::to_string(q.size()) + " elements",
                    thin.violation ? std::optional<std::string>(q.hasse().label(thin.violation->lower) + " < " +
                                                                q.hasse().label(thin.violation->upper))
                                   : std::nullopt});

  std::size_t fault_cell = 0;
  if (fault == Fault::Cycle) {
    for (std::size_t c = 1; c < q.size() && !fault_cell; ++c) {
      if (q.dimension(c) == 2) fault_cell = c;
    }
  } else if (fault == Fault::Goodness && q.dimension(q.top()) >= 2) {
    fault_cell = q.top();
  }

  const auto results = run_cells(q, fault_cell, fault, config);
  Tally c_match{prefix + "closure.matching"}, c_acyc{prefix + "closure.acyclic"},
      c_crit{prefix + "closure.critical"}, c_good{prefix + "closure.goodness"}, c_euler{prefix + "closure.euler"},
      c_hom{prefix + "closure.homology"};
  Tally b_match{prefix + "boundary.matching"}, b_acyc{prefix + "boundary.acyclic"},
      b_crit{prefix + "boundary.critical"}, b_good{prefix + "boundary.goodness"}, b_euler{prefix + "boundary.euler"},
      b_hom{prefix + "boundary.homology"};

  auto tally = [&](const CellOutcome::Part& part, const std::string& name, Tally& match, Tally& acyc, Tally& crit,
                   Tally& good, Tally& euler, Tally& hom) {
    match.record(part.matching, name);
    acyc.record(part.acyclic, name + ": " + part.cycle);
    crit.record(part.critical, name + ": " + part.critical_detail);
    good.record(part.good, name + ": " + part.bad_pair);
    euler.record(part.euler, name);
    if (part.homology == CellOutcome::Part::Skipped) ++hom.skipped;
    if (part.homology == CellOutcome::Part::Passed || part.homology == CellOutcome::Part::Failed) {
      hom.record(part.homology == CellOutcome::Part::Passed, name);
    }
  };
  for (std::size_t c = 1; c < q.size(); ++c) {
    const auto name = q.cell(c).describe(sys);
    tally(results[c].closure, name, c_match, c_acyc, c_crit, c_good, c_euler, c_hom);
    if (results[c].boundary) {
      tally(*results[c].boundary, name, b_match, b_acyc, b_crit, b_good, b_euler, b_hom);
    }
  }
  for (const auto* t : {&c_match, &c_acyc, &c_crit, &c_good, &c_euler, &c_hom, &b_match, &b_acyc, &b_crit, &b_good,
                        &b_euler, &b_hom}) {
    checks.push_back(t->finish());
  }

  // Processing order within a dimension must not change M_x(w).
  Tally order_check{prefix + "order-independence"};
  const auto words = shortlex_words(sys);
  for (const auto& block : partition_by_w(q, q.top())) {
    const auto word = words(block.y);
    order_check.record(order_independence_check(s.order, block.base, block.y, word, 10, config.seed),
                       "[" + format_word(sys.normal_form(block.base)) + ", " + format_word(word) + "]");
  }
  auto oc = order_check.finish();
  oc.detail = std::to_string(order_check.checked) + " blocks of the top cell, 10 orders each";
  checks.push_back(oc);

  if (q.parabolic().J.empty()) {
    // (x,w) <= (x',w') exactly when [x,w] lies inside [x',w'].
    std::optional<std::string> witness;
    for (std::size_t a = 1; a < q.size() && !witness; ++a) {
      for (std::size_t b = 1; b < q.size(); ++b) {
        const auto &A = q.cell(a), &B = q.cell(b);
        if (q.leq(a, b) != (s.order.leq(B.x, A.x) && s.order.leq(A.w, B.w))) {
          witness = A.describe(sys) + " vs " + B.describe(sys);
          break;
        }
      }
    }
    checks.push_back({prefix + "interval-model", !witness, "containment of Bruhat intervals", witness});
  }
}

void verify_bruhat(const Session& s, std::vector<Check>& checks) {
  const auto& sys = s.system;
  const auto interval = bruhat_interval(s.order, sys.identity(), sys.longest());
  auto word = sys.normal_form(sys.longest());
  auto reversed = word;
  std::reverse(reversed.begin(), reversed.end());
  const auto first = reflection_order_from_word(sys, word);
  const std::vector<std::pair<std::string, ReflectionOrder>> orders{
      {format_word(word), first},
      {format_word(reversed), reflection_order_from_word(sys, reversed)},
      {format_word(word) + " reversed", reverse_order(sys, first)}};
  for (const auto& [name, order] : orders) {
    const auto report = verify_EL(dyer_labeling(sys, interval, order, false));
    std::optional<std::string> witness;
    if (report.violation) {
      witness = interval.poset.label(report.violation->lower) + " < " + interval.poset.label(report.violation->upper);
    }
    checks.push_back({"bruhat EL order " + name, report.ok,
                      std::to_string(report.intervals_checked) + " intervals", witness});
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  Session s(config);
  const auto& sys = s.system;
  Fault fault = Fault::None;
  if (config.inject_fault == "cycle") fault = Fault::Cycle;
  if (config.inject_fault == "goodness") fault = Fault::Goodness;

  std::vector<std::vector<int>> subsets;
  if (config.all_parabolics) {
    for (int mask = 0; mask < (1 << sys.rank()); ++mask) {
      std::vector<int> J;
      for (int i = 0; i < sys.rank(); ++i) {
        if (mask & (1 << i)) J.push_back(i + 1);
      }
      subsets.push_back(J);
    }
  } else {
    subsets.push_back(normalize_parabolic(sys, config.parabolic));
  }

  std::vector<Check> checks;
  verify_bruhat(s, checks);
  bool injected = false;
  for (const auto& J : subsets) {
    const auto before = checks.size();
    verify_parabolic(s, J, injected ? Fault::None : fault, config, checks);
    // The fault goes into the first parabolic that has room for it.
    if (fault != Fault::None && !injected) {
      injected = std::any_of(checks.begin() + static_cast<long>(before), checks.end(),
                             [](const Check& c) { return !c.passed; });
    }
  }
  const bool passed = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });

  if (config.format == Format::Text) {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")";
      if (c.witness) out << " witness: " << *c.witness;
      out << "\n";
    }
    out << "verify " << sys.label() << ": " << (passed ? "PASS" : "FAIL") << ", " << checks.size() << " checks\n";
  } else {
    auto j = header(config, sys);
    j["parabolics"] = subsets;
    j["seed"] = config.seed;
    auto list = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"detail", c.detail},
                      {"witness", c.witness ? json(*c.witness) : json(nullptr)}});
    }
    j["checks"] = std::move(list);
    j["passed"] = passed;
    out << j.dump(2) << "\n";
  }
  return passed ? kExitOk : kExitInvariant;
}

// ---- export ----------------------------------------------------------------

int cmd_export(const RunConfig& config, std::ostream& out) {
  Session s(config);
  const auto q = QPoset::build(s.order, config.parabolic);
  const auto c = cell_of(q, config.cell);
  const auto m = config.boundary ? match_boundary(q, c) : match_closure(q, c);

  const std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IOFailure("cannot create directory " + dir.string());

  const std::vector<std::pair<std::string, std::string>> files{
      {"qposet.dot", q.to_dot()},
      {"qposet.json", q.hasse().to_json()},
      {"cells.json", q.cells_to_json()},
      {"matching.dot", matching_to_dot(m.faces.hasse, m.matching, config.boundary ? "boundary" : "closure")},
      {"matching.json", matching_to_json(m.faces.hasse, m.matching)},
  };
  auto j = header(config, s.system);
  j["parabolic"] = q.parabolic().J;
  j["cell"] = q.cell(c).describe(s.system);
  auto written = json::array();
  for (const auto& [name, text] : files) {
    write_file(dir / name, text);
    written.push_back((dir / name).string());
  }
  j["files"] = std::move(written);
  if (config.format == Format::Text) {
    for (const auto& [name, text] : files) out << (dir / name).string() << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "enumerate") return cmd_enumerate(config, out);
    if (config.command == "label") return cmd_label(config, out);
    if (config.command == "match") return cmd_match(config, out);
    if (config.command == "verify") return cmd_verify(config, out);
    if (config.command == "export") return cmd_export(config, out);
    err << "tnnmorse: unknown command '" << config.command << "'\n";
    return kExitUsage;
  } catch (const IOFailure& e) {
    err << "tnnmorse: " << e.what() << "\n";
    return kExitIO;
  } catch (const Error& e) {
    err << "tnnmorse: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace tnn::cli
