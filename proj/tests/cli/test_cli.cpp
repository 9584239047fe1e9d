#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tnn/cli/app.hpp"
#include "tnn/error.hpp"
#include "tnn/qposet.hpp"

using namespace tnn;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tnnmorse");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("tnnmorse_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("config round-trips through JSON") {
  cli::RunConfig c;
  c.command = "verify";
  c.type = "B3";
  c.parabolic = {1, 3};
  c.all_parabolics = true;
  c.cell = "1:e:1,2";
  c.order_word = "1,2,1";
  c.format = cli::Format::Json;
  c.jobs = 4;
  c.seed = 99;
  c.cap_simplices = 1000;
  CHECK(cli::RunConfig::from_json(c.to_json()) == c);
  CHECK(cli::RunConfig::from_json(cli::RunConfig{}.to_json()) == cli::RunConfig{});

  std::ostringstream out, err;
  int code = -1;
  const char* argv[] = {"tnnmorse", "--type", "A", "--rank", "3", "--parabolic", "3,1", "--format",
                        "json", "--jobs", "2", "verify", "--all"};
  const auto parsed = cli::parse_args(13, argv, out, err, code);
  REQUIRE(parsed);
  CHECK(code == cli::kExitOk);
  CHECK(parsed->type == "A3");
  CHECK(parsed->command == "verify");
  CHECK(parsed->all_parabolics);
  CHECK(parsed->parabolic == std::vector<int>{3, 1});
  CHECK(cli::RunConfig::from_json(parsed->to_json()) == *parsed);
  CHECK_THROWS_AS(cli::RunConfig::from_json("{\"command\":1}"), Error);
}

TEST_CASE("enumerate") {
  auto gr = run_cli({"A3", "--parabolic", "1,3", "--format", "json", "enumerate"});
  REQUIRE(gr.code == 0);
  const auto j = json::parse(gr.out);
  CHECK(j["schema"] == "tnn-morse/1");
  CHECK(j["counts"][4] == 1);
  CHECK(j["counts"][3] == 4);
  CHECK(j["counts"].size() == 5);

  const auto a1 = json::parse(run_cli({"A1", "--format", "json", "enumerate"}).out);
  CHECK(a1["total"] == 3);
  CHECK(a1["cells"].size() == 3);

  const auto point = json::parse(run_cli({"A2", "--parabolic", "1,2", "--format", "json", "enumerate"}).out);
  CHECK(point["total"] == 1);
  CHECK(point["counts"] == json::array({1}));

  const auto text = run_cli({"A3", "--parabolic", "1,3", "enumerate"});
  CHECK(text.out.find("dim 4: 1") != std::string::npos);
  CHECK(text.out.find("dim 3: 4") != std::string::npos);
}

TEST_CASE("verify passes and catches injected faults") {
  for (const char* type : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(type);
    const auto r = run_cli({type, "--format", "json", "verify", "--all"});
    CHECK(r.code == cli::kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() > 10);
  }

  const auto cycle = run_cli({"A2", "--format", "json", "--inject-fault", "cycle", "verify", "--all"});
  CHECK(cycle.code == cli::kExitInvariant);
  bool found = false;
  const auto cycle_report = json::parse(cycle.out);
  for (const auto& c : cycle_report["checks"]) {
    if (c["name"] == "J={} closure.acyclic") {
      CHECK(c["passed"] == false);
      CHECK(c["witness"].is_string());
      found = true;
    }
  }
  CHECK(found);

  const auto bad = run_cli({"A2", "--format", "json", "--inject-fault", "goodness", "verify"});
  CHECK(bad.code == cli::kExitInvariant);
  found = false;
  const auto bad_report = json::parse(bad.out);
  for (const auto& c : bad_report["checks"]) {
    if (c["name"] == "J={} closure.goodness") {
      CHECK(c["passed"] == false);
      CHECK(c["witness"].is_string());
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("reports are deterministic") {
  const auto a = run_cli({"B2", "--format", "json", "--seed", "7", "--jobs", "1", "verify", "--all"});
  const auto b = run_cli({"B2", "--format", "json", "--seed", "7", "--jobs", "4", "verify", "--all"});
  CHECK(a.out == b.out);
  const auto c = run_cli({"A3", "--format", "json", "match"});
  const auto d = run_cli({"A3", "--format", "json", "match"});
  CHECK(c.out == d.out);
}

TEST_CASE("match and label") {
  const auto m = run_cli({"A2", "--format", "json", "match"});
  REQUIRE(m.code == 0);
  const auto j = json::parse(m.out);
  CHECK(j["matching"]["critical"].size() == 1);
  CHECK(j["euler_total"] == 1);
  CHECK(j["acyclic"] == true);

  const auto b = json::parse(run_cli({"A2", "--format", "json", "--cell", "e:e:1,2,1", "match", "--boundary"}).out);
  // Boundary of the 3-cell is a 2-sphere: critical cells in dimensions 0 and 2.
  CHECK(b["critical_by_dim"] == json::array({1, 0, 1}));
  CHECK(b["euler_total"] == 2);

  const auto dot = run_cli({"A2", "--format", "dot", "match"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(dot.out.find("color=red, penwidth=3") != std::string::npos);
  CHECK(dot.out.find("color=gray60") != std::string::npos);

  const auto l = run_cli({"B2", "--format", "json", "label", "--order-word", "2,1,2,1", "--reverse"});
  CHECK(l.code == 0);
  CHECK(json::parse(l.out)["el"]["ok"] == true);
  CHECK(run_cli({"A2", "label", "--interval", "1:2"}).code == cli::kExitUsage);
}

TEST_CASE("export writes artifacts that read back") {
  const auto dir = scratch("export");
  const auto r = run_cli({"A2", "export", "--out", dir.string()});
  REQUIRE(r.code == 0);
  for (const char* f : {"qposet.dot", "qposet.json", "cells.json", "matching.dot", "matching.json"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
  const auto sys = CoxeterSystem::build("A2");
  const BruhatOrder order(sys);
  const auto q = QPoset::build(order, {});
  CHECK(HassePoset::from_json(slurp(dir / "qposet.json")) == q.hasse());
  CHECK(slurp(dir / "cells.json") == q.cells_to_json());

  const auto dot = slurp(dir / "qposet.dot");
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(slurp(dir / "matching.dot").find("penwidth=3") != std::string::npos);

  const auto again = scratch("export2");
  REQUIRE(run_cli({"A2", "export", "--out", again.string()}).code == 0);
  for (const char* f : {"qposet.dot", "qposet.json", "cells.json", "matching.dot", "matching.json"}) {
    CHECK(slurp(dir / f) == slurp(again / f));
  }
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(again);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"A2"}).code == cli::kExitUsage);
  CHECK(run_cli({"A2", "frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"enumerate"}).code == cli::kExitUsage);
  CHECK(run_cli({"Z3", "enumerate"}).code == cli::kExitUsage);
  CHECK(run_cli({"A2", "--parabolic", "1,x", "enumerate"}).code == cli::kExitUsage);
  CHECK(run_cli({"A2", "--parabolic", "5", "enumerate"}).code == cli::kExitUsage);
  CHECK(run_cli({"A2", "--cell", "1:e:2", "match"}).code == cli::kExitUsage);
  CHECK(run_cli({"A9", "enumerate"}).code == cli::kExitUsage);
  CHECK(run_cli({"A2", "--format", "xml", "enumerate"}).code == cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);

  const auto blocker = scratch("blocker");
  std::ofstream(blocker.string()) << "x";
  const auto io = run_cli({"A2", "export", "--out", (blocker / "sub").string()});
  CHECK(io.code == cli::kExitIO);
  CHECK_FALSE(io.err.empty());
  std::filesystem::remove_all(blocker);
}
