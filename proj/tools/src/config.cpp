#include <algorithm>
#include <cctype>
#include <sstream>
#include <ostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "tnn/cli/app.hpp"
#include "tnn/error.hpp"

namespace tnn::cli {

namespace {

const char* format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Dot: return "dot";
    case Format::Text: break;
  }
  return "text";
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  if (s == "text") return Format::Text;
  throw Error(ErrorCode::ParseError, "unknown format '" + s + "'");
}

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> get_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

bool looks_like_type(const std::string& s) {
  static const std::regex pattern("[A-Za-z][0-9]+");
  return std::regex_match(s, pattern);
}

}  // namespace

std::string RunConfig::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["type"] = type;
  j["parabolic"] = parabolic;
  j["all_parabolics"] = all_parabolics;
  put_optional(j, "cell", cell);
  put_optional(j, "interval", interval);
  put_optional(j, "order_word", order_word);
  j["reverse_order"] = reverse_order;
  j["boundary"] = boundary;
  j["format"] = format_name(format);
  j["jobs"] = jobs;
  j["seed"] = seed;
  j["cap_group"] = cap_group;
  j["cap_simplices"] = cap_simplices;
  j["homology_max_dim"] = homology_max_dim;
  j["out_dir"] = out_dir;
  j["inject_fault"] = inject_fault;
  return j.dump();
}

RunConfig RunConfig::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.type = j.at("type").get<std::string>();
    c.parabolic = j.at("parabolic").get<std::vector<int>>();
    c.all_parabolics = j.at("all_parabolics").get<bool>();
    c.cell = get_optional<std::string>(j, "cell");
    c.interval = get_optional<std::string>(j, "interval");
    c.order_word = get_optional<std::string>(j, "order_word");
    c.reverse_order = j.at("reverse_order").get<bool>();
    c.boundary = j.at("boundary").get<bool>();
    c.format = parse_format(j.at("format").get<std::string>());
    c.jobs = j.at("jobs").get<unsigned>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.cap_group = j.at("cap_group").get<std::uint64_t>();
    c.cap_simplices = j.at("cap_simplices").get<std::uint64_t>();
    c.homology_max_dim = j.at("homology_max_dim").get<int>();
    c.out_dir = j.at("out_dir").get<std::string>();
    c.inject_fault = j.at("inject_fault").get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  // A leading type label ("A3 enumerate") is shorthand for --type.
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  if (!args.empty() && looks_like_type(args.front())) args.insert(args.begin(), "--type");
  std::reverse(args.begin(), args.end());  // CLI11 consumes vectors from the back

  RunConfig config;
  CLI::App app{"Morse matchings and cell posets of totally nonnegative flag varieties", "tnnmorse"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string type;
  std::optional<int> rank;
  std::string format = "text";
  std::string parabolic;
  app.add_option("--type", type, "Cartan type, e.g. A3 (or a family letter with --rank)")->required();
  app.add_option("--rank", rank, "Rank, when --type is a bare family letter");
  app.add_option("--parabolic", parabolic, "Parabolic subset J as i,j,...");
  app.add_option("--cell", config.cell, "Cell x:u:w, words as comma-separated generators, e for empty");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--jobs", config.jobs, "Concurrent per-cell jobs")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", config.seed, "Seed for randomized order checks");
  app.add_option("--cap-group", config.cap_group, "Largest group order to enumerate");
  app.add_option("--cap-simplices", config.cap_simplices, "Largest order complex to build");
  app.add_option("--out", config.out_dir, "Output directory for export");
  app.add_option("--inject-fault", config.inject_fault)
      ->group("")
      ->check(CLI::IsMember({"", "cycle", "goodness"}));

  auto* enumerate = app.add_subcommand("enumerate", "Cells of Q^J and their dimension counts");
  auto* label = app.add_subcommand("label", "Dyer EL-labeling of a Bruhat interval");
  label->add_option("--interval", config.interval, "Interval v:w (default e:w0)");
  label->add_option("--order-word", config.order_word, "Reduced word of w0 for the reflection order");
  label->add_flag("--reverse", config.reverse_order, "Use the reversed reflection order");
  auto* match = app.add_subcommand("match", "Morse matching on the closure of a cell");
  match->add_flag("--boundary", config.boundary, "Restrict to the boundary");
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_flag("--all", config.all_parabolics, "Every parabolic subset J");
  verify->add_option("--homology-max-dim", config.homology_max_dim, "Largest cell dimension for Betti checks");
  auto* exp = app.add_subcommand("export", "Write DOT and JSON artifacts");

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    exit_code = kExitOk;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    err << "tnnmorse: " << e.what() << "\n";
    exit_code = kExitUsage;
    return std::nullopt;
  }

  for (auto* sub : {enumerate, label, match, verify, exp}) {
    if (sub->parsed()) config.command = sub->get_name();
  }
  try {
    if (rank) {
      if (type.size() != 1) throw Error(ErrorCode::ParseError, "--rank needs a bare family letter in --type");
      type += std::to_string(*rank);
    }
    config.type = type;
    config.format = parse_format(format);
    if (!parabolic.empty()) {
      std::stringstream in(parabolic);
      std::string item;
      while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
          throw Error(ErrorCode::ParseError, "bad parabolic index '" + item + "'");
        }
        config.parabolic.push_back(std::stoi(item));
      }
    }
  } catch (const Error& e) {
    err << "tnnmorse: " << e.what() << "\n";
    exit_code = kExitUsage;
    return std::nullopt;
  }
  exit_code = kExitOk;
  return config;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto config = parse_args(argc, argv, out, err, code);
  if (!config) return code;
  return execute(*config, out, err);
}

}  // namespace tnn::cli
