#include "tnn/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "tnn/error.hpp"

namespace tnn {

namespace {

std::uint64_t edge_key(std::size_t lower, std::size_t upper) {
  return (static_cast<std::uint64_t>(lower) << 32) | static_cast<std::uint64_t>(upper);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

HassePoset::HassePoset(std::vector<std::string> labels, std::vector<int> ranks,
                       std::vector<Cover> covers)
    : labels_(std::move(labels)), ranks_(std::move(ranks)), covers_(std::move(covers)) {
  if (labels_.size() != ranks_.size()) {
    throw Error(ErrorCode::InvalidArgument, "labels and ranks differ in size");
  }
  up_.resize(labels_.size());
  down_.resize(labels_.size());
  for (std::size_t i = 0; i < covers_.size(); ++i) {
    const auto& c = covers_[i];
    if (c.lower >= size() || c.upper >= size() || c.lower == c.upper) {
      throw Error(ErrorCode::InvalidArgument, "cover endpoint out of range");
    }
    if (!cover_lookup_.emplace(edge_key(c.lower, c.upper), i).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate cover");
    }
    up_[c.lower].push_back(c.upper);
    down_[c.upper].push_back(c.lower);
  }
  (void)topological_order();  // rejects cyclic cover relations
}

std::optional<std::size_t> HassePoset::cover_index(std::size_t lower, std::size_t upper) const {
  if (auto it = cover_lookup_.find(edge_key(lower, upper)); it != cover_lookup_.end()) {
    return it->second;
  }
  return std::nullopt;
}

bool HassePoset::is_graded() const {
  return std::all_of(covers_.begin(), covers_.end(),
                     [&](const Cover& c) { return ranks_[c.upper] == ranks_[c.lower] + 1; });
}

std::vector<std::size_t> HassePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> HassePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> HassePoset::topological_order() const {
  std::vector<std::size_t> indegree(size());
  for (const auto& c : covers_) ++indegree[c.upper];
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < size(); ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> out;
  out.reserve(size());
  while (!ready.empty()) {
    auto i = ready.front();
    ready.pop();
    out.push_back(i);
    for (auto j : up_[i]) {
      if (--indegree[j] == 0) ready.push(j);
    }
  }
  if (out.size() != size()) throw Error(ErrorCode::InvalidArgument, "cover relation has a cycle");
  return out;
}

std::vector<Bitset> HassePoset::strict_up_sets() const {
  std::vector<Bitset> reach(size(), Bitset(size()));
  auto order = topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (auto j : up_[*it]) {
      reach[*it].set(j);
      reach[*it] |= reach[j];
    }
  }
  return reach;
}

HassePoset HassePoset::dual() const {
  const int top = ranks_.empty() ? 0 : *std::max_element(ranks_.begin(), ranks_.end());
  std::vector<int> ranks(ranks_.size());
  std::transform(ranks_.begin(), ranks_.end(), ranks.begin(), [&](int r) { return top - r; });
  std::vector<Cover> covers;
  covers.reserve(covers_.size());
  for (const auto& c : covers_) covers.push_back({c.upper, c.lower});
  return HassePoset(labels_, std::move(ranks), std::move(covers));
}

std::string HassePoset::to_json() const {
  nlohmann::json j;
  j["elements"] = labels_;
  j["ranks"] = ranks_;
  auto arr = nlohmann::json::array();
  for (const auto& c : covers_) arr.push_back({c.lower, c.upper});
  j["covers"] = std::move(arr);
  return j.dump();
}

HassePoset HassePoset::from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    auto labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<int> ranks = j.contains("ranks") ? j.at("ranks").get<std::vector<int>>()
                                                 : std::vector<int>(labels.size(), 0);
    std::vector<Cover> covers;
    for (const auto& c : j.at("covers")) {
      covers.push_back({c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>()});
    }
    return HassePoset(std::move(labels), std::move(ranks), std::move(covers));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string HassePoset::to_dot(std::string_view name, const EdgeStyle& style) const {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(std::string(name)) << "\" {\n";
  os << "  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  std::map<int, std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < size(); ++i) layers[ranks_[i]].push_back(i);
  for (const auto& [r, members] : layers) {
    os << "  { rank=same; // rank " << r << "\n";
    for (auto i : members) os << "    n" << i << " [label=\"" << dot_escape(labels_[i]) << "\"];\n";
    os << "  }\n";
  }
  for (std::size_t k = 0; k < covers_.size(); ++k) {
    os << "  n" << covers_[k].lower << " -> n" << covers_[k].upper;
    if (style) {
      auto attrs = style(k);
      if (!attrs.empty()) os << " [" << attrs << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

bool operator==(const HassePoset& a, const HassePoset& b) {
  if (a.labels_ != b.labels_ || a.ranks_ != b.ranks_) return false;
  auto ca = a.covers_;
  auto cb = b.covers_;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

std::vector<Cover> transitive_reduction(const std::vector<Bitset>& strict_up) {
  const auto n = strict_up.size();
  // strict_down[j] = { i : i < j }
  std::vector<Bitset> strict_down(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = strict_up[i].find_first(); j != Bitset::npos; j = strict_up[i].find_next(j)) {
      strict_down[j].set(i);
    }
  }
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = strict_up[i].find_first(); j != Bitset::npos; j = strict_up[i].find_next(j)) {
      if (!strict_up[i].intersects(strict_down[j])) covers.push_back({i, j});
    }
  }
  return covers;
}

}  // namespace tnn
