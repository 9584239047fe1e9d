#pragma once

// Finite posets stored as Hasse diagrams.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tnn {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct Cover {
  std::size_t lower = 0;
  std::size_t upper = 0;
  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

class HassePoset {
 public:
  HassePoset() = default;
  HassePoset(std::vector<std::string> labels, std::vector<int> ranks, std::vector<Cover> covers);

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] int rank(std::size_t i) const { return ranks_.at(i); }
  [[nodiscard]] const std::vector<int>& ranks() const noexcept { return ranks_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::vector<Cover>& covers() const noexcept { return covers_; }
  /// Elements covering i.
  [[nodiscard]] const std::vector<std::size_t>& up(std::size_t i) const { return up_.at(i); }
  /// Elements covered by i.
  [[nodiscard]] const std::vector<std::size_t>& down(std::size_t i) const { return down_.at(i); }
  [[nodiscard]] std::optional<std::size_t> cover_index(std::size_t lower, std::size_t upper) const;

  /// Rank increases by exactly one along every cover.
  [[nodiscard]] bool is_graded() const;
  [[nodiscard]] std::vector<std::size_t> minimal_elements() const;
  [[nodiscard]] std::vector<std::size_t> maximal_elements() const;
  /// strict_up[i] = { j : i < j }.
  [[nodiscard]] std::vector<Bitset> strict_up_sets() const;
  /// Elements in a topological order (every cover goes forward).
  [[nodiscard]] std::vector<std::size_t> topological_order() const;

  /// Order dual; ranks become (max rank - rank).
  [[nodiscard]] HassePoset dual() const;

  /// {"elements":[...],"ranks":[...],"covers":[[i,j],...]}
  [[nodiscard]] std::string to_json() const;
  static HassePoset from_json(std::string_view text);

  using EdgeStyle = std::function<std::string(std::size_t cover_index)>;
  /// Rank-layered digraph, edges drawn lower -> upper.
  [[nodiscard]] std::string to_dot(std::string_view name, const EdgeStyle& style = {}) const;

  friend bool operator==(const HassePoset& a, const HassePoset& b);

 private:
  std::vector<std::string> labels_;
  std::vector<int> ranks_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::unordered_map<std::uint64_t, std::size_t> cover_lookup_;
};

/// Covers of the strict order given by `strict_up` (assumed transitive).
std::vector<Cover> transitive_reduction(const std::vector<Bitset>& strict_up);

}  // namespace tnn
