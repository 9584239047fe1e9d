#pragma once

// The augmented cell poset Q^J of (G/P_J)>=0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tnn/bruhat.hpp"
#include "tnn/cell.hpp"
#include "tnn/coxeter.hpp"
#include "tnn/parabolic.hpp"
#include "tnn/poset.hpp"

namespace tnn {

/// Every (x,u,w) in W^J_max x W_J x W^J with x <= wu, ordered by
/// (dimension, x, u, w). The bottom sentinel is not included.
std::vector<CellIndex> enumerate_cells(const BruhatOrder& order, const ParabolicData& parabolic);

/// a <= b: there are u1 u2 = u (length-additive, from a = (x,u,w)) with
/// x' u'^-1 <= x u2^-1 <= w u1 <= w' where b = (x',u',w'). The bottom
/// sentinel lies below everything.
bool q_leq(const BruhatOrder& order, const CellIndex& a, const CellIndex& b);

enum class CoverType { Type1 = 1, Type2 = 2, Type3 = 3 };

struct QCover {
  std::size_t lower = 0;
  std::size_t upper = 0;
  CoverType type = CoverType::Type1;
};

/// Tags lo < hi (assumed a cover): Type 1 when w agrees and x grows, Type 2
/// when x agrees and the lower w is smaller, Type 3 for the bottom under a
/// 0-cell. Verifies the consequence stated for each type and throws
/// UnclassifiableCover when nothing applies.
CoverType classify_cover(const BruhatOrder& order, const CellIndex& lo, const CellIndex& hi);

struct QPosetOptions {
  std::size_t max_cells = 20000;
};

class QPoset {
 public:
  static QPoset build(const BruhatOrder& order, std::vector<int> J, const QPosetOptions& options = {});

  [[nodiscard]] const CoxeterSystem& system() const noexcept { return order_->system(); }
  [[nodiscard]] const BruhatOrder& bruhat() const noexcept { return *order_; }
  [[nodiscard]] const ParabolicData& parabolic() const noexcept { return parabolic_; }

  /// Cell 0 is the bottom sentinel.
  [[nodiscard]] std::size_t size() const noexcept { return cells_.size(); }
  [[nodiscard]] const std::vector<CellIndex>& cells() const noexcept { return cells_; }
  [[nodiscard]] const CellIndex& cell(std::size_t i) const { return cells_.at(i); }
  [[nodiscard]] int dimension(std::size_t i) const { return dims_.at(i); }
  [[nodiscard]] int max_dimension() const;
  [[nodiscard]] std::size_t bottom() const noexcept { return 0; }
  [[nodiscard]] std::size_t top() const noexcept { return top_; }
  [[nodiscard]] std::optional<std::size_t> index_of(const CellIndex& c) const;

  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return a == b || above_[a].test(b); }
  [[nodiscard]] const Bitset& strictly_above(std::size_t a) const { return above_.at(a); }
  [[nodiscard]] const std::vector<QCover>& covers() const noexcept { return covers_; }
  /// Hasse diagram; ranks are dimensions (-1 for the bottom).
  [[nodiscard]] const HassePoset& hasse() const noexcept { return hasse_; }

  /// Per-dimension counts, index d for dimension d (bottom excluded).
  [[nodiscard]] std::vector<std::size_t> dimension_counts() const;

  /// [{"x":[...],"u":[...],"w":[...],"dim":d}, ...] without the bottom.
  [[nodiscard]] std::string cells_to_json() const;
  /// Rank-layered DOT, cover types coloured.
  [[nodiscard]] std::string to_dot() const;

 private:
  const BruhatOrder* order_ = nullptr;
  ParabolicData parabolic_;
  std::vector<CellIndex> cells_;
  std::vector<int> dims_;
  std::vector<Bitset> above_;
  std::vector<QCover> covers_;
  HassePoset hasse_;
  std::size_t top_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;

  [[nodiscard]] std::uint64_t key(const CellIndex& c) const;
};

/// Convex piece of Q^J with a map back to global cell ids.
struct CellSubposet {
  std::vector<std::size_t> cells;  // global ids, ascending
  HassePoset hasse;                // local indices into `cells`; ranks are dimensions

  [[nodiscard]] std::optional<std::size_t> local_of(std::size_t global) const;
};

/// {d : d <= c}; the bottom is left out unless requested.
CellSubposet closure_poset(const QPoset& q, std::size_t c, bool include_bottom = false);

/// closure_poset(c) without c. Throws ZeroDimensional for 0-cells.
CellSubposet boundary_poset(const QPoset& q, std::size_t c);

/// The cells of the closure of (x,u,w) with third component y. Their
/// projections a b^-1 fill the Bruhat interval [base, y].
struct Block {
  Element y;
  Element base;                     // least a b^-1 in the block
  std::vector<std::size_t> cells;   // global ids
  std::vector<Element> projected;   // a b^-1 for each cell (a,b,y)
};

/// Partition of the closure of c (without bottom) by third component.
std::vector<Block> partition_by_w(const QPoset& q, std::size_t c);

}  // namespace tnn
