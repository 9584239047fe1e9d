#pragma once

// Morse matchings on face posets: Chari's construction from an EL-labeling,
// the explicit matching of S_x(w), its union over the blocks of a cell
// closure, and the checks that certify them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tnn/bruhat.hpp"
#include "tnn/poset.hpp"
#include "tnn/qposet.hpp"
#include "tnn/shelling.hpp"

namespace tnn {

struct MorseMatching {
  std::vector<Cover> matched;  // (lower, upper), sorted
  std::vector<std::size_t> critical;

  friend bool operator==(const MorseMatching&, const MorseMatching&) = default;
};

/// Each matched pair is a cover, no element is used twice, and `critical`
/// is exactly the set of unmatched elements.
bool is_matching(const HassePoset& poset, const MorseMatching& m);

struct AcyclicityReport {
  bool acyclic = true;
  std::vector<std::size_t> cycle;  // witness, first vertex repeated at the end
};

/// Matched covers point up, all others point down; looks for a directed cycle.
AcyclicityReport verify_acyclic(const HassePoset& poset, const MorseMatching& m);

struct MorseSummary {
  std::vector<std::size_t> critical_by_dim;  // index = rank - min rank
  int min_rank = 0;
  long euler_critical = 0;
  long euler_total = 0;

  [[nodiscard]] std::size_t total_critical() const;
};

MorseSummary morse_summary(const HassePoset& poset, const MorseMatching& m);

/// Top-down: every unmatched element is matched to its Last set. Throws
/// MatchingConflict when that element is already taken or Last is not a
/// singleton.
MorseMatching chari_matching(const ELLabeling& labeling);

/// S_x(w) = {v : x <= v <= w} ordered dually, so R_{x,w} is on top; rank is
/// the cell dimension l(w) - l(v).
struct SxPoset {
  Element x;
  Element w;
  Word word;
  BruhatInterval interval;                        // elements share indices with `poset`
  HassePoset poset;                               // dual of interval.poset
  std::vector<std::vector<std::size_t>> positive; // v_+ for each element
};

SxPoset make_Sx(const BruhatOrder& order, Element x, Element w, std::span<const int> w_word);

struct SxOptions {
  /// Shuffle same-dimension cells instead of the lexicographic v_+ order.
  std::optional<std::uint64_t> shuffle_seed;
};

struct SxMatching {
  SxPoset sx;
  MorseMatching matching;
};

/// Highest dimension first, each unmatched v is matched with the cell whose
/// positive subexpression is v_+ plus the largest position k outside v_+.
SxMatching match_Sx(const BruhatOrder& order, Element x, Element w, std::span<const int> w_word,
                    const SxOptions& options = {});

/// match_Sx gives the same matched edges under `trials` random orders.
bool order_independence_check(const BruhatOrder& order, Element x, Element w,
                              std::span<const int> w_word, std::size_t trials, std::uint64_t seed);

/// Reduced word used for the block with third component y.
using WordChoice = std::function<Word(Element y)>;
WordChoice shortlex_words(const CoxeterSystem& system);

struct ClosureMatching {
  std::size_t cell = 0;
  CellSubposet faces;
  MorseMatching matching;  // local indices into faces
};

/// Union of the S_x(w) matchings over the blocks of the closure of c.
ClosureMatching match_closure(const QPoset& q, std::size_t c, const WordChoice& words = {});

/// match_closure restricted to the boundary. Throws ZeroDimensional.
ClosureMatching match_boundary(const QPoset& q, std::size_t c, const WordChoice& words = {});

struct GoodnessAudit {
  std::size_t checked = 0;
  std::size_t good = 0;
  std::optional<Cover> first_bad;  // global cell ids (lower, upper)

  [[nodiscard]] bool all_good() const { return checked == good; }
};

GoodnessAudit audit_goodness(const QPoset& q, const ClosureMatching& m, const WordChoice& words = {});

/// {"matched":[[i,j],...],"critical":[...],"labels":[...]}
std::string matching_to_json(const HassePoset& poset, const MorseMatching& m);

/// DOT of the poset with matched covers drawn bold.
std::string matching_to_dot(const HassePoset& poset, const MorseMatching& m, std::string_view name);

}  // namespace tnn
