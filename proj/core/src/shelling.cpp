#include "tnn/shelling.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include <json.hpp>

#include "tnn/error.hpp"

namespace tnn {

namespace {

constexpr auto kNone = std::numeric_limits<std::size_t>::max();

ReflectionOrder make_order(const CoxeterSystem& system, std::vector<Element> sequence, Word source,
                           bool reversed) {
  ReflectionOrder order;
  order.sequence = std::move(sequence);
  order.source_word = std::move(source);
  order.reversed = reversed;
  order.rank_table.assign(system.order(), kNone);
  for (std::size_t j = 0; j < order.sequence.size(); ++j) {
    order.rank_table[order.sequence[j].index()] = j;
  }
  return order;
}

void require_graded_bounded(const HassePoset& poset) {
  if (poset.size() == 0) return;
  if (!poset.is_graded() || poset.minimal_elements().size() != 1 ||
      poset.maximal_elements().size() != 1) {
    throw Error(ErrorCode::NotGradedBounded, "EL verification needs a graded bounded poset");
  }
}

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::size_t ReflectionOrder::rank_of(Element t) const {
  if (t.index() >= rank_table.size() || rank_table[t.index()] == kNone) {
    throw Error(ErrorCode::InvalidArgument, "element is not in the reflection order");
  }
  return rank_table[t.index()];
}

ReflectionOrder reflection_order_from_word(const CoxeterSystem& system, std::span<const int> w0_word) {
  if (!system.is_reduced(w0_word)) throw Error(ErrorCode::WordNotReduced, format_word(w0_word));
  if (system.evaluate(w0_word) != system.longest()) {
    throw Error(ErrorCode::NotLongestElement, format_word(w0_word));
  }
  std::vector<Element> sequence;
  Element prefix = system.identity();
  for (int s : w0_word) {
    const auto g = system.generator(s);
    sequence.push_back(system.multiply(system.multiply(prefix, g), system.inverse(prefix)));
    prefix = system.multiply(prefix, g);
  }
  return make_order(system, std::move(sequence), Word(w0_word.begin(), w0_word.end()), false);
}

std::optional<Word> realizing_word(const CoxeterSystem& system, std::span<const Element> sequence) {
  if (sequence.size() != system.num_reflections()) return std::nullopt;
  std::set<Element> distinct(sequence.begin(), sequence.end());
  if (distinct.size() != sequence.size()) return std::nullopt;
  Word word;
  Element prefix = system.identity();
  for (auto t : sequence) {
    if (!system.is_reflection(t)) return std::nullopt;
    const auto conj = system.multiply(system.multiply(system.inverse(prefix), t), prefix);
    if (system.length(conj) != 1) return std::nullopt;
    const int s = system.normal_form(conj).front();
    if (system.is_right_descent(prefix, s)) return std::nullopt;
    word.push_back(s);
    prefix = system.right_multiply(prefix, s);
  }
  return word;
}

bool is_reflection_order(const CoxeterSystem& system, std::span<const Element> sequence) {
  return realizing_word(system, sequence).has_value();
}

ReflectionOrder reverse_order(const CoxeterSystem& system, const ReflectionOrder& order) {
  std::vector<Element> sequence(order.sequence.rbegin(), order.sequence.rend());
  auto word = realizing_word(system, sequence);
  if (!word) {
    throw Error(ErrorCode::InvalidArgument, "reversed sequence is not realized by a reduced word");
  }
  return make_order(system, std::move(sequence), std::move(*word), !order.reversed);
}

Word extend_to_longest(const CoxeterSystem& system, std::span<const int> prefix) {
  if (!system.is_reduced(prefix)) throw Error(ErrorCode::WordNotReduced, format_word(prefix));
  Word word(prefix.begin(), prefix.end());
  Element g = system.evaluate(prefix);
  while (g != system.longest()) {
    for (int s = 1; s <= system.rank(); ++s) {
      if (!system.is_right_descent(g, s)) {
        word.push_back(s);
        g = system.right_multiply(g, s);
        break;
      }
    }
  }
  return word;
}

ReflectionOrder matching_reflection_order(const CoxeterSystem& system, std::span<const int> w_word) {
  Word inverse_word(w_word.rbegin(), w_word.rend());
  const auto w0_word = extend_to_longest(system, inverse_word);
  return reverse_order(system, reflection_order_from_word(system, w0_word));
}

ELLabeling dyer_labeling(const CoxeterSystem& system, const BruhatInterval& interval,
                         const ReflectionOrder& order, bool dualize) {
  ELLabeling out;
  out.poset = dualize ? interval.poset.dual() : interval.poset;
  for (const auto& c : interval.poset.covers()) {
    const auto t = system.multiply(system.inverse(interval.elements[c.lower]), interval.elements[c.upper]);
    out.labels.push_back(t);
    out.label_rank.push_back(order.rank_of(t));
  }
  return out;
}

ELReport verify_EL_exhaustive(const HassePoset& poset, std::span<const std::size_t> edge_rank) {
  require_graded_bounded(poset);
  ELReport report;
  const auto above = poset.strict_up_sets();
  std::vector<std::size_t> labels;
  std::vector<std::vector<std::size_t>> sequences;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (auto b = above[a].find_first(); b != Bitset::npos; b = above[a].find_next(b)) {
      sequences.clear();
      auto walk = [&](auto&& self, std::size_t z) -> void {
        if (z == b) {
          sequences.push_back(labels);
          return;
        }
        for (auto y : poset.up(z)) {
          if (y != b && !above[y].test(b)) continue;
          labels.push_back(edge_rank[*poset.cover_index(z, y)]);
          self(self, y);
          labels.pop_back();
        }
      };
      walk(walk, a);
      ++report.intervals_checked;
      std::size_t increasing = 0;
      const std::vector<std::size_t>* inc_seq = nullptr;
      for (const auto& seq : sequences) {
        if (std::is_sorted(seq.begin(), seq.end())) {
          ++increasing;
          inc_seq = &seq;
        }
      }
      bool ok = increasing == 1;
      if (ok) {
        for (const auto& seq : sequences) {
          if (&seq != inc_seq && !lex_less(*inc_seq, seq)) ok = false;
        }
      }
      if (!ok) {
        report.ok = false;
        report.violation = Cover{a, b};
        report.increasing_chains = increasing;
        return report;
      }
    }
  }
  return report;
}

ELReport verify_EL(const HassePoset& poset, std::span<const std::size_t> edge_rank) {
  require_graded_bounded(poset);
  if (edge_rank.size() != poset.covers().size()) {
    throw Error(ErrorCode::InvalidArgument, "one label per cover is required");
  }
  // Children sorted by label; with ties the DFS order is not lexicographic.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> children(poset.size());
  for (std::size_t z = 0; z < poset.size(); ++z) {
    for (auto y : poset.up(z)) children[z].emplace_back(edge_rank[*poset.cover_index(z, y)], y);
    std::sort(children[z].begin(), children[z].end());
    for (std::size_t k = 1; k < children[z].size(); ++k) {
      if (children[z][k].first == children[z][k - 1].first) {
        return verify_EL_exhaustive(poset, edge_rank);
      }
    }
  }

  ELReport report;
  std::vector<std::size_t> inc_count(poset.size());
  std::vector<char> seen(poset.size());
  std::vector<char> first_increasing(poset.size());
  std::vector<std::size_t> reached;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (auto z : reached) {
      inc_count[z] = 0;
      seen[z] = 0;
    }
    reached.clear();
    // Depth-first in label order visits the chains out of `a` in
    // lexicographic order, so the first arrival at b is the lex-first chain.
    // Later arrivals only matter while the chain is still increasing.
    auto walk = [&](auto&& self, std::size_t z, std::size_t last, bool increasing) -> void {
      for (const auto& [label, y] : children[z]) {
        const bool inc = increasing && label >= last;
        const bool first = !seen[y];
        if (first) {
          seen[y] = 1;
          first_increasing[y] = inc;
          reached.push_back(y);
        }
        if (inc) ++inc_count[y];
        if (first || inc) self(self, y, label, inc);
      }
    };
    walk(walk, a, 0, true);
    std::sort(reached.begin(), reached.end());
    for (auto b : reached) {
      ++report.intervals_checked;
      if (inc_count[b] != 1 || !first_increasing[b]) {
        report.ok = false;
        report.violation = Cover{a, b};
        report.increasing_chains = inc_count[b];
        return report;
      }
    }
  }
  return report;
}

ELReport verify_EL(const ELLabeling& labeling) { return verify_EL(labeling.poset, labeling.label_rank); }

std::vector<std::size_t> last_set(const ELLabeling& labeling, std::size_t x) {
  std::vector<std::size_t> out;
  std::size_t best = 0;
  for (auto z : labeling.poset.down(x)) {
    const auto r = labeling.label_rank[*labeling.poset.cover_index(z, x)];
    if (out.empty() || r > best) {
      out.assign(1, z);
      best = r;
    } else if (r == best) {
      out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string labeling_to_json(const ELLabeling& labeling) {
  auto edges = nlohmann::json::array();
  const auto& covers = labeling.poset.covers();
  for (std::size_t k = 0; k < covers.size(); ++k) {
    edges.push_back({{"lower", covers[k].lower},
                     {"upper", covers[k].upper},
                     {"label_rank", labeling.label_rank[k]}});
  }
  return nlohmann::json{{"edges", std::move(edges)}}.dump();
}

}  // namespace tnn
