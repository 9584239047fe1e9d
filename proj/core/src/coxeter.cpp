#include "tnn/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "tnn/error.hpp"

namespace tnn {

namespace {

std::atomic<std::uint32_t> next_tag{1};

using Matrix = std::vector<std::vector<int>>;

void link(Matrix& a, int i, int j, int aij = -1, int aji = -1) {
  a[i][j] = aij;
  a[j][i] = aji;
}

Matrix cartan_matrix_of(const CoxeterType& t) {
  const int n = t.rank;
  Matrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -1, -2);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E': {
      // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
      const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (auto [i, j] : edges) {
        if (i < n && j < n) link(a, i, j);
      }
      break;
    }
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3);
      break;
    case 'G':
      link(a, 0, 1, -3, -1);
      break;
    default:
      throw Error(ErrorCode::UnknownType, std::string(1, t.family));
  }
  return a;
}

Matrix coxeter_matrix_of(const Matrix& cartan) {
  const auto n = cartan.size();
  Matrix m(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      switch (cartan[i][j] * cartan[j][i]) {
        case 0: m[i][j] = 2; break;
        case 1: m[i][j] = 3; break;
        case 2: m[i][j] = 4; break;
        case 3: m[i][j] = 6; break;
        default: throw Error(ErrorCode::UnknownType, "non-crystallographic Cartan entry");
      }
    }
  }
  return m;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = saturating_mul(r, static_cast<std::uint64_t>(i));
  return r;
}

std::uint64_t pow2(int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r = saturating_mul(r, 2);
  return r;
}

// Root system in simple-root coordinates, with each generator acting as a
// permutation of the root list (positive roots first, then their negatives).
struct RootSystem {
  std::vector<std::vector<int>> roots;
  std::size_t num_positive = 0;
  std::vector<std::vector<std::uint16_t>> simple_action;  // [s][root]
};

RootSystem build_roots(const Matrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  auto reflect = [&](const std::vector<int>& beta, int i) {
    std::vector<int> out = beta;
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += cartan[i][j] * beta[j];
    out[i] -= pairing;
    return out;
  };

  std::map<std::vector<int>, std::size_t> seen;
  std::vector<std::vector<int>> positive;
  std::queue<std::vector<int>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<int> alpha(n, 0);
    alpha[i] = 1;
    seen.emplace(alpha, positive.size());
    positive.push_back(alpha);
    todo.push(alpha);
  }
  while (!todo.empty()) {
    auto beta = todo.front();
    todo.pop();
    for (int i = 0; i < n; ++i) {
      auto gamma = reflect(beta, i);
      if (std::all_of(gamma.begin(), gamma.end(), [](int c) { return c <= 0; })) continue;
      if (seen.emplace(gamma, positive.size()).second) {
        positive.push_back(gamma);
        todo.push(gamma);
      }
    }
  }

  RootSystem rs;
  rs.num_positive = positive.size();
  rs.roots = positive;
  for (const auto& p : positive) {
    std::vector<int> neg(p.size());
    std::transform(p.begin(), p.end(), neg.begin(), [](int c) { return -c; });
    rs.roots.push_back(std::move(neg));
  }
  std::map<std::vector<int>, std::uint16_t> index;
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    index.emplace(rs.roots[k], static_cast<std::uint16_t>(k));
  }
  rs.simple_action.assign(n, std::vector<std::uint16_t>(rs.roots.size()));
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      rs.simple_action[i][k] = index.at(reflect(rs.roots[k], i));
    }
  }
  return rs;
}

using Perm = std::vector<std::uint16_t>;

std::string perm_key(const Perm& p, int rank) {
  // w is determined by the images of the simple roots.
  return std::string(reinterpret_cast<const char*>(p.data()),
                     static_cast<std::size_t>(rank) * sizeof(std::uint16_t));
}

}  // namespace

std::string format_word(std::span<const int> word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << word[i];
  }
  return os.str();
}

std::string CoxeterType::label() const { return std::string(1, family) + std::to_string(rank); }

CoxeterType make_type(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: throw Error(ErrorCode::UnknownType, std::string("unknown family '") + family + "'");
  }
  if (!ok || rank > 64) {
    throw Error(ErrorCode::RankOutOfRange,
                std::string(1, family) + " does not admit rank " + std::to_string(rank));
  }
  return CoxeterType{family, rank};
}

CoxeterType parse_type(std::string_view label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0]))) {
    throw Error(ErrorCode::UnknownType, "cannot parse type '" + std::string(label) + "'");
  }
  int rank = 0;
  auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorCode::UnknownType, "cannot parse type '" + std::string(label) + "'");
  }
  return make_type(label[0], rank);
}

std::uint64_t weyl_group_order(const CoxeterType& t) {
  switch (t.family) {
    case 'A': return factorial(t.rank + 1);
    case 'B':
    case 'C': return saturating_mul(pow2(t.rank), factorial(t.rank));
    case 'D': return saturating_mul(pow2(t.rank - 1), factorial(t.rank));
    case 'E':
      return t.rank == 6 ? 51840ULL : t.rank == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

CoxeterSystem CoxeterSystem::build(std::string_view label, const BuildOptions& options) {
  return build(parse_type(label), options);
}

CoxeterSystem CoxeterSystem::build(const CoxeterType& requested, const BuildOptions& options) {
  const CoxeterType type = make_type(requested.family, requested.rank);
  const auto expected_order = weyl_group_order(type);
  if (expected_order > options.max_order) {
    throw Error(ErrorCode::GroupTooLarge, type.label() + " has order " +
                                              std::to_string(expected_order) + " > cap " +
                                              std::to_string(options.max_order));
  }

  CoxeterSystem sys;
  sys.type_ = type;
  sys.tag_ = next_tag.fetch_add(1);
  sys.cartan_matrix_ = cartan_matrix_of(type);
  sys.coxeter_matrix_ = coxeter_matrix_of(sys.cartan_matrix_);
  const int n = type.rank;
  const RootSystem rs = build_roots(sys.cartan_matrix_);

  // Breadth-first closure under right multiplication by generators.
  std::vector<Perm> perms;
  std::unordered_map<std::string, std::uint32_t> lookup;
  Perm id(rs.roots.size());
  std::iota(id.begin(), id.end(), std::uint16_t{0});
  lookup.emplace(perm_key(id, n), 0);
  perms.push_back(id);
  std::vector<std::uint32_t> right_bfs;
  for (std::size_t w = 0; w < perms.size(); ++w) {
    for (int s = 0; s < n; ++s) {
      Perm ws(rs.roots.size());
      for (std::size_t k = 0; k < ws.size(); ++k) ws[k] = perms[w][rs.simple_action[s][k]];
      auto [it, inserted] = lookup.emplace(perm_key(ws, n), static_cast<std::uint32_t>(perms.size()));
      if (inserted) perms.push_back(std::move(ws));
      right_bfs.push_back(it->second);
    }
  }
  const std::size_t order = perms.size();
  if (order != expected_order) {
    throw Error(ErrorCode::UnknownType, "enumerated order " + std::to_string(order) +
                                            " disagrees with " + std::to_string(expected_order));
  }

  std::vector<std::uint32_t> left_bfs(order * n);
  std::vector<int> len_bfs(order);
  for (std::size_t w = 0; w < order; ++w) {
    for (int s = 0; s < n; ++s) {
      Perm sw(rs.roots.size());
      for (std::size_t k = 0; k < sw.size(); ++k) sw[k] = rs.simple_action[s][perms[w][k]];
      left_bfs[w * n + s] = lookup.at(perm_key(sw, n));
    }
    int inversions = 0;
    for (std::size_t k = 0; k < rs.num_positive; ++k) {
      if (perms[w][k] >= rs.num_positive) ++inversions;
    }
    len_bfs[w] = inversions;
  }
  perms.clear();
  lookup.clear();

  // ShortLex normal forms: the first letter is the smallest left descent.
  std::vector<std::uint32_t> by_length(order);
  std::iota(by_length.begin(), by_length.end(), 0u);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](auto a, auto b) { return len_bfs[a] < len_bfs[b]; });
  std::vector<Word> nf_bfs(order);
  for (auto w : by_length) {
    if (len_bfs[w] == 0) continue;
    for (int s = 0; s < n; ++s) {
      auto sw = left_bfs[w * n + s];
      if (len_bfs[sw] < len_bfs[w]) {
        nf_bfs[w].reserve(len_bfs[w]);
        nf_bfs[w].push_back(s + 1);
        nf_bfs[w].insert(nf_bfs[w].end(), nf_bfs[sw].begin(), nf_bfs[sw].end());
        break;
      }
    }
  }

  // Renumber so that element indices follow ShortLex order.
  std::vector<std::uint32_t> order_new(order);
  std::iota(order_new.begin(), order_new.end(), 0u);
  std::sort(order_new.begin(), order_new.end(), [&](auto a, auto b) {
    if (len_bfs[a] != len_bfs[b]) return len_bfs[a] < len_bfs[b];
    return nf_bfs[a] < nf_bfs[b];
  });
  std::vector<std::uint32_t> new_index(order);
  for (std::uint32_t i = 0; i < order; ++i) new_index[order_new[i]] = i;

  sys.words_.resize(order);
  sys.lengths_.resize(order);
  sys.right_.resize(order * n);
  sys.left_.resize(order * n);
  for (std::uint32_t i = 0; i < order; ++i) {
    const auto old = order_new[i];
    sys.words_[i] = std::move(nf_bfs[old]);
    sys.lengths_[i] = len_bfs[old];
    for (int s = 0; s < n; ++s) {
      sys.right_[i * n + s] = new_index[right_bfs[old * n + s]];
      sys.left_[i * n + s] = new_index[left_bfs[old * n + s]];
    }
  }
  sys.longest_ = static_cast<std::uint32_t>(order - 1);

  sys.inverse_.resize(order);
  for (std::uint32_t i = 0; i < order; ++i) {
    std::uint32_t r = 0;
    const auto& word = sys.words_[i];
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = sys.right_[r * n + *it - 1];
    sys.inverse_[i] = r;
  }

  // Reflections are the conjugates of the generators.
  sys.is_reflection_.assign(order, 0);
  for (std::uint32_t w = 0; w < order; ++w) {
    for (int s = 1; s <= n; ++s) {
      auto t = sys.multiply(sys.right_multiply(sys.element(w), s), sys.inverse(sys.element(w)));
      sys.is_reflection_[t.index()] = 1;
    }
  }
  for (std::uint32_t i = 0; i < order; ++i) {
    if (!sys.is_reflection_[i]) continue;
    // Peel matching letters off both ends to get a palindrome u s u^-1.
    Word prefix;
    auto t = sys.element(i);
    while (sys.length(t) > 1) {
      int r = sys.normal_form(t).front();
      prefix.push_back(r);
      t = sys.right_multiply(sys.left_multiply(r, t), r);
    }
    Word word = prefix;
    word.push_back(sys.normal_form(t).front());
    word.insert(word.end(), prefix.rbegin(), prefix.rend());
    sys.reflections_.push_back(Reflection{sys.element(i), std::move(word)});
  }
  if (sys.reflections_.size() != rs.num_positive ||
      static_cast<std::size_t>(sys.lengths_[sys.longest_]) != rs.num_positive) {
    throw Error(ErrorCode::UnknownType, "reflection count does not match positive roots");
  }
  return sys;
}

void CoxeterSystem::check(Element a) const {
  if (a.tag_ != tag_ || a.index_ >= words_.size()) {
    throw Error(ErrorCode::SystemMismatch, "element does not belong to " + label());
  }
}

void CoxeterSystem::check_generator(int s) const {
  if (s < 1 || s > rank()) {
    throw Error(ErrorCode::InvalidWord,
                "generator " + std::to_string(s) + " outside 1.." + std::to_string(rank()));
  }
}

Element CoxeterSystem::generator(int s) const {
  check_generator(s);
  return Element(right_[s - 1], tag_);
}

Element CoxeterSystem::element(std::size_t index) const {
  if (index >= words_.size()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return Element(static_cast<std::uint32_t>(index), tag_);
}

std::vector<Element> CoxeterSystem::elements() const {
  std::vector<Element> out;
  out.reserve(words_.size());
  for (std::uint32_t i = 0; i < words_.size(); ++i) out.push_back(Element(i, tag_));
  return out;
}

Element CoxeterSystem::multiply(Element a, Element b) const {
  check(a);
  check(b);
  const auto n = static_cast<std::size_t>(rank());
  std::uint32_t r = a.index_;
  for (int s : words_[b.index_]) r = right_[r * n + s - 1];
  return Element(r, tag_);
}

Element CoxeterSystem::inverse(Element a) const {
  check(a);
  return Element(inverse_[a.index_], tag_);
}

int CoxeterSystem::length(Element a) const {
  check(a);
  return lengths_[a.index_];
}

const Word& CoxeterSystem::normal_form(Element a) const {
  check(a);
  return words_[a.index_];
}

Element CoxeterSystem::right_multiply(Element a, int s) const {
  check(a);
  check_generator(s);
  return Element(right_[a.index_ * rank() + s - 1], tag_);
}

Element CoxeterSystem::left_multiply(int s, Element a) const {
  check(a);
  check_generator(s);
  return Element(left_[a.index_ * rank() + s - 1], tag_);
}

bool CoxeterSystem::is_right_descent(Element a, int s) const {
  return length(right_multiply(a, s)) < length(a);
}

bool CoxeterSystem::is_left_descent(int s, Element a) const {
  return length(left_multiply(s, a)) < length(a);
}

Element CoxeterSystem::evaluate(std::span<const int> word) const {
  std::uint32_t r = 0;
  for (int s : word) {
    check_generator(s);
    r = right_[r * rank() + s - 1];
  }
  return Element(r, tag_);
}

bool CoxeterSystem::is_reduced(std::span<const int> word) const {
  std::uint32_t r = 0;
  for (int s : word) {
    check_generator(s);
    auto next = right_[r * rank() + s - 1];
    if (lengths_[next] < lengths_[r]) return false;
    r = next;
  }
  return true;
}

bool CoxeterSystem::is_reflection(Element a) const {
  check(a);
  return is_reflection_[a.index_] != 0;
}

std::string CoxeterSystem::to_json() const {
  nlohmann::json j;
  j["type"] = label();
  j["order"] = order();
  j["longest_word"] = normal_form(longest());
  return j.dump();
}

std::vector<Word> all_reduced_words(const CoxeterSystem& system, Element w, std::size_t max_length) {
  const auto len = static_cast<std::size_t>(system.length(w));
  if (len > max_length) {
    throw Error(ErrorCode::WordTooLong, "length " + std::to_string(len) + " exceeds cap " +
                                            std::to_string(max_length));
  }
  std::unordered_map<std::uint32_t, std::vector<Word>> memo;
  auto rec = [&](auto&& self, Element v) -> const std::vector<Word>& {
    if (auto it = memo.find(v.index()); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (system.length(v) == 0) {
      out.emplace_back();
    } else {
      for (int s = 1; s <= system.rank(); ++s) {
        auto vs = system.right_multiply(v, s);
        if (system.length(vs) > system.length(v)) continue;
        for (const auto& prefix : self(self, vs)) {
          Word word = prefix;
          word.push_back(s);
          out.push_back(std::move(word));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(v.index(), std::move(out)).first->second;
  };
  return rec(rec, w);
}

}  // namespace tnn
