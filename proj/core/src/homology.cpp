#include "tnn/homology.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "tnn/error.hpp"

namespace tnn {

std::vector<std::size_t> OrderComplex::f_vector() const {
  std::vector<std::size_t> f;
  f.reserve(simplices.size());
  for (const auto& layer : simplices) f.push_back(layer.size());
  return f;
}

std::size_t OrderComplex::total() const {
  std::size_t n = 0;
  for (const auto& layer : simplices) n += layer.size();
  return n;
}

OrderComplex order_complex(const HassePoset& poset, std::size_t cap) {
  const auto above = poset.strict_up_sets();
  OrderComplex complex;
  std::size_t count = 0;
  std::vector<std::uint32_t> chain;

  auto emit = [&] {
    if (++count > cap) {
      throw Error(ErrorCode::ComplexTooLarge,
                  "order complex exceeds " + std::to_string(cap) + " simplices");
    }
    const auto d = chain.size() - 1;
    if (complex.simplices.size() <= d) complex.simplices.resize(d + 1);
    complex.simplices[d].push_back(chain);
  };

  // Chains are extended upward along the strict order.
  auto extend = [&](auto&& self, std::size_t top) -> void {
    emit();
    for (auto next = above[top].find_first(); next != Bitset::npos; next = above[top].find_next(next)) {
      chain.push_back(static_cast<std::uint32_t>(next));
      self(self, next);
      chain.pop_back();
    }
  };
  for (std::size_t v = 0; v < poset.size(); ++v) {
    chain.assign(1, static_cast<std::uint32_t>(v));
    extend(extend, v);
  }
  for (auto& layer : complex.simplices) std::sort(layer.begin(), layer.end());
  return complex;
}

std::size_t BettiProfile::betti(int d) const {
  const auto i = static_cast<std::size_t>(d + 1);
  return (d >= -1 && i < reduced.size()) ? reduced[i] : 0;
}

bool BettiProfile::concentrated_in(int d, std::size_t value) const {
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const int deg = static_cast<int>(i) - 1;
    if (deg != d && reduced[i] != 0) return false;
  }
  return betti(d) == value;
}

namespace {

using Column = std::vector<std::uint32_t>;  // sorted row indices

void add_into(Column& target, const Column& source) {
  Column out;
  out.reserve(target.size() + source.size());
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(out));
  target.swap(out);
}

// Rank over GF(2) of a matrix given by sparse columns (standard persistence reduction).
std::size_t gf2_rank(std::vector<Column> columns, std::size_t rows) {
  std::vector<std::int64_t> pivot_owner(rows, -1);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto& col = columns[j];
    while (!col.empty()) {
      const auto low = col.back();
      const auto owner = pivot_owner[low];
      if (owner < 0) {
        pivot_owner[low] = static_cast<std::int64_t>(j);
        ++rank;
        break;
      }
      add_into(col, columns[static_cast<std::size_t>(owner)]);
    }
  }
  return rank;
}

}  // namespace

BettiProfile gf2_betti(const OrderComplex& complex) {
  const auto& s = complex.simplices;
  const auto top = s.size();  // dimensions 0 .. top-1
  // Augmented chain complex: C_{-1} has one generator; ranks[d+1] = rank of boundary C_d -> C_{d-1}.
  std::vector<std::size_t> dims(top + 1);
  dims[0] = 1;
  for (std::size_t d = 0; d < top; ++d) dims[d + 1] = s[d].size();

  std::vector<std::size_t> rank(top + 2, 0);
  if (top > 0) rank[1] = s[0].empty() ? 0 : 1;
  for (std::size_t d = 1; d < top; ++d) {
    const auto& faces = s[d - 1];
    std::vector<Column> columns;
    columns.reserve(s[d].size());
    Column face;
    for (const auto& simplex : s[d]) {
      Column col;
      col.reserve(simplex.size());
      for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
        face.clear();
        for (std::size_t k = 0; k < simplex.size(); ++k) {
          if (k != drop) face.push_back(simplex[k]);
        }
        const auto it = std::lower_bound(faces.begin(), faces.end(), face);
        col.push_back(static_cast<std::uint32_t>(it - faces.begin()));
      }
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    rank[d + 1] = gf2_rank(std::move(columns), faces.size());
  }

  BettiProfile profile;
  profile.reduced.resize(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    // Chain group index i corresponds to degree i-1.
    profile.reduced[i] = dims[i] - rank[i] - rank[i + 1];
    const long sign = (i % 2 == 1) ? 1 : -1;  // degree i-1
    profile.reduced_euler += sign * static_cast<long>(profile.reduced[i]);
  }
  while (profile.reduced.size() > 1 && profile.reduced.back() == 0) profile.reduced.pop_back();
  return profile;
}

BettiProfile reduced_homology(const HassePoset& poset, std::size_t cap) {
  return gf2_betti(order_complex(poset, cap));
}

std::string homology_to_json(const OrderComplex& complex, const BettiProfile& profile) {
  nlohmann::json j;
  j["f_vector"] = complex.f_vector();
  j["betti"] = profile.reduced;
  return j.dump();
}

}  // namespace tnn
