#pragma once

#include <string>

#include "tnn/coxeter.hpp"

namespace tnn {

/// Label (x, u, w) of a cell of (G/P_J)>=0, with x in W^J_max, u in W_J,
/// w in W^J and x <= wu; or the bottom sentinel of the augmented face poset.
struct CellIndex {
  Element x;
  Element u;
  Element w;
  bool is_bottom = false;

  static CellIndex bottom() {
    CellIndex c;
    c.is_bottom = true;
    return c;
  }

  /// l(wu) - l(x); -1 for the bottom sentinel.
  [[nodiscard]] int dimension(const CoxeterSystem& system) const {
    if (is_bottom) return -1;
    return system.length(system.multiply(w, u)) - system.length(x);
  }

  /// x u^-1, the element indexing the same cell in the full flag variety.
  [[nodiscard]] Element projected(const CoxeterSystem& system) const {
    return system.multiply(x, system.inverse(u));
  }

  [[nodiscard]] std::string describe(const CoxeterSystem& system) const {
    if (is_bottom) return "0^";
    return "(" + format_word(system.normal_form(x)) + " | " + format_word(system.normal_form(u)) +
           " | " + format_word(system.normal_form(w)) + ")";
  }

  friend bool operator==(const CellIndex& a, const CellIndex& b) {
    if (a.is_bottom || b.is_bottom) return a.is_bottom == b.is_bottom;
    return a.x == b.x && a.u == b.u && a.w == b.w;
  }
};

}  // namespace tnn
