#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "tnn/coxeter.hpp"

namespace testing {

inline oracle::Key key_of(const oracle::Model& model, const tnn::CoxeterSystem& sys, tnn::Element a) {
  return model.eval(sys.normal_form(a));
}

inline tnn::Element elem(const tnn::CoxeterSystem& sys, const tnn::Word& word) {
  return sys.evaluate(word);
}

inline std::vector<int> subset_from_mask(int rank, int mask) {
  std::vector<int> J;
  for (int i = 0; i < rank; ++i) {
    if (mask >> i & 1) J.push_back(i + 1);
  }
  return J;
}

}  // namespace testing
