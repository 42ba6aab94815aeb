#pragma once

// Dense scratch accumulator for sparse results over Q[h]/(h^N).

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "yb/trunc_poly.hpp"

namespace yb::detail {

class PolyWorkspace {
 public:
  PolyWorkspace(std::size_t dim, std::size_t order)
      : order_(order), acc_(dim, TruncPoly(order)), flag_(dim, 0) {}

  /// acc[index] += a * b
  void accumulate(std::size_t index, const TruncPoly& a, const TruncPoly& b) {
    if (!flag_[index]) {
      flag_[index] = 1;
      touched_.push_back(index);
    }
    acc_[index].add_product(a, b);
  }

  /// Sorted nonzero entries; resets the workspace.
  std::pair<std::vector<std::size_t>, std::vector<TruncPoly>> drain() {
    std::sort(touched_.begin(), touched_.end());
    std::pair<std::vector<std::size_t>, std::vector<TruncPoly>> out;
    for (std::size_t i : touched_) {
      flag_[i] = 0;
      if (!acc_[i].is_zero()) {
        out.first.push_back(i);
        out.second.push_back(std::move(acc_[i]));
      }
      acc_[i] = TruncPoly(order_);
    }
    touched_.clear();
    return out;
  }

 private:
  std::size_t order_;
  std::vector<TruncPoly> acc_;
  std::vector<char> flag_;
  std::vector<std::size_t> touched_;
};

}  // namespace yb::detail
