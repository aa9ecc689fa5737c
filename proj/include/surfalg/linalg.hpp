#pragma once

#include <vector>

#include "surfalg/rat.hpp"

namespace surfalg {

// incremental row space over the rationals; rows kept in echelon form where
// every stored row has zeros in the pivot columns of the rows before it
struct RowSpace {
  int n;
  std::vector<std::vector<Rat>> rows;
  std::vector<int> pivots;

  explicit RowSpace(int n_) : n(n_) {}

  std::vector<Rat> residual(std::vector<Rat> v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      Rat f = v[pivots[r]] / rows[r][pivots[r]];
      for (int j = 0; j < n; ++j) v[j] -= f * rows[r][j];
    }
    return v;
  }

  // true when v was independent of the current span (and is absorbed)
  bool add(std::vector<Rat> v) {
    v = residual(std::move(v));
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }

  bool contains(std::vector<Rat> v) const {
    v = residual(std::move(v));
    for (auto& x : v)
      if (x != 0) return false;
    return true;
  }

  int dim() const { return (int)rows.size(); }
};

}  // namespace surfalg
