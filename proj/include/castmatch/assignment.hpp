#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace castmatch {

// Dense rectangular cost matrix. Entries may be negative (mean-centered
// costs); they must be finite.
class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  double& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

struct Assignment {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted by (row, col)
  double total_cost = 0.0;
};

// Exact minimum-cost bipartite matching of size min(rows, cols) via the
// Kuhn-Munkres method with row/column potentials. Among optimal matchings the
// one with the lexicographically smallest sorted pair list is returned.
// Throws EmptyMatrix if either side is zero, NonFiniteCost on NaN/Inf entries.
Assignment solve_min_assignment(const CostMatrix& m);

}  // namespace castmatch
