#include "castmatch/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "castmatch/errors.hpp"

namespace castmatch {

namespace {

// Shortest-augmenting-path Kuhn-Munkres with potentials, requires n <= m.
// a is row-major n*m. Returns, per column, the matched row (-1 when free)
// plus the final potentials (0-based).
struct Core {
  std::vector<int> row_of_col;
  std::vector<double> u;
  std::vector<double> v;
};

Core solve_core(std::size_t n, std::size_t m, const std::vector<double>& a) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = static_cast<int>(i);
    int j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = a[(i0 - 1) * m + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = static_cast<int>(j);
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  Core out;
  out.row_of_col.assign(m, -1);
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) out.row_of_col[j - 1] = p[j] - 1;
  }
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  return out;
}

using Pair = std::pair<std::size_t, std::size_t>;

struct Plain {
  double value = 0.0;
  std::vector<Pair> pairs;  // in the caller's orientation, sorted by row
};

// Optimal value and one optimal matching for an arbitrary rectangular matrix
// given through an accessor; no tie-break guarantees.
template <typename At>
Plain solve_plain(std::size_t rows, std::size_t cols, At&& at) {
  const bool transposed = rows > cols;
  const std::size_t n = transposed ? cols : rows;
  const std::size_t m = transposed ? rows : cols;
  std::vector<double> a(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a[i * m + j] = transposed ? at(j, i) : at(i, j);
    }
  }
  const Core core = solve_core(n, m, a);
  Plain out;
  for (std::size_t j = 0; j < m; ++j) {
    const int i = core.row_of_col[j];
    if (i < 0) continue;
    const Pair pr = transposed ? Pair(j, static_cast<std::size_t>(i))
                               : Pair(static_cast<std::size_t>(i), j);
    out.pairs.push_back(pr);
    out.value += at(pr.first, pr.second);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace

Assignment solve_min_assignment(const CostMatrix& mat) {
  const std::size_t rows = mat.rows();
  const std::size_t cols = mat.cols();
  if (rows == 0 || cols == 0) {
    throw EmptyMatrix("solve_min_assignment: matrix has zero rows or columns");
  }
  double scale = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double x = mat.at(r, c);
      if (!std::isfinite(x)) {
        throw NonFiniteCost("solve_min_assignment: non-finite entry at (" + std::to_string(r) +
                            "," + std::to_string(c) + ")");
      }
      scale = std::max(scale, std::abs(x));
    }
  }

  const bool transposed = rows > cols;
  const std::size_t n = transposed ? cols : rows;
  const std::size_t m = transposed ? rows : cols;
  std::vector<double> a(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a[i * m + j] = transposed ? mat.at(j, i) : mat.at(i, j);
    }
  }
  const Core core = solve_core(n, m, a);

  std::vector<Pair> ref;  // reference optimal matching, original orientation
  double opt_value = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const int i = core.row_of_col[j];
    if (i < 0) continue;
    const Pair pr = transposed ? Pair(j, static_cast<std::size_t>(i))
                               : Pair(static_cast<std::size_t>(i), j);
    ref.push_back(pr);
    opt_value += mat.at(pr.first, pr.second);
  }
  std::sort(ref.begin(), ref.end());

  // Reduced cost of an original edge w.r.t. the optimal potentials. Edges of
  // any optimal matching have reduced cost zero, so positive reduced cost
  // prunes tie-break candidates.
  auto reduced = [&](std::size_t r, std::size_t c) {
    const std::size_t i = transposed ? c : r;
    const std::size_t j = transposed ? r : c;
    return a[i * m + j] - core.u[i] - core.v[j];
  };
  const double tol = 1e-9 * (scale + 1.0);
  const double tol_value =
      1e-9 * (scale * static_cast<double>(std::min(rows, cols)) + 1.0);

  // Lexicographic refinement: fix pairs of the sorted list greedily, keeping
  // the total at the optimum. ref always extends the fixed prefix, so the
  // scan is guaranteed to settle each position.
  const std::size_t k = std::min(rows, cols);
  std::vector<char> col_free(cols, 1);
  std::vector<Pair> fixed;
  fixed.reserve(k);
  double fixed_cost = 0.0;
  std::size_t start_row = 0;

  while (fixed.size() < k) {
    const std::size_t pos = fixed.size();
    const std::size_t need = k - pos - 1;
    bool chosen = false;
    for (std::size_t r = start_row; r < rows && !chosen; ++r) {
      if (rows - 1 - r < need) break;  // not enough rows left to finish
      for (std::size_t c = 0; c < cols; ++c) {
        if (!col_free[c]) continue;
        const Pair cand(r, c);
        if (cand == ref[pos]) {  // known-good continuation
          chosen = true;
        } else if (reduced(r, c) <= tol) {
          if (need == 0) {
            chosen = std::abs(fixed_cost + mat.at(r, c) - opt_value) <= tol_value;
            if (chosen) {
              ref = fixed;
              ref.push_back(cand);
            }
          } else {
            std::vector<std::size_t> sub_cols;
            sub_cols.reserve(cols);
            for (std::size_t cc = 0; cc < cols; ++cc) {
              if (col_free[cc] && cc != c) sub_cols.push_back(cc);
            }
            const std::size_t sub_rows = rows - r - 1;
            const Plain sub = solve_plain(sub_rows, sub_cols.size(),
                                          [&](std::size_t sr, std::size_t sc) {
                                            return mat.at(r + 1 + sr, sub_cols[sc]);
                                          });
            if (std::abs(fixed_cost + mat.at(r, c) + sub.value - opt_value) <= tol_value) {
              chosen = true;
              ref = fixed;
              ref.push_back(cand);
              for (const Pair& sp : sub.pairs) {
                ref.emplace_back(r + 1 + sp.first, sub_cols[sp.second]);
              }
              std::sort(ref.begin(), ref.end());
            }
          }
        }
        if (chosen) {
          fixed.push_back(cand);
          fixed_cost += mat.at(r, c);
          col_free[c] = 0;
          start_row = r + 1;
          break;
        }
      }
    }
    if (!chosen) {
      // Unreachable: ref[pos] always passes the scan above.
      throw NonFiniteCost("solve_min_assignment: refinement failed to progress");
    }
  }

  Assignment out;
  out.pairs = std::move(fixed);
  out.total_cost = 0.0;
  for (const Pair& pr : out.pairs) out.total_cost += mat.at(pr.first, pr.second);
  return out;
}

}  // namespace castmatch
