#include "maxclass/snf.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace maxclass {

IntMat identity_matrix(int n) {
  IntMat m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

std::vector<std::int64_t> mat_vec_mul_row(const std::vector<std::int64_t>& x, const IntMat& m) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < cols; ++j) y[j] += x[i] * m[i][j];
  }
  return y;
}

SmithResult smith_normal_form(IntMat a, int cols) {
  const std::size_t nc = static_cast<std::size_t>(cols);
  for (auto& row : a)
    if (row.size() != nc) throw std::logic_error("smith_normal_form: ragged matrix");
  // Ensure at least `cols` rows exist so every coordinate gets a diagonal entry.
  SmithResult res;
  res.col = identity_matrix(cols);
  res.col_inv = identity_matrix(cols);
  res.diag.assign(nc, 0);

  const std::size_t nr = a.size();
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < nr; ++r) std::swap(a[r][c1], a[r][c2]);
    for (std::size_t r = 0; r < nc; ++r) std::swap(res.col[r][c1], res.col[r][c2]);
    std::swap(res.col_inv[c1], res.col_inv[c2]);
  };
  // col c2 += f * col c1  (inverse tracked on the row side of col_inv)
  auto add_col = [&](std::size_t c2, std::size_t c1, std::int64_t f) {
    if (!f) return;
    for (std::size_t r = 0; r < nr; ++r) a[r][c2] += f * a[r][c1];
    for (std::size_t r = 0; r < nc; ++r) res.col[r][c2] += f * res.col[r][c1];
    for (std::size_t c = 0; c < nc; ++c) res.col_inv[c1][c] -= f * res.col_inv[c2][c];
  };
  auto negate_col = [&](std::size_t c) {
    for (std::size_t r = 0; r < nr; ++r) a[r][c] = -a[r][c];
    for (std::size_t r = 0; r < nc; ++r) res.col[r][c] = -res.col[r][c];
    for (std::size_t cc = 0; cc < nc; ++cc) res.col_inv[c][cc] = -res.col_inv[c][cc];
  };
  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 != r2) std::swap(a[r1], a[r2]);
  };
  auto add_row = [&](std::size_t r2, std::size_t r1, std::int64_t f) {
    if (!f) return;
    for (std::size_t c = 0; c < nc; ++c) a[r2][c] += f * a[r1][c];
  };

  std::size_t t = 0;
  const std::size_t lim = std::min(nr, nc);
  while (t < lim) {
    // Find the minimal nonzero |entry| in the trailing block.
    std::size_t pr = t, pc = t;
    std::int64_t best = 0;
    for (std::size_t r = t; r < nr; ++r)
      for (std::size_t c = t; c < nc; ++c) {
        std::int64_t v = std::llabs(a[r][c]);
        if (v && (!best || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (!best) break;  // trailing block is zero
    swap_rows(t, pr);
    swap_cols(t, pc);
    bool dirty = false;
    for (std::size_t r = t + 1; r < nr; ++r) {
      std::int64_t q = a[r][t] / a[t][t];
      add_row(r, t, -q);
      if (a[r][t]) dirty = true;
    }
    for (std::size_t c = t + 1; c < nc; ++c) {
      std::int64_t q = a[t][c] / a[t][t];
      add_col(c, t, -q);
      if (a[t][c]) dirty = true;
    }
    if (dirty) continue;  // smaller remainders appeared; pick a new pivot
    // Enforce divisibility of the trailing block by the pivot.
    bool fixed = true;
    for (std::size_t r = t + 1; r < nr && fixed; ++r)
      for (std::size_t c = t + 1; c < nc && fixed; ++c)
        if (a[r][c] % a[t][t]) {
          add_row(t, r, 1);
          fixed = false;
        }
    if (!fixed) continue;
    if (a[t][t] < 0) negate_col(t);
    ++t;
  }
  for (std::size_t i = 0; i < nc; ++i) res.diag[i] = (i < nr) ? a[i][i] : 0;
  // Diagonal may have trailing zeros before positive entries only if rows ran
  // out; divisibility of the nonzero prefix is guaranteed by construction.
  return res;
}

}  // namespace maxclass
