#pragma once

#include <cstdint>
#include <vector>

namespace maxclass {

using IntMat = std::vector<std::vector<std::int64_t>>;

// Smith normal form of an integer matrix A (rows x cols):
//   diag = diagonal entries d_1 | d_2 | ... (nonnegative, divisibility order),
//   col / col_inv = unimodular column transforms with rowspace(A * col) = diag lattice.
// Row operations are applied but not tracked; only the column side is needed
// to read off coordinates of Z^cols modulo the row lattice.
struct SmithResult {
  std::vector<std::int64_t> diag;  // length = cols
  IntMat col;                      // cols x cols
  IntMat col_inv;                  // cols x cols, col * col_inv = I
};

SmithResult smith_normal_form(IntMat a, int cols);

IntMat identity_matrix(int n);
std::vector<std::int64_t> mat_vec_mul_row(const std::vector<std::int64_t>& x, const IntMat& m);

}  // namespace maxclass
