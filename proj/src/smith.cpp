#include "sqk/smith.hpp"

#include "sqk/error.hpp"

#include <algorithm>

namespace sqk {

namespace {

// Moves a nonzero entry of smallest magnitude in the trailing submatrix to
// (t, t). Returns false when the trailing submatrix is zero.
bool pivot_smallest(IntMatrix& m, std::size_t t, std::size_t rows, std::size_t cols) {
  std::size_t br = rows, bc = cols;
  for (std::size_t i = t; i < rows; ++i)
    for (std::size_t j = t; j < cols; ++j)
      if (m[i][j] != 0 && (br == rows || big_abs(m[i][j]) < big_abs(m[br][bc]))) {
        br = i;
        bc = j;
      }
  if (br == rows) return false;
  std::swap(m[t], m[br]);
  for (auto& row : m) std::swap(row[t], row[bc]);
  return true;
}

}  // namespace

std::vector<BigInt> smith_invariant_factors(IntMatrix m, std::size_t columns) {
  const std::size_t rows = m.size();
  for (const auto& row : m)
    if (row.size() != columns) throw InvalidArgument("smith_invariant_factors: ragged matrix");

  std::vector<BigInt> factors;
  const std::size_t rank_bound = std::min(rows, columns);
  for (std::size_t t = 0; t < rank_bound; ++t) {
    if (!pivot_smallest(m, t, rows, columns)) break;
    for (;;) {
      bool dirty = false;
      const BigInt piv = m[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt f = m[i][t] / piv;
        for (std::size_t j = t; j < columns; ++j) m[i][j] -= f * m[t][j];
        if (m[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        if (m[t][j] == 0) continue;
        BigInt f = m[t][j] / piv;
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
        if (m[t][j] != 0) dirty = true;
      }
      if (!dirty) {
        // Divisibility: fold any trailing entry not divisible by the pivot
        // into row t and keep reducing.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
          for (std::size_t j = t + 1; j < columns; ++j)
            if (m[i][j] % piv != 0) {
              for (std::size_t k = t; k < columns; ++k) m[t][k] += m[i][k];
              divides = false;
              break;
            }
        if (divides) break;
      }
      pivot_smallest(m, t, rows, columns);
    }
    factors.push_back(big_abs(m[t][t]));
  }
  factors.resize(columns, BigInt(0));
  return factors;
}

BigInt determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InvalidArgument("determinant: matrix is not square");
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace sqk
