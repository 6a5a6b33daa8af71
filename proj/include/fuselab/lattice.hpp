#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace fuselab {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;

namespace lat {

// Canonical row Hermite normal form: pivots positive, entries above each
// pivot reduced into [0, pivot), zero rows dropped. The result is the unique
// canonical basis of the row lattice.
inline IntMat hermite_rows(IntMat m) {
  if (m.empty()) return m;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    // gcd-eliminate below: leave at most one nonzero entry in this column
    while (true) {
      int pivot = -1;
      for (int r = row; r < static_cast<int>(m.size()); ++r) {
        if (m[r][col] == 0) continue;
        if (pivot == -1 || std::abs(m[r][col]) < std::abs(m[pivot][col])) pivot = r;
      }
      if (pivot == -1) break;
      std::swap(m[row], m[pivot]);
      bool others = false;
      for (int r = row + 1; r < static_cast<int>(m.size()); ++r) {
        if (m[r][col] == 0) continue;
        std::int64_t q = m[r][col] / m[row][col];
        if (q != 0)
          for (int c = 0; c < cols; ++c) m[r][c] = checked::sub(m[r][c], checked::mul(q, m[row][c]));
        if (m[r][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (m[row][col] == 0) continue;
    if (m[row][col] < 0)
      for (int c = 0; c < cols; ++c) m[row][c] = checked::sub(0, m[row][c]);
    // reduce entries above the pivot into [0, pivot)
    for (int r = 0; r < row; ++r) {
      std::int64_t v = m[r][col];
      std::int64_t piv = m[row][col];
      std::int64_t q = v / piv;
      if (v % piv < 0) --q;  // floor division
      if (q != 0)
        for (int c = 0; c < cols; ++c) m[r][c] = checked::sub(m[r][c], checked::mul(q, m[row][c]));
    }
    ++row;
  }
  m.resize(row);
  return m;
}

// Basis (canonical HNF rows) of { x in Z^n : A x = 0 } for A with n columns.
inline IntMat kernel_basis(const IntMat& a, int n) {
  const int k = static_cast<int>(a.size());
  // rows of work: [column j of movement | e_j], eliminate over first k coords
  IntMat work(n, IntVec(k + n, 0));
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < k; ++r) work[j][r] = a[r][j];
    work[j][k + j] = 1;
  }
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    while (true) {
      int pivot = -1;
      for (int r = row; r < n; ++r) {
        if (work[r][col] == 0) continue;
        if (pivot == -1 || std::abs(work[r][col]) < std::abs(work[pivot][col])) pivot = r;
      }
      if (pivot == -1) break;
      std::swap(work[row], work[pivot]);
      bool others = false;
      for (int r = row + 1; r < n; ++r) {
        if (work[r][col] == 0) continue;
        std::int64_t q = work[r][col] / work[row][col];
        if (q != 0)
          for (int c = 0; c < k + n; ++c)
            work[r][c] = checked::sub(work[r][c], checked::mul(q, work[row][c]));
        if (work[r][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (work[row][col] != 0) ++row;
  }
  IntMat kernel;
  for (int r = row; r < n; ++r) {
    bool zero = true;
    for (int c = 0; c < k; ++c)
      if (work[r][c] != 0) {
        zero = false;
        break;
      }
    internal_check(zero, "kernel elimination left a nonzero leading block");
    kernel.emplace_back(work[r].begin() + k, work[r].end());
  }
  return hermite_rows(std::move(kernel));
}

// membership of v in the row lattice of a canonical HNF basis
inline bool lattice_contains(const IntMat& hnf, IntVec v) {
  for (const auto& rowvec : hnf) {
    int pivot_col = -1;
    for (std::size_t c = 0; c < rowvec.size(); ++c)
      if (rowvec[c] != 0) {
        pivot_col = static_cast<int>(c);
        break;
      }
    if (pivot_col == -1) continue;
    if (v[pivot_col] % rowvec[pivot_col] != 0) return false;
    std::int64_t q = v[pivot_col] / rowvec[pivot_col];
    if (q != 0)
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] = checked::sub(v[c], checked::mul(q, rowvec[c]));
  }
  for (std::int64_t x : v)
    if (x != 0) return false;
  return true;
}

// Integer rows from rows of rationals (used when constraint coefficients come
// out of exact cyclotomic coordinates): scale each row by the lcm of its
// denominators.
inline IntVec scale_to_integers(const std::vector<Rational>& row) {
  std::int64_t l = 1;
  for (const auto& r : row) l = std::lcm(l, r.den());
  IntVec out;
  out.reserve(row.size());
  for (const auto& r : row) out.push_back(checked::mul(r.num(), l / r.den()));
  return out;
}

}  // namespace lat
}  // namespace fuselab
