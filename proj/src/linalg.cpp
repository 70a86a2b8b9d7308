#include "f1/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace f1 {

Rat qmat_det(QMat a) {
  size_t n = a.size();
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
    det *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] * inv;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

Int zmat_det(ZMat a) {
  size_t n = a.size();
  QMat q(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q[i][j] = Rat(a[i][j]);
  Rat d = qmat_det(std::move(q));
  assert(is_integer(d));
  return d.get_num();
}

int qmat_rank(QMat a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    Rat inv = Rat(1) / a[row][col];
    for (size_t r = row + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] * inv;
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    ++rank;
    ++row;
  }
  return rank;
}

std::optional<QVec> solve_columns(const QMat& a, const QVec& b) {
  size_t rows = a.size();
  if (rows == 0) return QVec{};
  size_t cols = a[0].size();
  // augmented [A | b], eliminate
  QMat m(rows, QVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  std::vector<size_t> pivot_row(cols, SIZE_MAX);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue; // dependent column: caller promised none
    std::swap(m[piv], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (size_t c = col; c <= cols; ++c) m[row][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  // rows below `row` must have zero rhs, else inconsistent
  for (size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  QVec x(cols, Rat(0));
  for (size_t col = 0; col < cols; ++col) {
    if (pivot_row[col] == SIZE_MAX) return std::nullopt; // dependent columns
    x[col] = m[pivot_row[col]][cols];
  }
  return x;
}

ZMat unimodular_inverse(const ZMat& a) {
  size_t n = a.size();
  QMat m(n, QVec(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    m[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("unimodular_inverse: singular matrix");
    std::swap(m[piv], m[col]);
    Rat inv = Rat(1) / m[col][col];
    for (size_t c = 0; c < 2 * n; ++c) m[col][c] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  ZMat out(n, ZVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat v = m[i][n + j];
      if (!is_integer(v)) throw std::invalid_argument("unimodular_inverse: det != ±1");
      out[i][j] = v.get_num();
    }
  return out;
}

// Phase-1 simplex with Bland's rule; exact rationals, no tolerances.
bool lp_feasible(QMat a, QVec b) {
  size_t m = a.size();
  if (m == 0) return true;
  size_t n = a[0].size();
  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  // tableau: columns 0..n-1 original, n..n+m-1 artificial, last = rhs
  size_t width = n + m + 1;
  QMat t(m + 1, QVec(width, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
  }
  // objective row: minimize sum of artificials -> row = -(sum of constraint rows)
  for (size_t j = 0; j < width; ++j) {
    Rat s = 0;
    for (size_t i = 0; i < m; ++i) s += t[i][j];
    t[m][j] = -s;
  }
  for (size_t i = 0; i < m; ++i) t[m][n + i] = 0;
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    size_t enter = SIZE_MAX;
    for (size_t j = 0; j < n + m; ++j)
      if (t[m][j] < 0) { enter = j; break; } // Bland: lowest index
    if (enter == SIZE_MAX) break;
    size_t leave = SIZE_MAX;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][width - 1] / t[i][enter];
      if (leave == SIZE_MAX || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == SIZE_MAX) break; // unbounded phase-1 cannot happen; bail
    Rat piv = t[leave][enter];
    for (size_t c = 0; c < width; ++c) t[leave][c] /= piv;
    for (size_t r = 0; r <= m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rat f = t[r][enter];
      for (size_t c = 0; c < width; ++c) t[r][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }
  return t[m][width - 1] == 0;
}

std::optional<ZMat> unimodular_complement(const ZMat& a, Int* index) {
  size_t k = a.size();
  if (k == 0) return std::nullopt;
  size_t r = a[0].size();
  if (k > r) return std::nullopt;
  ZMat w = a;                 // k x r, column-reduced in place
  ZMat v(r, ZVec(r, 0));      // accumulated column ops
  for (size_t i = 0; i < r; ++i) v[i][i] = 1;

  auto col_swap = [&](size_t c1, size_t c2) {
    for (size_t i = 0; i < k; ++i) std::swap(w[i][c1], w[i][c2]);
    for (size_t i = 0; i < r; ++i) std::swap(v[i][c1], v[i][c2]);
  };
  auto col_axpy = [&](size_t dst, size_t src, const Int& f) {
    // col dst -= f * col src
    for (size_t i = 0; i < k; ++i) w[i][dst] -= f * w[i][src];
    for (size_t i = 0; i < r; ++i) v[i][dst] -= f * v[i][src];
  };
  auto col_neg = [&](size_t c) {
    for (size_t i = 0; i < k; ++i) w[i][c] = -w[i][c];
    for (size_t i = 0; i < r; ++i) v[i][c] = -v[i][c];
  };

  for (size_t row = 0; row < k; ++row) {
    // gcd-sweep columns row..r-1 on this row
    while (true) {
      size_t nz = SIZE_MAX;
      for (size_t c = row; c < r; ++c)
        if (w[row][c] != 0) { nz = c; break; }
      if (nz == SIZE_MAX) {
        if (index) *index = 0;
        return std::nullopt; // rank deficient
      }
      // find smallest |entry| among nonzeros; use as pivot
      size_t piv = nz;
      for (size_t c = row; c < r; ++c)
        if (w[row][c] != 0 && cmp(abs(w[row][c]), abs(w[row][piv])) < 0) piv = c;
      if (piv != row) col_swap(piv, row);
      if (w[row][row] < 0) col_neg(row);
      bool clean = true;
      for (size_t c = row + 1; c < r; ++c) {
        if (w[row][c] == 0) continue;
        Int f = w[row][c] / w[row][row]; // floor toward zero fine for reduce
        col_axpy(c, row, f);
        if (w[row][c] != 0) clean = false;
      }
      if (clean) break;
    }
    // clear earlier columns on this row
    for (size_t c = 0; c < row; ++c) {
      if (w[row][c] == 0) continue;
      if (w[row][c] % w[row][row] != 0) {
        // can't clean without disturbing earlier rows; handled below by index test
        continue;
      }
      Int f = w[row][c] / w[row][row];
      col_axpy(c, row, f);
    }
  }
  // now w is lower-triangular-ish: w[i][i] > 0, w[i][c] = 0 for c > i
  Int idx = 1;
  for (size_t i = 0; i < k; ++i) idx *= w[i][i];
  if (index) *index = idx;
  if (idx != 1) return std::nullopt;
  // diagonal all 1: clear remaining below-diagonal (earlier-column) entries
  for (size_t row = 0; row < k; ++row)
    for (size_t c = 0; c < row; ++c)
      if (w[row][c] != 0) col_axpy(c, row, w[row][c]);
  return v;
}

} // namespace f1
