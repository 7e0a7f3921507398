#include "toricdist/linalg.hpp"

#include <utility>

namespace toricdist {

RowEchelon row_reduce(RationalMatrix a, std::size_t cols) {
  RowEchelon out;
  std::size_t rows = a.size();
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols && p < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = p; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[p], a[sel]);
    Rational inv = 1 / a[p][c];
    for (std::size_t j = c; j < cols; ++j) a[p][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == p || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[p][j] != 0) a[i][j] -= f * a[p][j];
    }
    out.pivots.push_back(c);
    ++p;
  }
  a.resize(p);
  out.reduced = std::move(a);
  return out;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a, std::size_t cols) {
  RowEchelon ech = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix a) {
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(a[c], a[sel]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

bool invert(const RationalMatrix& a, RationalMatrix& out) {
  std::size_t n = a.size();
  RationalMatrix aug(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  RowEchelon ech = row_reduce(aug, 2 * n);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return false;
  out.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = ech.reduced[i][n + j];
  return true;
}

}  // namespace toricdist
