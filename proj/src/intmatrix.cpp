#include "toricdist/intmatrix.hpp"

#include <utility>

namespace toricdist {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix id(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// row_i -= q * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] -= q * m[j][c];
}

void add_col(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  for (auto& row : m) row[i] -= q * row[j];
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t t = 0; t < inner; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  SmithForm out;
  out.left = identity(rows);
  out.right = identity(cols);

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pick the smallest nonzero entry of the remaining block as pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(a, t, pi);
    swap_rows(out.left, t, pi);
    swap_cols(a, t, pj);
    swap_cols(out.right, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = floor_div(a[i][t], a[t][t]);
        add_row(a, i, t, q);
        add_row(out.left, i, t, q);
        if (a[i][t] != 0) {
          swap_rows(a, t, i);
          swap_rows(out.left, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = floor_div(a[t][j], a[t][t]);
        add_col(a, j, t, q);
        add_col(out.right, j, t, q);
        if (a[t][j] != 0) {
          swap_cols(a, t, j);
          swap_cols(out.right, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the block
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[i][c];
            for (std::size_t c = 0; c < rows; ++c) out.left[t][c] += out.left[i][c];
            clean = false;
            break;
          }
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : out.left[t]) x = -x;
    }
    out.diagonal.push_back(a[t][t]);
    ++t;
  }
  out.rank = out.diagonal.size();
  return out;
}

IntMatrix hermite_normal_form(IntMatrix a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols && p < rows; ++c) {
    // Euclid on column c among rows p..
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = p; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == rows) break;
      std::swap(a[p], a[best]);
      bool done = true;
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        add_row(a, i, p, floor_div(a[i][c], a[p][c]));
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[p][c] == 0) continue;
    if (a[p][c] < 0)
      for (auto& x : a[p]) x = -x;
    for (std::size_t i = 0; i < p; ++i) add_row(a, i, p, floor_div(a[i][c], a[p][c]));
    ++p;
  }
  a.resize(p);
  return a;
}

}  // namespace toricdist
