#include "halfmmp/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "halfmmp/error.hpp"

namespace halfmmp {

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
      m.a_[i * m.n_ + j] = rows[i][j];
    }
  }
  return m;
}

SymMatrix SymMatrix::from_int_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return from_rows(r);
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

SymMatrix SymMatrix::negated() const {
  SymMatrix m(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
  return m;
}

SymMatrix SymMatrix::principal(const std::vector<std::size_t>& idx) const {
  SymMatrix m(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m.a_[i * idx.size() + j] = at(idx[i], idx[j]);
  return m;
}

Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      result = -result;
    }
    result *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return result;
}

Rational det(const SymMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m.at(i, j);
  return det(std::move(rows));
}

bool is_negative_definite(const SymMatrix& m) {
  // Sylvester: all leading minors of -m positive. One elimination pass gives
  // the ratios of consecutive minors as pivots when no row swap is needed.
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -m.at(i, j);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c][c].sign() <= 0) return false;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return true;
}

std::vector<Rational> solve(const SymMatrix& m, const std::vector<Rational>& b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "matrix of size " + std::to_string(n) + " is singular");
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

std::vector<Rational> multiply(const SymMatrix& m, const std::vector<Rational>& x) {
  if (x.size() != m.size()) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<Rational> y(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) y[i] += m.at(i, j) * x[j];
  return y;
}

Rational quadratic_form(const SymMatrix& m, const std::vector<Rational>& x) {
  auto y = multiply(m, x);
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Inertia inertia(const SymMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  Inertia res;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && a[p][p].is_zero()) ++p;
    if (p == n) {
      // No nonzero diagonal: fold an off-diagonal entry onto the diagonal.
      std::size_t i = n, j = n;
      for (std::size_t r = k; r < n && i == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (!a[r][c].is_zero()) {
            i = r;
            j = c;
            break;
          }
      if (i == n) break;
      for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
      for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
      p = i;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto& row : a) std::swap(row[p], row[k]);
    }
    const Rational piv = a[k][k];
    (piv.sign() > 0 ? res.positive : res.negative)++;
    // Schur complement of the pivot.
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      Rational f = a[r][k] / piv;
      for (std::size_t c = k + 1; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (std::size_t r = k + 1; r < n; ++r) a[r][k] = a[k][r] = 0;
    ++k;
  }
  res.zero = n - res.positive - res.negative;
  return res;
}

}  // namespace halfmmp
