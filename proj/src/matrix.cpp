#include "apolar/matrix.hpp"

#include <gmpxx.h>

namespace apolar {

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

int matrix_rank(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Scale each row to integers (rank-preserving), then run fraction-free
  // elimination. Every division below is exact by Sylvester's identity.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& q = m.at(i, j);
      a[i][j] = q.numerator() * (l / q.denominator());
    }
  }

  std::size_t rank = 0;
  mpz_class prev(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) std::swap(a[pivot], a[rank]);
    const mpz_class& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = p * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

RrefResult rref(const QMatrix& m) {
  RrefResult r{m, {}};
  QMatrix& a = r.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(lead, j));
    const Rational p = a.at(lead, col);
    for (std::size_t j = 0; j < cols; ++j) a.at(lead, j) /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || a.at(i, col).is_zero()) continue;
      const Rational f = a.at(i, col);
      for (std::size_t j = 0; j < cols; ++j)
        a.at(i, j) -= f * a.at(lead, j);
    }
    r.pivot_cols.push_back(col);
    ++lead;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  const std::size_t cols = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
      v[r.pivot_cols[p]] = -r.reduced.at(p, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace apolar
