#ifndef APOLAR_MATRIX_HPP
#define APOLAR_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

// Dense matrix of exact rationals, row-major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix transposed() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Rank over the rationals. Each row is first scaled to integers, then
// fraction-free (Bareiss) elimination runs with exact divisions; pivot is the
// first nonzero entry in column order. No rounding anywhere.
int matrix_rank(const QMatrix& m);

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form over the rationals (exact Gauss-Jordan, leading
// entries normalized to 1, first-nonzero pivot in column order).
RrefResult rref(const QMatrix& m);

// Basis of {v : M v = 0}, one vector per free column, ordered by free column
// index. Deterministic: derived from rref.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

}  // namespace apolar

#endif  // APOLAR_MATRIX_HPP
