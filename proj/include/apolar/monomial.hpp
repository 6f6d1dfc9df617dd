#ifndef APOLAR_MONOMIAL_HPP
#define APOLAR_MONOMIAL_HPP

#include <vector>

namespace apolar {

// Exponent tuple of a monomial in a fixed number of variables (2 or 3 in this
// library: y,z or x,y,z and their dual counterparts).
//
// Canonical order is graded lexicographic with earlier variables dominating
// (x > y > z): lower total degree first, and within one degree the usual
// textbook listing x^n, x^(n-1)y, x^(n-1)z, ..., z^n. All matrix row/column
// indexings and printed forms follow this order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  int var_count() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int exp(int var_index) const { return exps_[static_cast<std::size_t>(var_index)]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;

  // -1 / 0 / +1 when *this precedes / equals / follows `other` canonically.
  int compare(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.compare(b) < 0; }

 private:
  std::vector<int> exps_;
};

// All monomials of the given total degree, in canonical order.
std::vector<Monomial> monomials_of_degree(int var_count, int degree);

// Dimension of the degree-n graded piece of a polynomial ring in var_count
// variables: binomial(n + var_count - 1, var_count - 1).
long graded_dimension(int var_count, int degree);

}  // namespace apolar

#endif  // APOLAR_MONOMIAL_HPP
