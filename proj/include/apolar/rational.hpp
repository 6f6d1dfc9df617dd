#ifndef APOLAR_RATIONAL_HPP
#define APOLAR_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace apolar {

// Violated precondition of a library operation (zero form where a nonzero one
// is required, index out of range, degree mismatch, ...). The CLI maps these
// to exit code 1.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational number: always in lowest terms, denominator > 0, zero is 0/1.
// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes, so
// the invariants hold for the lifetime of the object.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                // NOLINT: implicit by design
  Rational(const mpz_class& n) : v_(n) {}    // NOLINT
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const;

 private:
  explicit Rational(const mpq_class& q) : v_(q) {}

  mpq_class v_;
};

}  // namespace apolar

#endif  // APOLAR_RATIONAL_HPP
