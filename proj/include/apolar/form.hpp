#ifndef APOLAR_FORM_HPP
#define APOLAR_FORM_HPP

#include <map>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/rational.hpp"

namespace apolar {

// Which of the two paired rings a form lives in. The tag is presentation
// metadata (it picks the variable alphabet when printing: x,y,z vs a,b,c);
// arithmetic and equality ignore it.
enum class RingTag { primal, dual };

// Sparse homogeneous polynomial with exact rational coefficients in 2 or 3
// variables. Every stored monomial has exponent sum equal to degree() and no
// zero coefficient is ever stored. The zero form keeps an explicitly recorded
// nominal degree so graded operations stay total; equality treats all zero
// forms as equal.
class Form {
 public:
  using TermMap = std::map<Monomial, Rational>;

  // The zero constant in three variables; an inert placeholder value.
  Form() : Form(3, 0, RingTag::primal) {}

  // The zero form of the given degree.
  Form(int var_count, int degree, RingTag ring = RingTag::primal);

  static Form zero(int var_count, int degree, RingTag ring = RingTag::primal) {
    return Form(var_count, degree, ring);
  }
  static Form monomial_term(const Rational& coeff, const Monomial& m,
                            RingTag ring = RingTag::primal);

  int var_count() const { return var_count_; }
  int degree() const { return degree_; }
  RingTag ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of `m`, zero when absent.
  Rational coeff(const Monomial& m) const;

  // Accumulates `c` onto the coefficient of `m`, erasing it when the sum
  // cancels. The monomial must match the form's variable count and degree.
  void add_term(const Monomial& m, const Rational& c);

  Form with_ring(RingTag ring) const;

 private:
  int var_count_;
  int degree_;
  RingTag ring_;
  TermMap terms_;
};

// Exact ring operations. add/sub/equal require matching variable counts and,
// for two nonzero operands, matching degrees (zero forms unify with any
// degree); violations raise domain_error.
Form add(const Form& f, const Form& g);
Form sub(const Form& f, const Form& g);
Form scale(const Rational& c, const Form& f);
bool equal(const Form& f, const Form& g);
Form multiply(const Form& f, const Form& g);

// Formal partial derivative; the degree drops by one (the zero form of
// clamped degree when the input is constant or the variable is absent).
Form differentiate(const Form& f, int var_index);

// (c_1 v_1 + ... + c_n v_n)^d expanded with exact multinomial coefficients.
Form linear_power(const std::vector<Rational>& coeffs, int d,
                  RingTag ring = RingTag::primal);

// A degree-1 form with the given coefficients.
Form linear_form(const std::vector<Rational>& coeffs, RingTag ring = RingTag::primal);

}  // namespace apolar

#endif  // APOLAR_FORM_HPP
