#include "apolar/form.hpp"

#include <algorithm>

namespace apolar {

Form::Form(int var_count, int degree, RingTag ring)
    : var_count_(var_count), degree_(degree), ring_(ring) {
  if (var_count != 2 && var_count != 3)
    throw domain_error("forms have 2 or 3 variables");
  if (degree < 0) throw domain_error("form with negative degree");
}

Form Form::monomial_term(const Rational& coeff, const Monomial& m, RingTag ring) {
  Form f(m.var_count(), m.degree(), ring);
  f.add_term(m, coeff);
  return f;
}

Rational Form::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Monomial& m, const Rational& c) {
  if (m.var_count() != var_count_)
    throw domain_error("term variable count does not match the form");
  if (m.degree() != degree_)
    throw domain_error("term degree does not match the form");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::with_ring(RingTag ring) const {
  Form f = *this;
  f.ring_ = ring;
  return f;
}

namespace {

void require_matching(const Form& f, const Form& g, const char* op) {
  if (f.var_count() != g.var_count())
    throw domain_error(std::string(op) + ": variable count mismatch");
  if (!f.is_zero() && !g.is_zero() && f.degree() != g.degree())
    throw domain_error(std::string(op) + ": degree mismatch");
}

}  // namespace

Form add(const Form& f, const Form& g) {
  require_matching(f, g, "add");
  if (f.is_zero()) return g;
  Form out(f.var_count(), f.degree(), f.ring());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c);
  for (const auto& [m, c] : g.terms()) out.add_term(m, c);
  return out;
}

Form sub(const Form& f, const Form& g) { return add(f, scale(Rational(-1), g)); }

Form scale(const Rational& c, const Form& f) {
  Form out(f.var_count(), f.degree(), f.ring());
  if (c.is_zero()) return out;
  for (const auto& [m, a] : f.terms()) out.add_term(m, c * a);
  return out;
}

bool equal(const Form& f, const Form& g) {
  require_matching(f, g, "equal");
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return f.terms() == g.terms();
}

Form multiply(const Form& f, const Form& g) {
  if (f.var_count() != g.var_count())
    throw domain_error("multiply: variable count mismatch");
  Form out(f.var_count(), f.degree() + g.degree(), f.ring());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      std::vector<int> e(static_cast<std::size_t>(f.var_count()));
      for (int i = 0; i < f.var_count(); ++i) e[static_cast<std::size_t>(i)] = mf.exp(i) + mg.exp(i);
      out.add_term(Monomial(e), cf * cg);
    }
  }
  return out;
}

Form differentiate(const Form& f, int var_index) {
  if (var_index < 0 || var_index >= f.var_count())
    throw domain_error("differentiate: invalid variable index");
  Form out(f.var_count(), std::max(0, f.degree() - 1), f.ring());
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exp(var_index);
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[static_cast<std::size_t>(var_index)] = e - 1;
    out.add_term(Monomial(exps), c * Rational(e));
  }
  return out;
}

Form linear_power(const std::vector<Rational>& coeffs, int d, RingTag ring) {
  const int v = static_cast<int>(coeffs.size());
  if (v != 2 && v != 3) throw domain_error("linear_power: need 2 or 3 coefficients");
  if (d < 0) throw domain_error("linear_power: negative exponent");
  Form out(v, d, ring);
  mpz_class dfact;
  mpz_fac_ui(dfact.get_mpz_t(), static_cast<unsigned long>(d));
  for (const Monomial& m : monomials_of_degree(v, d)) {
    // multinomial d! / (e_0! e_1! [e_2!]) * prod coeffs^e
    mpz_class denom(1), fact;
    Rational coeff(1);
    bool zero = false;
    for (int i = 0; i < v && !zero; ++i) {
      const int e = m.exp(i);
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(e));
      denom *= fact;
      for (int p = 0; p < e; ++p) {
        coeff *= coeffs[static_cast<std::size_t>(i)];
        if (coeff.is_zero()) { zero = true; break; }
      }
    }
    if (zero) continue;
    out.add_term(m, coeff * Rational(dfact, denom));
  }
  return out;
}

Form linear_form(const std::vector<Rational>& coeffs, RingTag ring) {
  const int v = static_cast<int>(coeffs.size());
  if (v != 2 && v != 3) throw domain_error("linear_form: need 2 or 3 coefficients");
  Form out(v, 1, ring);
  for (int i = 0; i < v; ++i) {
    std::vector<int> e(static_cast<std::size_t>(v), 0);
    e[static_cast<std::size_t>(i)] = 1;
    out.add_term(Monomial(e), coeffs[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace apolar
