#include "apolar/apolarity.hpp"

#include <algorithm>

namespace apolar {

namespace {

// Falling factorial e * (e-1) * ... * (e-k+1).
mpz_class falling(int e, int k) {
  mpz_class r(1);
  for (int i = 0; i < k; ++i) r *= e - i;
  return r;
}

// Coefficient picked up when the dual monomial t differentiates the primal
// monomial m; requires t.divides(m).
Rational derivative_factor(const Monomial& t, const Monomial& m) {
  mpz_class f(1);
  for (int i = 0; i < t.var_count(); ++i) f *= falling(m.exp(i), t.exp(i));
  return Rational(f);
}

}  // namespace

Form apolar_action(const Form& theta, const Form& f) {
  if (theta.var_count() != f.var_count())
    throw domain_error("apolar_action: variable count mismatch");
  Form out(f.var_count(), std::max(0, f.degree() - theta.degree()), RingTag::primal);
  for (const auto& [t, ct] : theta.terms()) {
    for (const auto& [m, cm] : f.terms()) {
      if (!t.divides(m)) continue;
      std::vector<int> e(static_cast<std::size_t>(f.var_count()));
      for (int i = 0; i < f.var_count(); ++i) e[static_cast<std::size_t>(i)] = m.exp(i) - t.exp(i);
      out.add_term(Monomial(e), ct * cm * derivative_factor(t, m));
    }
  }
  return out;
}

QMatrix catalecticant(const Form& f, int n) {
  const int d = f.degree();
  if (n < 0 || n > d) throw domain_error("catalecticant: order out of range");
  const std::vector<Monomial> rows = monomials_of_degree(f.var_count(), n);
  const std::vector<Monomial> cols = monomials_of_degree(f.var_count(), d - n);

  std::map<Monomial, std::size_t> col_index;
  for (std::size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], j);

  QMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Monomial& t = rows[i];
    for (const auto& [mono, c] : f.terms()) {
      if (!t.divides(mono)) continue;
      std::vector<int> e(static_cast<std::size_t>(f.var_count()));
      for (int v = 0; v < f.var_count(); ++v) e[static_cast<std::size_t>(v)] = mono.exp(v) - t.exp(v);
      m.at(i, col_index.at(Monomial(e))) += c * derivative_factor(t, mono);
    }
  }
  return m;
}

ApolarProfile apolar_profile(const Form& f) {
  if (f.is_zero())
    throw domain_error("apolar_profile: undefined for the zero form");
  ApolarProfile p;
  p.degree = f.degree();
  p.hf.reserve(static_cast<std::size_t>(p.degree) + 1);
  for (int n = 0; n <= p.degree; ++n) {
    const long r = matrix_rank(catalecticant(f, n));
    p.hf.push_back(r);
    p.apolar_length += r;
  }
  return p;
}

long apolar_length(const Form& f) {
  if (f.is_zero()) return 0;   // al(0) = 0 by convention
  return apolar_profile(f).apolar_length;
}

std::vector<Form> derivative_space_basis(const Form& f, int n) {
  const int d = f.degree();
  if (n < 0 || n > d) throw domain_error("derivative_space_basis: order out of range");
  const std::vector<Monomial> cols = monomials_of_degree(f.var_count(), d - n);
  RrefResult r = rref(catalecticant(f, n));
  std::vector<Form> basis;
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    Form b(f.var_count(), d - n, RingTag::primal);
    for (std::size_t j = 0; j < cols.size(); ++j) b.add_term(cols[j], r.reduced.at(i, j));
    basis.push_back(std::move(b));
  }
  return basis;
}

std::vector<Form> apolar_ideal_component(const Form& f, int n) {
  if (n < 0) throw domain_error("apolar_ideal_component: negative degree");
  const std::vector<Monomial> duals = monomials_of_degree(f.var_count(), n);
  std::vector<Form> out;
  if (n > f.degree()) {
    for (const Monomial& m : duals)
      out.push_back(Form::monomial_term(Rational(1), m, RingTag::dual));
    return out;
  }
  // Left kernel of the catalecticant: coefficient vectors over T_n whose
  // derivative of f vanishes.
  for (const auto& v : kernel_basis(catalecticant(f, n).transposed())) {
    Form theta(f.var_count(), n, RingTag::dual);
    for (std::size_t i = 0; i < duals.size(); ++i) theta.add_term(duals[i], v[i]);
    out.push_back(std::move(theta));
  }
  return out;
}

}  // namespace apolar
