#include "apolar/monomial.hpp"

#include <numeric>

#include "apolar/rational.hpp"

namespace apolar {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw domain_error("monomial with negative exponent");
  }
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

int Monomial::compare(const Monomial& other) const {
  if (exps_.size() != other.exps_.size())
    throw domain_error("comparing monomials of different variable counts");
  const int da = degree(), db = other.degree();
  if (da != db) return da < db ? -1 : 1;
  // Same degree: lex with earlier variables dominating, larger exponent first.
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != other.exps_[i]) return exps_[i] > other.exps_[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void enumerate(int vars_left, int degree_left, std::vector<int>& prefix,
               std::vector<Monomial>& out) {
  if (vars_left == 1) {
    prefix.push_back(degree_left);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree_left; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(vars_left - 1, degree_left - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int var_count, int degree) {
  if (var_count < 1) throw domain_error("monomials_of_degree: need at least one variable");
  if (degree < 0) throw domain_error("monomials_of_degree: negative degree");
  std::vector<Monomial> out;
  std::vector<int> prefix;
  enumerate(var_count, degree, prefix, out);
  return out;
}

long graded_dimension(int var_count, int degree) {
  if (var_count < 1) throw domain_error("graded_dimension: need at least one variable");
  if (degree < 0) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(degree + var_count - 1),
               static_cast<unsigned long>(var_count - 1));
  if (!b.fits_slong_p()) throw domain_error("graded_dimension: value out of range");
  return b.get_si();
}

}  // namespace apolar
