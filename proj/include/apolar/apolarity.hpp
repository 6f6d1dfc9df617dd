#ifndef APOLAR_APOLARITY_HPP
#define APOLAR_APOLARITY_HPP

#include <vector>

#include "apolar/form.hpp"
#include "apolar/matrix.hpp"

namespace apolar {

// Hilbert function of the apolar algebra of a form, together with its total
// dimension (the apolar length). For a nonzero form of degree d the sequence
// is indexed 0..d, starts and ends at 1, and is symmetric: hf[n] = hf[d-n].
struct ApolarProfile {
  int degree = 0;
  std::vector<long> hf;
  long apolar_length = 0;
};

// Apolar action of a dual-ring element on a form: each dual variable acts as
// the partial derivative in the paired primal variable, term by term with
// exact falling-factorial coefficients (plain differentiation, no normalizing
// factorial). Bilinear in both arguments. When deg(theta) > deg(f) the result
// is the zero form with nominal degree clamped to 0.
Form apolar_action(const Form& theta, const Form& f);

// Matrix of the map T_n -> S_(d-n), Theta |-> d_Theta f. Rows are indexed by
// the degree-n dual monomials, columns by the degree-(d-n) primal monomials,
// both in canonical order; entry = coefficient of the column monomial in the
// derivative of f by the row monomial. Requires 0 <= n <= deg(f).
QMatrix catalecticant(const Form& f, int n);

// hf[n] = rank of the n-th catalecticant for every n in 0..d. Undefined for
// the zero form (domain_error).
ApolarProfile apolar_profile(const Form& f);

// Sum of the Hilbert function values; 0 for the zero form by convention.
long apolar_length(const Form& f);

// Row-reduced basis of the n-th derivative space {d_Theta f : Theta in T_n};
// its size equals hf[n].
std::vector<Form> derivative_space_basis(const Form& f, int n);

// Basis of the degree-n component of the apolar ideal {Theta : d_Theta f = 0}
// (all of T_n when n > deg f); size = dim T_n - hf[n].
std::vector<Form> apolar_ideal_component(const Form& f, int n);

}  // namespace apolar

#endif  // APOLAR_APOLARITY_HPP
