#ifndef APOLAR_BINARY_HPP
#define APOLAR_BINARY_HPP

#include <array>
#include <vector>

#include "apolar/form.hpp"

namespace apolar {

// Result of the Sylvester rank procedure for a binary form of degree d.
// Always rank = min_generator_degree or rank = d + 2 - min_generator_degree;
// pure d-th powers have rank 1.
struct BinaryRankCertificate {
  long rank = 0;
  int min_generator_degree = 0;
  Form witness_generator;   // dual ring, degree = min_generator_degree
  bool squarefree_witness_found = false;
};

// Exact Waring rank of a nonzero binary form of degree >= 1, via the least
// degree e at which the apolar ideal is nonzero:
//   - one generator g at degree e: rank = e if g is squarefree, else d+2-e;
//   - two generators (only at the boundary 2e = d+2): a squarefree pencil
//     member is searched among 2(e-1)+2 distinct members, which decides the
//     question exactly (a not-identically-zero discriminant of degree at most
//     2(e-1) cannot vanish at all of them).
BinaryRankCertificate binary_rank(const Form& f);

// True iff the nonzero binary form has no repeated linear factor. Computed
// exactly: strip the z^m factor (m >= 2 fails immediately), dehomogenize at
// z = 1 and take the Euclidean gcd with the derivative on that chart.
bool squarefree(const Form& f);

// Largest r with f in z^r * R_(d-r), i.e. the minimum z-exponent over the
// support. Errors on the zero form.
int z_divisibility(const Form& f);

struct PrePropVerdict {
  bool divisible = false;              // z_divisibility(F) >= r
  bool proportional_to_power = false;  // F is a scalar multiple of z^d
  int nonzero_summands = 0;
};

// Builds F = sum c_i * l_i^d from r coefficients and r binary linear forms
// (zero coefficients allowed) and reports the divisibility facts the property
// suites assert: divisible <=> proportional, and, under pairwise independent
// base forms, proportional => at most one nonzero summand.
PrePropVerdict prop_pre_check(int r, int d, const std::vector<Rational>& coeffs,
                              const std::vector<Form>& base_forms);

// Rank of the monomial x^a y^b z^c with exponents sorted ascending as
// (a',b',c'): (b'+1)(c'+1) when a' >= 1; max+1 for binary monomials; 1 for
// pure powers. Errors when all exponents are zero.
long monomial_rank(long a, long b, long c);

// Maximum of monomial_rank over all exponent triples summing to d, by
// exhaustive enumeration. Requires d >= 1.
long max_monomial_rank(long d);

// A maximizing exponent triple for max_monomial_rank, sorted ascending.
std::array<long, 3> max_monomial_rank_witness(long d);

}  // namespace apolar

#endif  // APOLAR_BINARY_HPP
