#ifndef APOLAR_BOUNDS_HPP
#define APOLAR_BOUNDS_HPP

#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/form.hpp"

namespace apolar {

// The reference sequence H(n,d,s): value at i is min{dim R_i, dim R_(d-i), s}
// for the polynomial ring R in n variables. Symmetric in i <-> d-i.
struct ReferenceProfile {
  int var_count = 0;
  int degree = 0;
  long cap = 0;
  std::vector<long> values;
};

ReferenceProfile reference_profile(int n, int d, long s);

// Largest Hilbert-function value of the apolar algebra; every power sum
// decomposition of f needs at least this many summands.
long catalecticant_lower_bound(const Form& f);

// al(f) - al(df/d(direction)), clamped at 0. Lower-bounds the length of any
// decomposition whose base linear forms all lie outside the kernel of the
// direction derivative; the caller owns that hypothesis. `direction` is a
// variable index (0 = alpha, 1 = beta, 2 = gamma).
long prop3_bound(const Form& f, int direction);

// al(df) - al(d^2 f) for the given direction, clamped at 0. In every power
// sum decomposition of f, at least this many base linear forms are not
// annihilated by the direction derivative.
long prop4_count(const Form& f, int direction);

// floor((d^2 + 2d + 5) / 4): the closed-form per-degree lower bound on the
// maximum rank of ternary forms of degree d. Requires d >= 2.
long max_rank_lower_bound(long d);

struct DirectionBounds {
  int direction = 0;   // variable index
  long prop3 = 0;
  long prop4 = 0;
};

struct BoundReport {
  std::string form_text;
  long catalecticant_bound = 0;
  std::vector<DirectionBounds> directions;  // one entry per variable
  std::vector<std::string> notes;
};

BoundReport bound_report(const Form& f);

// Printable name of a dual direction variable ("alpha"/"beta"/"gamma"; a
// binary ring has directions beta and gamma).
std::string direction_name(int var_count, int direction);

}  // namespace apolar

#endif  // APOLAR_BOUNDS_HPP
