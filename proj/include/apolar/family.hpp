#ifndef APOLAR_FAMILY_HPP
#define APOLAR_FAMILY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "apolar/form.hpp"

namespace apolar {

// The degree-(2k+2) family F = x y^(k-1) z^(k+2) + y^(2k) z^2 together with
// every threshold its rank argument tracks.
struct FamilyInstance {
  long k = 0;
  long d = 0;             // 2k+2
  Form F;
  Form G;                 // dF/dx = y^(k-1) z^(k+2)
  long al_G = 0;          // k^2 + 3k
  int tail_cap = 2;       // max summands of an admissible tail
  long alpha_floor = 0;   // 2k^2 + 6k + 3
  long claimed_bound = 0; // k^2 + 3k + 3
};

// Requires k >= 1 (k = 0 is handled by verify_family, which reduces to a
// nondegenerate quadric).
FamilyInstance family_form(long k);

enum class TailStrategy { generic, axis_z, axis_y, matched_scale, zero, single_power };

constexpr int kTailStrategyCount = 6;
const char* tail_strategy_name(TailStrategy s);

// A tail H = c_1 l_1^d + c_2 l_2^d with at most two summands whose base
// linear forms lie in the span of y and z.
struct TailSample {
  TailStrategy strategy = TailStrategy::zero;
  std::vector<Rational> coefficients;
  std::vector<Form> base_forms;   // ternary linear forms with zero x coefficient
  Form H;
};

// Deterministic function of (k, strategy, seed): identical arguments yield a
// bit-identical sample. Generic draws integer coefficients in [-9,9] for two
// independent linear forms and two nonzero rational scalars; axis strategies
// force l = z or l = y; matched_scale pins the first scalar to the
// coefficient of the binary part of F; zero/single_power produce 0 or 1
// summands.
TailSample sample_tail(long k, TailStrategy strategy, std::uint64_t seed);

struct FamilyCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct FamilyReport {
  long k = 0;
  std::vector<FamilyCheck> checks;
  long samples_run = 0;
  long min_observed_al = 0;
  // True when the reported bound rests on the sampled universal quantifier
  // over tails; false for the fully deterministic k = 0 case.
  bool certified_modulo_sampling = false;
  long resulting_bound = 0;   // 0 when not established
};

// Mechanically verifies every computable step of the family's rank argument:
//   deterministic: d^2F/dx^2 = 0; hf(A^G) = H(2,2k+1,k); al(G) = k^2+3k;
//     prop4_count(F, alpha) = k^2+3k; claimed bound = max_rank_lower_bound.
//   sampled: for num_samples tails H (all strategies cycled), al(F-H) >=
//     2k^2+6k+3 and hf(A^(F-H)) takes value 2n+1 at n and 2k+2-n for n <= k.
// A deterministic failure aborts with a diagnostic naming the failed
// identity; sampled failures leave resulting_bound at 0. k = 0 returns bound
// 3 via the nondegenerate quadric x^2+y^2+z^2.
FamilyReport verify_family(long k, long num_samples, std::uint64_t seed);

struct BoundTableRow {
  long d = 0;
  long floor_bound = 0;
  long max_monomial = 0;
  std::string witness;       // family witness for even d, empty for odd
  bool exceeds_monomials = false;
};

// One row per degree in [d_min, d_max]; requires 2 <= d_min <= d_max.
std::vector<BoundTableRow> bound_table(long d_min, long d_max);

}  // namespace apolar

#endif  // APOLAR_FAMILY_HPP
