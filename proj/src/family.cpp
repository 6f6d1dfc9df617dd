#include "apolar/family.hpp"

#include <utility>

#include "apolar/apolarity.hpp"
#include "apolar/binary.hpp"
#include "apolar/bounds.hpp"
#include "apolar/parse.hpp"

namespace apolar {

namespace {

// Deterministic 64-bit stream; the whole sampling pipeline is a pure function
// of (k, strategy, seed), bit-exact across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

long draw_int(SplitMix64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng.next() %
                                static_cast<std::uint64_t>(hi - lo + 1));
}

long draw_nonzero_int(SplitMix64& rng, long lo, long hi) {
  long v = 0;
  do { v = draw_int(rng, lo, hi); } while (v == 0);
  return v;
}

Rational draw_nonzero_scalar(SplitMix64& rng) {
  return Rational(draw_nonzero_int(rng, -9, 9), draw_int(rng, 1, 9));
}

// Coefficients (a, b) of a nonzero a*y + b*z, integers in [-9, 9].
std::pair<long, long> draw_yz_form(SplitMix64& rng) {
  long a = 0, b = 0;
  do {
    a = draw_int(rng, -9, 9);
    b = draw_int(rng, -9, 9);
  } while (a == 0 && b == 0);
  return {a, b};
}

std::pair<long, long> draw_independent_yz_form(SplitMix64& rng,
                                               std::pair<long, long> first) {
  std::pair<long, long> l;
  do { l = draw_yz_form(rng); } while (first.first * l.second - first.second * l.first == 0);
  return l;
}

Form yz_linear(std::pair<long, long> c) {
  return linear_form({Rational(0), Rational(c.first), Rational(c.second)});
}

Form yz_power(std::pair<long, long> c, int d) {
  return linear_power({Rational(0), Rational(c.first), Rational(c.second)}, d);
}

std::uint64_t sample_seed(std::uint64_t seed, long index) {
  SplitMix64 s(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1)));
  return s.next();
}

std::string seq_to_string(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

// Deterministic identities abort on failure; the diagnostic names the
// violated identity.
void record_or_throw(std::vector<FamilyCheck>& checks, std::string name,
                     std::string expected, std::string computed) {
  const bool pass = expected == computed;
  if (!pass)
    throw domain_error("family verification failed: " + name + ": expected " +
                       expected + ", got " + computed);
  checks.push_back({std::move(name), std::move(expected), std::move(computed), pass});
}

}  // namespace

const char* tail_strategy_name(TailStrategy s) {
  switch (s) {
    case TailStrategy::generic: return "generic";
    case TailStrategy::axis_z: return "axis_z";
    case TailStrategy::axis_y: return "axis_y";
    case TailStrategy::matched_scale: return "matched_scale";
    case TailStrategy::zero: return "zero";
    case TailStrategy::single_power: return "single_power";
  }
  return "unknown";
}

FamilyInstance family_form(long k) {
  if (k < 1) throw domain_error("family_form: requires k >= 1");
  FamilyInstance inst;
  inst.k = k;
  inst.d = 2 * k + 2;
  const int ki = static_cast<int>(k);
  Form f(3, static_cast<int>(inst.d));
  f.add_term(Monomial({1, ki - 1, ki + 2}), Rational(1));
  f.add_term(Monomial({0, 2 * ki, 2}), Rational(1));
  inst.F = f;
  inst.G = differentiate(f, 0);
  inst.al_G = k * k + 3 * k;
  inst.tail_cap = 2;
  inst.alpha_floor = 2 * k * k + 6 * k + 3;
  inst.claimed_bound = k * k + 3 * k + 3;
  return inst;
}

TailSample sample_tail(long k, TailStrategy strategy, std::uint64_t seed) {
  if (k < 1) throw domain_error("sample_tail: requires k >= 1");
  const int d = static_cast<int>(2 * k + 2);
  SplitMix64 rng(seed ^ (0xd1342543de82ef95ULL * static_cast<std::uint64_t>(k)) ^
                 (0xaf251af3b0f025b5ULL * (static_cast<std::uint64_t>(strategy) + 1)));

  TailSample ts;
  ts.strategy = strategy;
  ts.H = Form::zero(3, d);

  auto push_summand = [&](const Rational& c, std::pair<long, long> l) {
    ts.coefficients.push_back(c);
    ts.base_forms.push_back(yz_linear(l));
    ts.H = add(ts.H, scale(c, yz_power(l, d)));
  };

  switch (strategy) {
    case TailStrategy::zero:
      break;
    case TailStrategy::single_power:
      push_summand(draw_nonzero_scalar(rng), draw_yz_form(rng));
      break;
    case TailStrategy::axis_z:
      push_summand(draw_nonzero_scalar(rng), {0, 1});
      break;
    case TailStrategy::axis_y:
      push_summand(draw_nonzero_scalar(rng), {1, 0});
      break;
    case TailStrategy::matched_scale: {
      // First scalar pinned to the coefficient of F's binary part y^(2k) z^2.
      const auto l1 = draw_yz_form(rng);
      push_summand(Rational(1), l1);
      push_summand(draw_nonzero_scalar(rng), draw_independent_yz_form(rng, l1));
      break;
    }
    case TailStrategy::generic: {
      const auto l1 = draw_yz_form(rng);
      const Rational c1 = draw_nonzero_scalar(rng);
      const auto l2 = draw_independent_yz_form(rng, l1);
      const Rational c2 = draw_nonzero_scalar(rng);
      push_summand(c1, l1);
      push_summand(c2, l2);
      break;
    }
  }
  return ts;
}

FamilyReport verify_family(long k, long num_samples, std::uint64_t seed) {
  if (k < 0) throw domain_error("verify_family: requires k >= 0");

  FamilyReport report;
  report.k = k;

  if (k == 0) {
    // Degenerate case: a nondegenerate quadric already has rank 3.
    Form q(3, 2);
    q.add_term(Monomial({2, 0, 0}), Rational(1));
    q.add_term(Monomial({0, 2, 0}), Rational(1));
    q.add_term(Monomial({0, 0, 2}), Rational(1));
    record_or_throw(report.checks, "catalecticant_lower_bound(x^2+y^2+z^2) == 3", "3",
                    std::to_string(catalecticant_lower_bound(q)));
    report.resulting_bound = 3;
    report.certified_modulo_sampling = false;
    return report;
  }

  if (num_samples < 1) throw domain_error("verify_family: requires num_samples >= 1");
  const FamilyInstance inst = family_form(k);

  // Deterministic block.
  const Form alpha2 = Form::monomial_term(Rational(1), Monomial({2, 0, 0}), RingTag::dual);
  const Form d2f = apolar_action(alpha2, inst.F);
  record_or_throw(report.checks, "d^2F/dx^2 == 0", "0",
                  d2f.is_zero() ? "0" : print_form(d2f));

  const ApolarProfile prof_g = apolar_profile(inst.G);
  const ReferenceProfile ref = reference_profile(2, static_cast<int>(2 * k + 1), k);
  record_or_throw(report.checks, "hf(A^G) == H(2,2k+1,k)", seq_to_string(ref.values),
                  seq_to_string(prof_g.hf));
  record_or_throw(report.checks, "al(G) == k^2+3k", std::to_string(inst.al_G),
                  std::to_string(prof_g.apolar_length));
  record_or_throw(report.checks, "prop4_count(F, alpha) == k^2+3k",
                  std::to_string(inst.al_G), std::to_string(prop4_count(inst.F, 0)));
  record_or_throw(report.checks, "claimed_bound == max_rank_lower_bound(2k+2)",
                  std::to_string(max_rank_lower_bound(inst.d)),
                  std::to_string(inst.claimed_bound));

  // Sampled block: tails H with at most two powers from the y,z plane.
  static constexpr TailStrategy kOrder[kTailStrategyCount] = {
      TailStrategy::zero,          TailStrategy::single_power,
      TailStrategy::axis_z,        TailStrategy::axis_y,
      TailStrategy::matched_scale, TailStrategy::generic};

  long min_al = -1, min_al_index = -1;
  long hf_failures = 0, first_hf_failure = -1;
  for (long i = 0; i < num_samples; ++i) {
    const TailStrategy strat = kOrder[i % kTailStrategyCount];
    const TailSample ts = sample_tail(k, strat, sample_seed(seed, i));
    const Form f_alpha = sub(inst.F, ts.H);
    const ApolarProfile prof = apolar_profile(f_alpha);

    if (min_al < 0 || prof.apolar_length < min_al) {
      min_al = prof.apolar_length;
      min_al_index = i;
    }
    bool hf_ok = true;
    for (long n = 0; n <= k; ++n) {
      const long want = 2 * n + 1;
      if (prof.hf[static_cast<std::size_t>(n)] != want ||
          prof.hf[static_cast<std::size_t>(inst.d - n)] != want) {
        hf_ok = false;
        break;
      }
    }
    if (!hf_ok) {
      ++hf_failures;
      if (first_hf_failure < 0) first_hf_failure = i;
    }
  }
  report.samples_run = num_samples;
  report.min_observed_al = min_al;

  const bool floor_ok = min_al >= inst.alpha_floor;
  report.checks.push_back(
      {"min sampled al(F-H) >= 2k^2+6k+3", ">= " + std::to_string(inst.alpha_floor),
       std::to_string(min_al) + " (sample " + std::to_string(min_al_index) + ", " +
           tail_strategy_name(kOrder[min_al_index % kTailStrategyCount]) + ")",
       floor_ok});

  const bool hf_all_ok = hf_failures == 0;
  std::string hf_computed = std::to_string(num_samples - hf_failures) + "/" +
                            std::to_string(num_samples) + " samples";
  if (!hf_all_ok) hf_computed += " (first failure at sample " + std::to_string(first_hf_failure) + ")";
  report.checks.push_back({"sampled hf(A^(F-H)) == 2n+1 for n <= k, mirrored",
                           std::to_string(num_samples) + "/" + std::to_string(num_samples) +
                               " samples",
                           hf_computed, hf_all_ok});

  if (floor_ok && hf_all_ok) {
    // al(F-H) > al(G) + k^2+3k+2 for every sampled tail, so no decomposition
    // with <= k^2+3k+2 summands can exist among the sampled configurations.
    report.resulting_bound = inst.claimed_bound;
    report.certified_modulo_sampling = true;
  }
  return report;
}

std::vector<BoundTableRow> bound_table(long d_min, long d_max) {
  if (d_min < 2 || d_min > d_max) throw domain_error("bound_table: requires 2 <= d_min <= d_max");
  std::vector<BoundTableRow> rows;
  for (long d = d_min; d <= d_max; ++d) {
    BoundTableRow row;
    row.d = d;
    row.floor_bound = max_rank_lower_bound(d);
    row.max_monomial = max_monomial_rank(d);
    if (d % 2 == 0) {
      if (d == 2) {
        Form q(3, 2);
        q.add_term(Monomial({2, 0, 0}), Rational(1));
        q.add_term(Monomial({0, 2, 0}), Rational(1));
        q.add_term(Monomial({0, 0, 2}), Rational(1));
        row.witness = print_form(q);
      } else {
        row.witness = print_form(family_form((d - 2) / 2).F);
      }
    }
    row.exceeds_monomials = row.floor_bound > row.max_monomial;
    if (row.floor_bound < row.max_monomial)
      throw std::logic_error("bound_table: floor bound fell below the monomial maximum");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace apolar
