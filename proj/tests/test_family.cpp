#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apolar/apolarity.hpp"
#include "apolar/bounds.hpp"
#include "apolar/family.hpp"
#include "apolar/parse.hpp"

using namespace apolar;

TEST_CASE("family instance at k = 1") {
  const FamilyInstance inst = family_form(1);
  CHECK(inst.d == 4);
  CHECK(equal(inst.F, parse_form("x*z^3 + y^2*z^2", 3)));
  CHECK(equal(inst.G, parse_form("z^3", 3)));
  CHECK(inst.al_G == 4);
  CHECK(inst.tail_cap == 2);
  CHECK(inst.alpha_floor == 11);
  CHECK(inst.claimed_bound == 7);
}

TEST_CASE("family instance at k = 2") {
  const FamilyInstance inst = family_form(2);
  CHECK(inst.d == 6);
  CHECK(equal(inst.F, parse_form("x*y*z^4 + y^4*z^2", 3)));
  CHECK(equal(inst.G, parse_form("y*z^4", 3)));
  CHECK(inst.al_G == 10);
  CHECK(inst.alpha_floor == 23);
  CHECK(inst.claimed_bound == 13);
}

TEST_CASE("family instance preconditions and invariants") {
  CHECK_THROWS_AS(family_form(0), domain_error);
  CHECK_THROWS_AS(family_form(-2), domain_error);
  for (long k = 1; k <= 8; ++k) {
    const FamilyInstance inst = family_form(k);
    CHECK(inst.F.degree() == 2 * k + 2);
    CHECK(inst.G.degree() == 2 * k + 1);
    CHECK(inst.claimed_bound == max_rank_lower_bound(inst.d));
    // d^2F/dx^2 = 0
    CHECK(differentiate(differentiate(inst.F, 0), 0).is_zero());
  }
}

TEST_CASE("tail samples: strategy shapes") {
  const long k = 1;
  const int d = 4;

  const TailSample z = sample_tail(k, TailStrategy::zero, 9);
  CHECK(z.H.is_zero());
  CHECK(z.coefficients.empty());

  const TailSample az = sample_tail(k, TailStrategy::axis_z, 9);
  REQUIRE(az.coefficients.size() == 1);
  CHECK_FALSE(az.coefficients[0].is_zero());
  CHECK(equal(az.H, scale(az.coefficients[0],
                          Form::monomial_term(Rational(1), Monomial({0, 0, d})))));

  const TailSample ay = sample_tail(k, TailStrategy::axis_y, 9);
  CHECK(equal(ay.H, scale(ay.coefficients[0],
                          Form::monomial_term(Rational(1), Monomial({0, d, 0})))));

  const TailSample sp = sample_tail(k, TailStrategy::single_power, 9);
  REQUIRE(sp.base_forms.size() == 1);
  CHECK_FALSE(sp.H.is_zero());

  const TailSample ms = sample_tail(k, TailStrategy::matched_scale, 9);
  REQUIRE(ms.coefficients.size() == 2);
  CHECK(ms.coefficients[0] == Rational(1));

  const TailSample g = sample_tail(k, TailStrategy::generic, 9);
  REQUIRE(g.base_forms.size() == 2);
  for (const Rational& c : g.coefficients) CHECK_FALSE(c.is_zero());
}

TEST_CASE("tail samples: base forms lie in the y,z plane and are independent") {
  for (auto strat : {TailStrategy::generic, TailStrategy::matched_scale}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const TailSample ts = sample_tail(3, strat, seed);
      REQUIRE(ts.base_forms.size() == 2);
      std::vector<std::pair<Rational, Rational>> ab;
      for (const Form& l : ts.base_forms) {
        REQUIRE(l.degree() == 1);
        REQUIRE(l.coeff(Monomial({1, 0, 0})).is_zero());
        ab.emplace_back(l.coeff(Monomial({0, 1, 0})), l.coeff(Monomial({0, 0, 1})));
      }
      REQUIRE_FALSE((ab[0].first * ab[1].second - ab[0].second * ab[1].first).is_zero());
    }
  }
}

TEST_CASE("tail samples: bit-exact reproducibility") {
  const TailSample a = sample_tail(2, TailStrategy::generic, 42);
  const TailSample b = sample_tail(2, TailStrategy::generic, 42);
  REQUIRE(a.coefficients.size() == 2);
  CHECK(equal(a.H, b.H));
  CHECK(a.coefficients[0] == b.coefficients[0]);
  CHECK(a.coefficients[1] == b.coefficients[1]);
  CHECK(a.H.degree() == 6);

  // Different seeds almost surely give a different tail; check one instance.
  const TailSample c = sample_tail(2, TailStrategy::generic, 43);
  CHECK_FALSE(equal(a.H, c.H));
}

TEST_CASE("verify_family: k = 0 reduces to the quadric") {
  const FamilyReport r = verify_family(0, 0, 7);
  CHECK(r.resulting_bound == 3);
  CHECK_FALSE(r.certified_modulo_sampling);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].pass);
}

TEST_CASE("verify_family: deterministic block passes for k = 1..8") {
  for (long k = 1; k <= 8; ++k) {
    const FamilyReport r = verify_family(k, 6, 7);
    for (const FamilyCheck& c : r.checks) {
      INFO(c.name << ": expected " << c.expected << ", got " << c.computed);
      REQUIRE(c.pass);
    }
    REQUIRE(r.resulting_bound == k * k + 3 * k + 3);
    REQUIRE(r.certified_modulo_sampling);
    REQUIRE(r.samples_run == 6);
    REQUIRE(r.min_observed_al >= 2 * k * k + 6 * k + 3);
  }
}

TEST_CASE("verify_family: k = 1 and k = 2 reported values") {
  const FamilyReport r1 = verify_family(1, 60, 7);
  CHECK(r1.resulting_bound == 7);
  CHECK(r1.min_observed_al >= 11);

  const FamilyReport r2 = verify_family(2, 60, 7);
  CHECK(r2.resulting_bound == 13);
  bool found_hf = false;
  for (const FamilyCheck& c : r2.checks) {
    if (c.name == "hf(A^G) == H(2,2k+1,k)") {
      found_hf = true;
      CHECK(c.expected == "1 2 2 2 2 1");
      CHECK(c.computed == "1 2 2 2 2 1");
    }
  }
  CHECK(found_hf);
}

TEST_CASE("verify_family: argument validation") {
  CHECK_THROWS_AS(verify_family(-1, 10, 7), domain_error);
  CHECK_THROWS_AS(verify_family(1, 0, 7), domain_error);
}

TEST_CASE("bound table: 2..6") {
  const auto rows = bound_table(2, 6);
  REQUIRE(rows.size() == 5);
  const std::vector<long> floors = {3, 5, 7, 10, 13};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].d == static_cast<long>(i) + 2);
    CHECK(rows[i].floor_bound == floors[i]);
    CHECK(rows[i].floor_bound >= rows[i].max_monomial);
  }

  // d = 6: monomial maximum 12, family witness present and strict.
  CHECK(rows[4].max_monomial == 12);
  CHECK(rows[4].witness == "x*y*z^4 + y^4*z^2");
  CHECK(rows[4].exceeds_monomials);

  // d = 5: odd degree, no family witness.
  CHECK(rows[3].max_monomial == 9);
  CHECK(rows[3].witness.empty());

  CHECK_THROWS_AS(bound_table(1, 5), domain_error);
  CHECK_THROWS_AS(bound_table(6, 4), domain_error);
}

TEST_CASE("bound table: strict inequality at every even degree") {
  for (const auto& row : bound_table(2, 16)) {
    if (row.d % 2 == 0) {
      CHECK(row.exceeds_monomials);
      CHECK_FALSE(row.witness.empty());
    }
  }
}

TEST_CASE("the binary tail of F is exactly what clears the alpha floor") {
  // al(x y^(k-1) z^(k+2)) = 2k(k+3) sits three short of 2k^2+6k+3; adding
  // y^(2k) z^2 raises the apolar length to exactly the floor.
  const std::vector<long> monomial_al = {8, 20, 36, 56};
  const std::vector<long> family_al = {11, 23, 39, 59};
  for (long k = 1; k <= 4; ++k) {
    const FamilyInstance inst = family_form(k);
    const int ki = static_cast<int>(k);
    const Form head = Form::monomial_term(Rational(1), Monomial({1, ki - 1, ki + 2}));
    CHECK(apolar_length(head) == monomial_al[static_cast<std::size_t>(k - 1)]);
    CHECK(apolar_length(head) == 2 * k * (k + 3));
    CHECK(apolar_length(inst.F) == family_al[static_cast<std::size_t>(k - 1)]);
    CHECK(apolar_length(inst.F) == inst.alpha_floor);
  }
}

TEST_CASE("sampled apolar lengths sit above the threshold for small k") {
  for (long k = 1; k <= 3; ++k) {
    const FamilyReport r = verify_family(k, 60, 20260808);
    REQUIRE(r.min_observed_al >= 2 * k * k + 6 * k + 3);
    REQUIRE(r.resulting_bound == max_rank_lower_bound(2 * k + 2));
  }
}
