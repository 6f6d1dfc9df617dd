#include "apolar/binary.hpp"

#include <algorithm>
#include <stdexcept>

#include "apolar/apolarity.hpp"

namespace apolar {

namespace {

// Univariate polynomials over Q, coefficients ascending by power. Only what
// the squarefree test needs: degree, derivative, Euclidean remainder.
using UPoly = std::vector<Rational>;

int up_degree(const UPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

UPoly up_derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * Rational(static_cast<long>(i)));
  return d;
}

UPoly up_mod(UPoly a, const UPoly& b) {
  const int db = up_degree(b);
  int da = up_degree(a);
  const Rational lead_b = b[static_cast<std::size_t>(db)];
  while (da >= db) {
    const Rational q = a[static_cast<std::size_t>(da)] / lead_b;
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(da - db + i)] -= q * b[static_cast<std::size_t>(i)];
    da = up_degree(a);
  }
  return a;
}

int up_gcd_degree(UPoly a, UPoly b) {
  if (up_degree(a) < up_degree(b)) std::swap(a, b);
  while (up_degree(b) >= 0) {
    UPoly r = up_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return up_degree(a);
}

void require_binary_nonzero(const Form& f, const char* op) {
  if (f.var_count() != 2)
    throw domain_error(std::string(op) + ": needs a binary form");
  if (f.is_zero())
    throw domain_error(std::string(op) + ": undefined for the zero form");
}

}  // namespace

int z_divisibility(const Form& f) {
  require_binary_nonzero(f, "z_divisibility");
  int m = f.degree();
  for (const auto& [mono, c] : f.terms()) m = std::min(m, mono.exp(1));
  return m;
}

bool squarefree(const Form& f) {
  require_binary_nonzero(f, "squarefree");
  const int m = z_divisibility(f);
  if (m >= 2) return false;

  // Cofactor after stripping z^m; its minimum z-exponent is 0, so its
  // dehomogenization at z = 1 keeps full degree.
  const int dg = f.degree() - m;
  if (dg <= 1) return true;
  UPoly u(static_cast<std::size_t>(dg) + 1, Rational(0));
  for (const auto& [mono, c] : f.terms())
    u[static_cast<std::size_t>(mono.exp(0))] = c;
  return up_gcd_degree(u, up_derivative(u)) == 0;
}

BinaryRankCertificate binary_rank(const Form& f) {
  require_binary_nonzero(f, "binary_rank");
  const int d = f.degree();
  if (d < 1) throw domain_error("binary_rank: needs degree >= 1");

  int e = 0;
  std::vector<Form> component;
  for (int n = 1; n <= d + 1; ++n) {
    component = apolar_ideal_component(f, n);
    if (!component.empty()) { e = n; break; }
  }
  if (component.empty())
    throw std::logic_error("binary_rank: apolar ideal has no generator up to degree d+1");

  BinaryRankCertificate cert;
  cert.min_generator_degree = e;

  if (component.size() == 1) {
    const Form& g = component[0];
    cert.squarefree_witness_found = squarefree(g);
    cert.witness_generator = g;
    cert.rank = cert.squarefree_witness_found ? e : d + 2 - e;
    return cert;
  }
  if (component.size() == 2) {
    // Equal-degree pencil at 2e = d+2. The non-squarefree locus is cut out by
    // a discriminant of degree <= 2(e-1) in the pencil coordinates, so 2e
    // distinct members decide squarefreeness exactly.
    const Form& g1 = component[0];
    const Form& g2 = component[1];
    std::vector<std::pair<long, long>> members = {{1, 0}, {0, 1}};
    for (long j = 1; members.size() < static_cast<std::size_t>(2 * e); ++j)
      members.emplace_back(1, j);
    for (const auto& [lam, mu] : members) {
      const Form cand = add(scale(Rational(lam), g1), scale(Rational(mu), g2));
      if (squarefree(cand)) {
        cert.squarefree_witness_found = true;
        cert.witness_generator = cand;
        cert.rank = e;
        return cert;
      }
    }
    cert.squarefree_witness_found = false;
    cert.witness_generator = g1;
    cert.rank = d + 2 - e;   // equals e at the boundary
    return cert;
  }
  throw std::logic_error("binary_rank: unexpected apolar component dimension");
}

PrePropVerdict prop_pre_check(int r, int d, const std::vector<Rational>& coeffs,
                              const std::vector<Form>& base_forms) {
  if (static_cast<int>(coeffs.size()) != r || static_cast<int>(base_forms.size()) != r)
    throw domain_error("prop_pre_check: need exactly r coefficients and r base forms");
  if (r < 0 || d < 0 || r > d)
    throw domain_error("prop_pre_check: requires 0 <= r <= d");

  Form sum(2, d);
  PrePropVerdict v;
  for (int i = 0; i < r; ++i) {
    const Form& l = base_forms[static_cast<std::size_t>(i)];
    if (l.var_count() != 2 || l.degree() != 1)
      throw domain_error("prop_pre_check: base forms must be binary and linear");
    const Rational& c = coeffs[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    ++v.nonzero_summands;
    std::vector<Rational> lc = {l.coeff(Monomial({1, 0})), l.coeff(Monomial({0, 1}))};
    sum = add(sum, scale(c, linear_power(lc, d)));
  }

  if (sum.is_zero()) {
    v.divisible = true;
    v.proportional_to_power = true;
  } else {
    v.divisible = z_divisibility(sum) >= r;
    v.proportional_to_power =
        sum.terms().size() == 1 && sum.terms().begin()->first == Monomial({0, d});
  }
  return v;
}

long monomial_rank(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) throw domain_error("monomial_rank: negative exponent");
  if (a + b + c == 0) throw domain_error("monomial_rank: all exponents zero");
  std::array<long, 3> s = {a, b, c};
  std::sort(s.begin(), s.end());
  if (s[0] >= 1) return (s[1] + 1) * (s[2] + 1);
  if (s[1] >= 1) return s[2] + 1;
  return 1;
}

std::array<long, 3> max_monomial_rank_witness(long d) {
  if (d < 1) throw domain_error("max_monomial_rank: requires degree >= 1");
  long best = 0;
  std::array<long, 3> witness = {0, 0, d};
  for (long a = 0; 3 * a <= d; ++a) {
    for (long b = a; a + 2 * b <= d; ++b) {
      const long c = d - a - b;
      const long r = monomial_rank(a, b, c);
      if (r > best) {
        best = r;
        witness = {a, b, c};
      }
    }
  }
  return witness;
}

long max_monomial_rank(long d) {
  const auto w = max_monomial_rank_witness(d);
  return monomial_rank(w[0], w[1], w[2]);
}

}  // namespace apolar
