#include "apolar/bounds.hpp"

#include <algorithm>

#include "apolar/parse.hpp"

namespace apolar {

ReferenceProfile reference_profile(int n, int d, long s) {
  if (n < 1) throw domain_error("reference_profile: need at least one variable");
  if (d < 0) throw domain_error("reference_profile: negative degree");
  if (s < 0) throw domain_error("reference_profile: negative cap");
  ReferenceProfile p{n, d, s, {}};
  p.values.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    mpz_class lo, hi;
    mpz_bin_uiui(lo.get_mpz_t(), static_cast<unsigned long>(i + n - 1),
                 static_cast<unsigned long>(n - 1));
    mpz_bin_uiui(hi.get_mpz_t(), static_cast<unsigned long>(d - i + n - 1),
                 static_cast<unsigned long>(n - 1));
    mpz_class v = std::min(std::min(lo, hi), mpz_class(s));
    p.values.push_back(v.get_si());
  }
  return p;
}

long catalecticant_lower_bound(const Form& f) {
  if (f.is_zero())
    throw domain_error("catalecticant_lower_bound: undefined for the zero form");
  const ApolarProfile p = apolar_profile(f);
  return *std::max_element(p.hf.begin(), p.hf.end());
}

namespace {

// Raw difference clamped at 0. A negative value cannot occur (differentiation
// can only shrink the apolar algebra); if it ever did, the caller gets 0 and
// a note via `flagged`.
long clamped_difference(long hi, long lo, bool* flagged) {
  if (hi < lo) {
    if (flagged != nullptr) *flagged = true;
    return 0;
  }
  return hi - lo;
}

}  // namespace

long prop3_bound(const Form& f, int direction) {
  if (f.is_zero()) throw domain_error("prop3_bound: undefined for the zero form");
  if (direction < 0 || direction >= f.var_count())
    throw domain_error("prop3_bound: invalid direction");
  return clamped_difference(apolar_length(f),
                            apolar_length(differentiate(f, direction)), nullptr);
}

long prop4_count(const Form& f, int direction) {
  if (f.is_zero()) throw domain_error("prop4_count: undefined for the zero form");
  if (direction < 0 || direction >= f.var_count())
    throw domain_error("prop4_count: invalid direction");
  const Form df = differentiate(f, direction);
  return clamped_difference(apolar_length(df),
                            apolar_length(differentiate(df, direction)), nullptr);
}

long max_rank_lower_bound(long d) {
  if (d < 2) throw domain_error("max_rank_lower_bound: requires degree >= 2");
  return (d * d + 2 * d + 5) / 4;
}

std::string direction_name(int var_count, int direction) {
  static const char* ternary[] = {"alpha", "beta", "gamma"};
  if (direction < 0 || direction >= var_count)
    throw domain_error("direction_name: invalid direction");
  return var_count == 2 ? ternary[direction + 1] : ternary[direction];
}

BoundReport bound_report(const Form& f) {
  if (f.is_zero()) throw domain_error("bound_report: undefined for the zero form");
  BoundReport r;
  r.form_text = print_form(f);
  r.catalecticant_bound = catalecticant_lower_bound(f);

  const long al_f = apolar_length(f);
  for (int dir = 0; dir < f.var_count(); ++dir) {
    const Form df = differentiate(f, dir);
    const long al_df = apolar_length(df);
    const long al_ddf = apolar_length(differentiate(df, dir));
    DirectionBounds db;
    db.direction = dir;
    bool flagged = false;
    db.prop3 = clamped_difference(al_f, al_df, &flagged);
    db.prop4 = clamped_difference(al_df, al_ddf, &flagged);
    if (flagged)
      r.notes.push_back("negative raw difference clamped to 0 for direction " +
                        direction_name(f.var_count(), dir));
    r.directions.push_back(db);
  }
  r.notes.push_back("prop3 assumes all base linear forms survive the direction derivative");
  return r;
}

}  // namespace apolar
