#ifndef APOLAR_PARSE_HPP
#define APOLAR_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "apolar/form.hpp"

namespace apolar {

// Syntax or validation failure while reading a polynomial expression; carries
// the byte offset of the offending token. The CLI maps these to exit code 2.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses a homogeneous polynomial. Grammar:
//
//   form     := term (('+'|'-') term)*
//   term     := [rational '*'] factor ('*' factor)*
//   factor   := var ['^' nonneg-int]
//   rational := int ['/' posint]
//
// Whitespace is insignificant; juxtaposition without '*' is rejected.
// expected_vars is 2 (variables y,z) or 3 (variables x,y,z); the dual
// spellings a,b,c and the UTF-8 letters for alpha, beta, gamma are accepted
// aliases, but the two alphabets cannot be mixed in one expression. The
// result always carries RingTag::primal; the consuming command retags.
// Homogeneity is validated and the degree inferred (a fully cancelling input
// yields the zero form of the common term degree).
Form parse_form(const std::string& text, int expected_vars);

// Canonical rendering: graded-lex term order, explicit '*', '^' only for
// exponents >= 2, coefficients 1 omitted. The output re-parses to an
// identical form; the zero form of degree d prints as "0*z^d" so the nominal
// degree survives a round trip.
std::string print_form(const Form& f);

}  // namespace apolar

#endif  // APOLAR_PARSE_HPP
