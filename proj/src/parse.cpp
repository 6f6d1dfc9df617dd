#include "apolar/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace apolar {

parse_error::parse_error(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

struct Token {
  enum Kind { Plus, Minus, Star, Caret, Slash, Integer, Variable, End } kind;
  std::string text;
  std::size_t pos = 0;
  int var_index = 0;
  bool dual_spelling = false;
};

// Resolves a variable letter for the given arity. Primal spellings are x,y,z
// (y,z when binary); dual spellings are a,b,c or the UTF-8 Greek letters.
bool resolve_var(const std::string& name, int expected_vars, int* index, bool* dual) {
  static const std::string primal3 = "xyz", dual3 = "abc";
  static const char* greek3[] = {"\xce\xb1", "\xce\xb2", "\xce\xb3"};
  const int offset = expected_vars == 2 ? 1 : 0;
  for (int i = offset; i < 3; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i);
    if (name.size() == 1 && name[0] == primal3[idx]) {
      *index = i - offset;
      *dual = false;
      return true;
    }
    if ((name.size() == 1 && name[0] == dual3[idx]) || name == greek3[idx]) {
      *index = i - offset;
      *dual = true;
      return true;
    }
  }
  return false;
}

std::vector<Token> tokenize(const std::string& text, int expected_vars) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    Token t;
    t.pos = i;
    if (c == '+') { t.kind = Token::Plus; ++i; }
    else if (c == '-') { t.kind = Token::Minus; ++i; }
    else if (c == '*') { t.kind = Token::Star; ++i; }
    else if (c == '^') { t.kind = Token::Caret; ++i; }
    else if (c == '/') { t.kind = Token::Slash; ++i; }
    else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Integer;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        t.text += text[i++];
    } else {
      std::string name(1, c);
      std::size_t advance = 1;
      if (static_cast<unsigned char>(c) == 0xce && i + 1 < text.size()) {
        name += text[i + 1];
        advance = 2;
      }
      t.kind = Token::Variable;
      if (!resolve_var(name, expected_vars, &t.var_index, &t.dual_spelling)) {
        int dummy_index = 0;
        bool dummy_dual = false;
        if (expected_vars == 2 && resolve_var(name, 3, &dummy_index, &dummy_dual))
          throw parse_error("variable '" + name + "' is not available in a binary form", i);
        throw parse_error("unknown variable '" + name + "'", i);
      }
      i += advance;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.pos = text.size();
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, int expected_vars)
      : tokens_(std::move(tokens)), vars_(expected_vars) {}

  Form run() {
    if (peek().kind == Token::End) throw parse_error("empty input", 0);
    std::vector<std::pair<Rational, Monomial>> terms;
    int degree = -1;

    bool negate = false;
    for (;;) {
      const std::size_t term_pos = peek().pos;
      auto [coeff, mono] = parse_term();
      if (degree < 0) {
        degree = mono.degree();
      } else if (mono.degree() != degree) {
        throw parse_error("inhomogeneous input: term of degree " +
                              std::to_string(mono.degree()) + " in a form of degree " +
                              std::to_string(degree),
                          term_pos);
      }
      terms.emplace_back(negate ? -coeff : coeff, mono);

      const Token& t = peek();
      if (t.kind == Token::End) break;
      if (t.kind == Token::Plus) { negate = false; ++pos_; continue; }
      if (t.kind == Token::Minus) { negate = true; ++pos_; continue; }
      throw parse_error("expected '+', '-' or end of input", t.pos);
    }

    Form f(vars_, degree);
    for (const auto& [c, m] : terms) f.add_term(m, c);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  Rational parse_rational() {
    bool neg = false;
    if (peek().kind == Token::Minus) { neg = true; ++pos_; }
    if (peek().kind != Token::Integer)
      throw parse_error("expected a number", peek().pos);
    const mpz_class num(advance().text);
    mpz_class den(1);
    if (peek().kind == Token::Slash) {
      ++pos_;
      if (peek().kind != Token::Integer)
        throw parse_error("expected a positive integer denominator", peek().pos);
      const Token& d = advance();
      den = mpz_class(d.text);
      if (den == 0) throw parse_error("denominator must be positive", d.pos);
    }
    return Rational(neg ? mpz_class(-num) : num, den);
  }

  // factor := var ['^' nonneg-int]
  std::pair<int, int> parse_factor() {
    const Token& v = peek();
    if (v.kind != Token::Variable)
      throw parse_error("expected a variable", v.pos);
    if (v.dual_spelling) seen_dual_ = true;
    else seen_primal_ = true;
    if (seen_primal_ && seen_dual_)
      throw parse_error("mixed primal and dual variable names", v.pos);
    ++pos_;
    int exp = 1;
    if (peek().kind == Token::Caret) {
      ++pos_;
      if (peek().kind != Token::Integer)
        throw parse_error("expected a nonnegative integer exponent", peek().pos);
      const Token& e = advance();
      if (e.text.size() > 6) throw parse_error("exponent too large", e.pos);
      exp = std::stoi(e.text);
    }
    return {v.var_index, exp};
  }

  // term := [rational '*'] factor ('*' factor)*
  std::pair<Rational, Monomial> parse_term() {
    Rational coeff(1);
    if (peek().kind == Token::Minus || peek().kind == Token::Integer) {
      coeff = parse_rational();
      if (peek().kind != Token::Star)
        throw parse_error("expected '*' between coefficient and variables", peek().pos);
      ++pos_;
    }
    std::vector<int> exps(static_cast<std::size_t>(vars_), 0);
    auto [v0, e0] = parse_factor();
    exps[static_cast<std::size_t>(v0)] += e0;
    while (peek().kind == Token::Star) {
      ++pos_;
      auto [v, e] = parse_factor();
      exps[static_cast<std::size_t>(v)] += e;
    }
    return {coeff, Monomial(exps)};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int vars_;
  bool seen_primal_ = false;
  bool seen_dual_ = false;
};

const char* var_name(RingTag ring, int var_count, int index) {
  static const char* primal3[] = {"x", "y", "z"};
  static const char* dual3[] = {"a", "b", "c"};
  const int offset = var_count == 2 ? 1 : 0;
  return ring == RingTag::dual ? dual3[index + offset] : primal3[index + offset];
}

std::string monomial_string(const Monomial& m, RingTag ring) {
  std::string s;
  for (int i = 0; i < m.var_count(); ++i) {
    const int e = m.exp(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += var_name(ring, m.var_count(), i);
    if (e >= 2) s += '^' + std::to_string(e);
  }
  return s;
}

std::string term_string(const Rational& abs_coeff, const Monomial& m, RingTag ring,
                        bool explicit_one) {
  if (m.degree() == 0)
    return abs_coeff.to_string() + "*" + var_name(ring, m.var_count(), m.var_count() - 1) + "^0";
  const std::string mono = monomial_string(m, ring);
  if (abs_coeff == Rational(1) && !explicit_one) return mono;
  return abs_coeff.to_string() + "*" + mono;
}

}  // namespace

Form parse_form(const std::string& text, int expected_vars) {
  if (expected_vars != 2 && expected_vars != 3)
    throw domain_error("parse_form: expected_vars must be 2 or 3");
  Parser p(tokenize(text, expected_vars), expected_vars);
  return p.run();
}

std::string print_form(const Form& f) {
  if (f.is_zero())
    return std::string("0*") + var_name(f.ring(), f.var_count(), f.var_count() - 1) + "^" +
           std::to_string(f.degree());
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (first) {
      if (c.sign() < 0) out += "-";
      // a leading negative unit coefficient must stay explicit to re-parse
      out += term_string(c.abs(), m, f.ring(), c.sign() < 0 && c.abs() == Rational(1));
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += term_string(c.abs(), m, f.ring(), false);
    }
  }
  return out;
}

}  // namespace apolar
