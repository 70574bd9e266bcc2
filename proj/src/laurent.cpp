#include "khova/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace khova {

LaurentPoly2 lift(const LaurentPoly1& p) {
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms()) out.add_term({e, 0}, c);
  return out;
}

LaurentPoly1 evaluate_T(const LaurentPoly2& p, int value) {
  if (value != 1 && value != -1)
    throw Error("argument", "evaluate_T supports only T = 1 or T = -1");
  LaurentPoly1 out;
  for (const auto& [e, c] : p.terms()) {
    const bool flip = value == -1 && (e.t % 2 != 0);
    out.add_term(e.q, flip ? BigInt(-c) : c);
  }
  return out;
}

namespace {

enum class Style { Plain, Latex };

std::string power(char var, int e, Style style) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  if (style == Style::Latex) return std::string(1, var) + "^{" + std::to_string(e) + "}";
  return std::string(1, var) + "^" + std::to_string(e);
}

std::string monomial_text(int e, Style style) { return power('q', e, style); }

std::string monomial_text(const QTExponent& e, Style style) {
  std::string q = power('q', e.q, style);
  std::string t = power('T', e.t, style);
  if (q.empty()) return t;
  if (t.empty()) return q;
  return style == Style::Latex ? q + t : q + "*" + t;
}

template <class Exponent>
std::string format(const Laurent<Exponent>& p, Style style) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_text(e, style);
    if (mono.empty()) {
      out << mag;
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag << (style == Style::Latex ? "" : "*") << mono;
    }
  }
  return out.str();
}

struct ParsedTerm {
  BigInt coeff;
  int q = 0;
  int t = 0;
};

class PolyParser {
 public:
  PolyParser(std::string_view text, bool allow_t) : allow_t_(allow_t) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  std::vector<ParsedTerm> parse() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<ParsedTerm> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      ParsedTerm term = parse_term();
      term.coeff *= sign;
      terms.push_back(std::move(term));
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_var() const { return peek() == 'q' || peek() == 'T' || peek() == 't'; }

  BigInt parse_unsigned() {
    std::string digits;
    while (at_digit()) digits.push_back(get());
    if (digits.empty()) fail("expected digits");
    return BigInt(digits);
  }

  int parse_exponent() {
    if (peek() != '^') return 1;
    get();
    const bool braced = peek() == '{';
    if (braced) get();
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
    const BigInt v = parse_unsigned();
    if (v > 1'000'000) fail("exponent out of range");
    if (braced) {
      if (peek() != '}') fail("expected '}'");
      get();
    }
    return sign * v.convert_to<int>();
  }

  ParsedTerm parse_term() {
    ParsedTerm term;
    term.coeff = 1;
    bool any = false;
    if (at_digit()) {
      term.coeff = parse_unsigned();
      any = true;
      if (peek() == '*') {
        get();
        if (!at_var()) fail("expected a variable after '*'");
      }
    }
    while (at_var()) {
      const char var = get();
      const int e = parse_exponent();
      if (var == 'q') {
        term.q += e;
      } else {
        if (!allow_t_) fail("unexpected variable T");
        term.t += e;
      }
      any = true;
      if (peek() == '*') {
        get();
        if (!at_var()) fail("expected a variable after '*'");
      }
    }
    if (!any) fail("expected a term");
    if (pos_ < s_.size() && peek() != '+' && peek() != '-') fail("unexpected character");
    return term;
  }

  std::string s_;
  std::size_t pos_ = 0;
  bool allow_t_;
};

}  // namespace

std::string to_string(const LaurentPoly1& p) { return format(p, Style::Plain); }
std::string to_string(const LaurentPoly2& p) { return format(p, Style::Plain); }
std::string to_latex(const LaurentPoly1& p) { return format(p, Style::Latex); }
std::string to_latex(const LaurentPoly2& p) { return format(p, Style::Latex); }

LaurentPoly1 parse_laurent1(std::string_view text) {
  LaurentPoly1 out;
  for (const auto& term : PolyParser(text, false).parse()) out.add_term(term.q, term.coeff);
  return out;
}

LaurentPoly2 parse_laurent2(std::string_view text) {
  LaurentPoly2 out;
  for (const auto& term : PolyParser(text, true).parse()) out.add_term({term.q, term.t}, term.coeff);
  return out;
}

}  // namespace khova
