#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "khova/error.hpp"

namespace khova {

using BigInt = boost::multiprecision::cpp_int;

// Exponent of a monomial q^q T^t. Ordered lexicographically (q first).
struct QTExponent {
  int q = 0;
  int t = 0;

  friend auto operator<=>(const QTExponent&, const QTExponent&) = default;
  friend QTExponent operator+(QTExponent a, QTExponent b) { return {a.q + b.q, a.t + b.t}; }
  friend QTExponent operator-(QTExponent a, QTExponent b) { return {a.q - b.q, a.t - b.t}; }
};

namespace detail {

inline std::array<int, 1> components(int e) { return {e}; }
inline std::array<int, 2> components(const QTExponent& e) { return {e.q, e.t}; }

}  // namespace detail

// Laurent polynomial with arbitrary-precision integer coefficients.
// Canonical form: no zero coefficient is ever stored.
template <class Exponent>
class Laurent {
 public:
  using Terms = std::map<Exponent, BigInt>;

  Laurent() = default;

  static Laurent monomial(const Exponent& e, const BigInt& coeff = 1) {
    Laurent p;
    p.add_term(e, coeff);
    return p;
  }
  static Laurent constant(const BigInt& c) { return monomial(Exponent{}, c); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  BigInt coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  // Precondition: nonzero.
  const Exponent& min_exponent() const { return terms_.begin()->first; }
  const Exponent& max_exponent() const { return terms_.rbegin()->first; }

  void add_term(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Multiplication by the monomial x^e.
  Laurent shifted(const Exponent& e) const {
    Laurent out;
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + e, c);
    return out;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent& operator*=(const BigInt& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  Laurent operator-() const {
    Laurent out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend Laurent operator*(Laurent a, const BigInt& s) { return a *= s; }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  // Nonnegative integer power.
  Laurent pow(unsigned k) const {
    Laurent out = constant(1);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
  }

 private:
  Terms terms_;
};

using LaurentPoly1 = Laurent<int>;
using LaurentPoly2 = Laurent<QTExponent>;

// q^k and D = q + q^-1.
inline LaurentPoly1 q_pow(int k) { return LaurentPoly1::monomial(k); }
inline LaurentPoly1 quantum_d() { return q_pow(1) + q_pow(-1); }
inline LaurentPoly2 qt_pow(int q, int t) { return LaurentPoly2::monomial({q, t}); }

// Embeds a q-polynomial into (q, T) with T-degree zero.
LaurentPoly2 lift(const LaurentPoly1& p);

// Exact quotient a / b. Throws DivisionError when b is zero or the division
// leaves a remainder.
template <class Exponent>
Laurent<Exponent> div_exact(const Laurent<Exponent>& a, const Laurent<Exponent>& b) {
  if (b.is_zero()) throw DivisionError("division by the zero polynomial");
  if (a.is_zero()) return {};

  // Per-variable degree box that contains the support of any exact quotient.
  constexpr std::size_t N = std::tuple_size_v<decltype(detail::components(Exponent{}))>;
  auto bounds = [](const Laurent<Exponent>& p) {
    std::array<int, N> lo, hi;
    lo.fill(0);
    hi.fill(0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      auto v = detail::components(e);
      for (std::size_t i = 0; i < N; ++i) {
        lo[i] = first ? v[i] : std::min(lo[i], v[i]);
        hi[i] = first ? v[i] : std::max(hi[i], v[i]);
      }
      first = false;
    }
    return std::pair{lo, hi};
  };
  const auto [alo, ahi] = bounds(a);
  const auto [blo, bhi] = bounds(b);

  Laurent<Exponent> quotient;
  Laurent<Exponent> rest = a;
  const auto& lead_e = b.max_exponent();
  const BigInt lead_c = b.coefficient(lead_e);
  while (!rest.is_zero()) {
    const Exponent e = rest.max_exponent() - lead_e;
    const auto v = detail::components(e);
    for (std::size_t i = 0; i < N; ++i) {
      if (v[i] < alo[i] - blo[i] || v[i] > ahi[i] - bhi[i])
        throw DivisionError("polynomial division leaves a remainder");
    }
    const BigInt top = rest.coefficient(rest.max_exponent());
    if (top % lead_c != 0) throw DivisionError("polynomial division leaves a remainder");
    const BigInt c = top / lead_c;
    quotient.add_term(e, c);
    rest -= b.shifted(e) * c;
  }
  return quotient;
}

// Substitutes T = value (only +1 and -1 are supported) and collects q-powers.
LaurentPoly1 evaluate_T(const LaurentPoly2& p, int value);

// Sorted-term text form, e.g. "q^-4*T^-2 + q^-2*T^-1 + 1 + q^2*T + q^4*T^2".
std::string to_string(const LaurentPoly1& p);
std::string to_string(const LaurentPoly2& p);
// LaTeX form, e.g. "q^{2} + q^{6}T^{2} + q^{8}T^{3}".
std::string to_latex(const LaurentPoly1& p);
std::string to_latex(const LaurentPoly2& p);

// Inverse of to_string. Also accepts '*' omitted between factors and
// arbitrary whitespace. Throws ParseError.
LaurentPoly1 parse_laurent1(std::string_view text);
LaurentPoly2 parse_laurent2(std::string_view text);

}  // namespace khova
