#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "khova/homology.hpp"

using namespace khova;
using fixtures::P1;
using fixtures::P2;

namespace {

struct Computed {
  HomologyTable table;
  Superpolynomial poly;
};

Computed compute(const KnotDiagram& d, std::optional<std::string> marked, bool reduced,
                 Field field = Field::rationals()) {
  Reduction r;
  if (reduced) r.marked = marked ? *d.find_edge(*marked) : d.effective_marked_edge();
  const auto cx = build_differentials(build_hypercube(d), r);
  auto table = homology_dims(cx, field);
  auto poly = superpolynomial(table, d.n_black(), d.n_white());
  return {std::move(table), std::move(poly)};
}

std::vector<LaurentPoly1> dims(std::initializer_list<const char*> text) {
  std::vector<LaurentPoly1> out;
  for (const char* t : text) out.push_back(parse_laurent1(t));
  return out;
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("two-strand trefoil") {
    const auto d = parse_braid_word("1,1,1", 2);
    const auto u = compute(d, {}, false);
    CHECK(u.table.dims == dims({"q^-2 + 1", "0", "1", "q^3"}));
    CHECK_FALSE(u.table.reduced);
    CHECK(u.poly.value == P2("q + q^3 + q^5*T^2 + q^9*T^3"));
    const auto r = compute(d, {}, true);
    CHECK(r.table.dims == dims({"1", "0", "q^2", "q^3"}));
    CHECK(r.table.reduced);
    CHECK(r.poly.value == P2("q^2 + q^6*T^2 + q^8*T^3"));
  }

  TEST_CASE("three-strand trefoil, reduced at A") {
    const auto d = parse_pd_code(fixtures::kGraphTrefoil);
    const auto r = compute(d, "A", true);
    CHECK(r.table.dims == dims({"q^-1", "0", "q", "q^2", "0"}));
    CHECK(r.poly.value == P2("q^2 + q^6*T^2 + q^8*T^3"));
    CHECK(compute(d, {}, false).poly.value == P2("q + q^3 + q^5*T^2 + q^9*T^3"));
  }

  TEST_CASE("figure-eight, reduced at A") {
    const auto d = parse_pd_code(fixtures::kGraphFigureEight);
    const auto r = compute(d, "A", true);
    CHECK(r.table.dims == dims({"q^-1", "1", "q", "q^2", "q^3"}));
    const auto want = P2("q^-4*T^-2 + q^-2*T^-1 + 1 + q^2*T + q^4*T^2");
    CHECK(r.poly.value == want);
    CHECK(compute(parse_braid_word("1,-2,1,-2", 3), {}, true).poly.value == want);
  }

  TEST_CASE("figure-eight matches the a = q^2 specialization") {
    // 1 + T^2 a^2 + q^2 T + 1/(q^2 T) + 1/(T^2 a^2) at a = q^2.
    LaurentPoly2 dgr = qt_pow(0, 0) + qt_pow(4, 2) + qt_pow(2, 1) + qt_pow(-2, -1) + qt_pow(-4, -2);
    CHECK(compute(parse_pd_code(fixtures::kGraphFigureEight), {}, true).poly.value == dgr);
  }

  TEST_CASE("unknot") {
    const auto d = parse_braid_word("", 1);
    CHECK(compute(d, {}, false).poly.value == P2("q^-1 + q"));
    CHECK(compute(d, {}, true).poly.value == P2("1"));
    const auto twisted = parse_braid_word("1", 2);
    CHECK(compute(twisted, {}, false).poly.value == P2("q^-1 + q"));
    CHECK(compute(twisted, {}, true).poly.value == P2("1"));
  }

  TEST_CASE("correction term") {
    const auto d = parse_braid_word("1,1,1", 2);
    CHECK(correction_term(compute(d, {}, false).poly, compute(d, {}, true).poly) == P2("q^7*T^2 + q^7*T^3"));
    const auto u = parse_braid_word("", 1);
    CHECK(correction_term(compute(u, {}, false).poly, compute(u, {}, true).poly).is_zero());
    const auto a = parse_pd_code(fixtures::kGraphFigureEight);
    const auto b = parse_braid_word("1,-2,1,-2", 3);
    CHECK(correction_term(compute(a, {}, false).poly, compute(a, {}, true).poly) ==
          correction_term(compute(b, {}, false).poly, compute(b, {}, true).poly));
  }

  TEST_CASE("Euler characteristic") {
    const auto d = parse_pd_code(fixtures::kGraphFigureEight);
    const auto j = state_sum_jones(build_hypercube(d), d);
    CHECK(euler_check(compute(d, {}, false).poly, j));
    CHECK(euler_check(compute(d, {}, true).poly, reduced_jones(j)));
    CHECK_FALSE(euler_check(compute(d, {}, true).poly, j));
    const auto cx = build_differentials(build_hypercube(d), Reduction{});
    CHECK(euler_characteristic(cx, d.n_black(), d.n_white()) == j);
  }

  TEST_CASE("every marked edge gives the same reduced superpolynomial") {
    for (const char* pd : {fixtures::kGraphTrefoil, fixtures::kGraphFigureEight}) {
      const auto d = parse_pd_code(pd);
      const auto base = compute(d, "A", true).poly.value;
      for (const char* e : {"B", "C", "D", "E", "F", "G", "H"}) CHECK(compute(d, e, true).poly.value == base);
    }
  }

  TEST_CASE("superpolynomial does not depend on the realization") {
    const auto a = compute(parse_braid_word("1,1,1", 2), {}, false).poly.value;
    CHECK(compute(parse_pd_code(fixtures::kPdTrefoil), {}, false).poly.value == a);
    CHECK(compute(parse_pd_code(fixtures::kGraphTrefoil), {}, false).poly.value == a);
    CHECK(compute(parse_braid_word("1,2,1,2", 3), {}, false).poly.value == a);
  }

  TEST_CASE("coefficients in the two-element field") {
    const auto d = parse_braid_word("1,1,1", 2);
    const auto q = compute(d, {}, false);
    const auto f2 = compute(d, {}, false, Field::prime(2));
    CHECK(f2.table.field == Field::prime(2));
    CHECK(f2.table != q.table);
    CHECK(f2.poly.value - q.poly.value == P2("q^7*T^2 + q^7*T^3"));
    const auto f2r = compute(d, {}, true, Field::prime(2));
    CHECK(f2.poly.value == lift(quantum_d()) * f2r.poly.value);
    CHECK(f2r.poly.value == compute(d, {}, true).poly.value);
    // Odd characteristic sees no torsion here.
    CHECK(compute(d, {}, false, Field::prime(3)).poly.value == q.poly.value);
  }

  TEST_CASE("table equality includes field and flavour") {
    const auto d = parse_braid_word("", 1);
    const auto u = compute(d, {}, false);
    auto other = u.table;
    other.field = Field::prime(5);
    CHECK(other != u.table);
  }

  TEST_CASE("random braids: Euler specialization") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 25; ++i) {
      const auto b = fixtures::random_braid(rng, 7, 4);
      const auto d = parse_braid_word(b.word, b.strands);
      const auto j = state_sum_jones(build_hypercube(d), d);
      CHECK(evaluate_T(compute(d, {}, false).poly.value, -1) == j);
      CHECK(evaluate_T(compute(d, {}, true).poly.value, -1) == reduced_jones(j));
    }
  }
}
