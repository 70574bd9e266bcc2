#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "khova/hypercube.hpp"

using namespace khova;
using fixtures::P1;

namespace {

std::multiset<std::string> cycle_names(const KnotDiagram& d, const CycleSet& cs) {
  std::multiset<std::string> out;
  for (const auto& c : cs.cycles) {
    std::string s;
    for (auto e : c.edges) s += d.edge_name(e);
    out.insert(fixtures::canonical_cycle(s));
  }
  return out;
}

std::multiset<std::string> expect_cycles(std::initializer_list<const char*> names) {
  std::multiset<std::string> out;
  for (const char* n : names) out.insert(fixtures::canonical_cycle(n));
  return out;
}

using Terms = std::vector<ExtendedJonesTerm>;

void check_structure(const KnotDiagram& d, const Hypercube& cube) {
  const std::size_t n = d.crossing_count();
  CHECK(cube.vertices.size() == (std::size_t{1} << n));
  CHECK(cube.edges.size() == (n == 0 ? 0 : n << (n - 1)));
  for (const auto& v : cube.vertices) {
    std::size_t total = 0;
    for (const auto& c : v.cycles) total += c.length();
    CHECK(total == d.edge_count());
    CHECK(v.cycle_of_edge.size() == d.edge_count());
  }
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> sign;
  for (const auto& e : cube.edges) {
    const auto& s = cube.vertices[e.source];
    const auto& t = cube.vertices[e.target];
    const long delta = static_cast<long>(t.nu()) - static_cast<long>(s.nu());
    CHECK(std::abs(delta) == 1);
    CHECK(e.target == (e.source | (std::uint64_t{1} << e.position)));
    CHECK(e.sign == edge_sign(e.label));
    sign[{e.source, e.target}] = e.sign;
  }
  // Every square face anticommutes.
  for (std::uint64_t v = 0; v < cube.vertices.size(); ++v) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const std::uint64_t ba = std::uint64_t{1} << a, bb = std::uint64_t{1} << b;
        if ((v & ba) || (v & bb)) continue;
        const int prod = sign[{v, v | ba}] * sign[{v | ba, v | ba | bb}] * sign[{v, v | bb}] * sign[{v | bb, v | ba | bb}];
        CHECK(prod == -1);
      }
    }
  }
}

}  // namespace

TEST_SUITE("hypercube") {
  TEST_CASE("resolution labels") {
    const auto r = ResolutionLabel::parse("[0101]");
    CHECK(r.size() == 4);
    CHECK_FALSE(r.bit(0));
    CHECK(r.bit(1));
    CHECK(r.to_string() == "[0101]");
    CHECK(ResolutionLabel::parse("1100") == ResolutionLabel::parse("[1100]"));
    CHECK(r.distance(ResolutionLabel::parse("[1111]")) == 2);
    CHECK(r.flipped(0).to_string() == "[1101]");
    CHECK_THROWS_AS(ResolutionLabel::parse("[01a1]"), ParseError);
  }

  TEST_CASE("star labels and edge signs") {
    CHECK(edge_sign(StarLabel::parse("[*11]")) == 1);
    CHECK(edge_sign(StarLabel::parse("[1*1]")) == -1);
    CHECK(edge_sign(StarLabel::parse("[1,1,*]")) == 1);
    CHECK(edge_sign(StarLabel::parse("0*00")) == 1);
    CHECK(edge_sign(StarLabel::parse("[101*]")) == 1);
    CHECK(edge_sign(StarLabel::parse("[111*]")) == -1);
    CHECK(StarLabel::parse("[1*1]").to_string() == "[1*1]");
    CHECK_THROWS_AS(StarLabel::parse("[111]"), ParseError);
    CHECK_THROWS_AS(StarLabel::parse("[1**]"), ParseError);
  }

  TEST_CASE("resolutions of the eight-edge graph") {
    const auto d = parse_pd_code(fixtures::kGraphTrefoil);
    auto at = [&](const char* r) { return cycle_names(d, smooth(d, ResolutionLabel::parse(r))); };
    CHECK(at("[0000]") == expect_cycles({"AB", "CHED", "FG"}));
    CHECK(at("[1100]") == expect_cycles({"AEFGHCDB"}));
    CHECK(at("[1001]") == expect_cycles({"ABCDEFGH"}));
    CHECK(at("[1111]") == expect_cycles({"AEFDBCGH"}));
    CHECK(at("[1010]") == expect_cycles({"AB", "CHG", "DFE"}));
    CHECK(at("[0101]") == expect_cycles({"AEH", "BCD", "FG"}));
  }

  TEST_CASE("smoothings only depend on the planar graph") {
    const auto a = parse_pd_code(fixtures::kGraphTrefoil);
    const auto b = parse_pd_code(fixtures::kGraphFigureEight);
    for (std::uint64_t m = 0; m < 16; ++m) {
      const ResolutionLabel r(m, 4);
      CHECK(cycle_names(a, smooth(a, r)) == cycle_names(b, smooth(b, r)));
    }
  }

  TEST_CASE("cycle bookkeeping") {
    const auto d = parse_pd_code(fixtures::kGraphTrefoil);
    const auto cs = smooth(d, ResolutionLabel::parse("[0000]"));
    CHECK(cs.nu() == 3);
    CHECK(cs.lengths() == std::vector<std::size_t>{2, 2, 4});
    const auto a = *d.find_edge("A");
    CHECK(cs.cycles[static_cast<std::size_t>(cs.cycle_containing(a))].contains(a));
    CHECK(cs.cycles.front().edges.front() == a);
  }

  TEST_CASE("distinct cycles over the whole cube") {
    const auto d = parse_pd_code(fixtures::kGraphTrefoil);
    std::set<std::string> all;
    for (std::uint64_t m = 0; m < 16; ++m)
      for (const auto& s : cycle_names(d, smooth(d, ResolutionLabel(m, 4)))) all.insert(s);
    CHECK(all.size() == 20);
  }

  TEST_CASE("classify_edge") {
    const auto d = parse_pd_code(fixtures::kGraphTrefoil);
    const auto v0 = smooth(d, ResolutionLabel::parse("[0000]"));
    const auto v1 = smooth(d, ResolutionLabel::parse("[1000]"));
    const auto ch = classify_edge(v0, v1);
    if (v1.nu() < v0.nu()) {
      CHECK(ch.kind == EdgeKind::Merge);
      CHECK(ch.from.size() == 2);
      CHECK(ch.to.size() == 1);
    } else {
      CHECK(ch.kind == EdgeKind::Split);
      CHECK(ch.from.size() == 1);
      CHECK(ch.to.size() == 2);
    }
    CHECK(ch.unchanged.size() == std::min(v0.nu(), v1.nu()) - 1);
    CHECK_THROWS_AS(classify_edge(v0, v0), Error);
    CHECK_THROWS_AS(classify_edge(v0, smooth(d, ResolutionLabel::parse("[1100]"))), Error);
  }

  TEST_CASE("cube shape") {
    const auto d = parse_pd_code(fixtures::kGraphFigureEight);
    const auto cube = build_hypercube(d);
    CHECK(cube.initial.to_string() == "[0101]");
    CHECK(cube.degree(cube.initial.mask()) == 0);
    CHECK(cube.degree(ResolutionLabel::parse("[1010]").mask()) == 4);
    check_structure(d, cube);
    CHECK_THROWS_AS(build_hypercube(d, 3), ResourceError);
  }

  TEST_CASE("extended Jones, two-strand trefoil") {
    const auto cube = build_hypercube(parse_braid_word("1,1,1", 2));
    const Terms want = {{0, {3, 3}, 1}, {1, {6}, 3}, {2, {2, 4}, 3}, {3, {2, 2, 2}, 1}};
    CHECK(extended_jones(cube) == want);
  }

  TEST_CASE("extended Jones, three-strand trefoil") {
    const auto cube = build_hypercube(parse_pd_code(fixtures::kGraphTrefoil));
    const Terms want = {{0, {2, 2, 4}, 1}, {1, {2, 6}, 4}, {2, {2, 3, 3}, 2},
                        {2, {8}, 4},       {3, {3, 5}, 4}, {4, {8}, 1}};
    CHECK(extended_jones(cube) == want);
  }

  TEST_CASE("extended Jones, figure-eight") {
    const auto cube = build_hypercube(parse_pd_code(fixtures::kGraphFigureEight));
    const Terms want = {{0, {2, 3, 3}, 1}, {1, {2, 6}, 2}, {1, {3, 5}, 2}, {2, {2, 2, 4}, 1}, {2, {8}, 5},
                        {3, {2, 6}, 2},    {3, {3, 5}, 2}, {4, {2, 3, 3}, 1}};
    CHECK(extended_jones(cube) == want);
  }

  TEST_CASE("Jones polynomials") {
    const auto trefoil = P1("q + q^3 + q^5 - q^9");
    for (const auto& d : {parse_braid_word("1,1,1", 2), parse_pd_code(fixtures::kGraphTrefoil),
                          parse_pd_code(fixtures::kPdTrefoil)}) {
      const auto j = state_sum_jones(build_hypercube(d), d);
      CHECK(j == trefoil);
      CHECK(reduced_jones(j) == P1("q^2 + q^6 - q^8"));
    }
    for (const auto& d : {parse_pd_code(fixtures::kGraphFigureEight), parse_braid_word("1,-2,1,-2", 3)}) {
      const auto j = state_sum_jones(build_hypercube(d), d);
      CHECK(j == P1("q^5 + q^-5"));
      CHECK(reduced_jones(j) == P1("q^-4 - q^-2 + 1 - q^2 + q^4"));
    }
    const auto u = parse_braid_word("", 1);
    CHECK(state_sum_jones(build_hypercube(u), u) == P1("q + q^-1"));
    const auto mirror = parse_braid_word("-1,-1,-1", 2);
    CHECK(state_sum_jones(build_hypercube(mirror), mirror) == P1("q^-1 + q^-3 + q^-5 - q^-9"));
    CHECK_THROWS_AS(reduced_jones(P1("q^2")), DivisionError);
  }

  TEST_CASE("random braids: cube structure and specialization") {
    std::mt19937 rng(77);
    for (int i = 0; i < 40; ++i) {
      const auto b = fixtures::random_braid(rng, 7, 4);
      const auto d = parse_braid_word(b.word, b.strands);
      const auto cube = build_hypercube(d);
      check_structure(d, cube);
      const auto j = state_sum_jones(cube, d);
      CHECK(specialize_extended_jones(extended_jones(cube), d.n_black(), d.n_white()) == j);
      // Each component contributes a factor divisible by D.
      CHECK_NOTHROW(reduced_jones(j));
    }
  }
}
