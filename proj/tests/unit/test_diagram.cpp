#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "khova/diagram.hpp"

using namespace khova;

namespace {

bool has_violation(const ValidationReport& r, Violation::Kind kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

// Cycles of the strand permutation induced by a braid word.
std::size_t permutation_cycles(const std::string& word, int strands) {
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  std::istringstream in(word);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const int g = std::abs(std::stoi(tok));
    std::swap(perm[static_cast<std::size_t>(g - 1)], perm[static_cast<std::size_t>(g)]);
  }
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("trefoil from a braid word") {
    const auto d = parse_braid_word("1,1,1", 2);
    CHECK(d.crossing_count() == 3);
    CHECK(d.edge_count() == 6);
    CHECK(d.n_black() == 3);
    CHECK(d.n_white() == 0);
    CHECK(d.component_count() == 1);
    CHECK(d.edge_name(EdgeLabel{0}) == "1");
  }

  TEST_CASE("braid words accept commas and whitespace") {
    const auto a = parse_braid_word("1,-2,1,-2", 3);
    const auto b = parse_braid_word(" 1 -2\t1,  -2 ", 3);
    CHECK(to_pd_text(a) == to_pd_text(b));
    CHECK(a.n_black() == 2);
    CHECK(a.n_white() == 2);
  }

  TEST_CASE("braid letters become signed PD records") {
    // Positive letter: (BR, TR, TL, BL); negative letter: (BL, BR, TR, TL).
    const auto pos = parse_braid_word("1", 2);
    const auto neg = parse_braid_word("-1", 2);
    CHECK(pos.crossings()[0].sign == CrossingSign::Positive);
    CHECK(neg.crossings()[0].sign == CrossingSign::Negative);
    CHECK(pos.component_count() == 1);
    CHECK(neg.component_count() == 1);
  }

  TEST_CASE("unknot and unlinks") {
    const auto unknot = parse_braid_word("", 1);
    CHECK(unknot.crossing_count() == 0);
    CHECK(unknot.edge_count() == 1);
    CHECK(unknot.is_loop(EdgeLabel{0}));
    CHECK(unknot.component_count() == 1);
    const auto split = parse_braid_word("1,1,1", 4);
    CHECK(split.component_count() == 3);
    CHECK(split.edge_count() == 8);
    CHECK(to_pd_text(split).find("O(") != std::string::npos);
  }

  TEST_CASE("braid word errors") {
    CHECK_THROWS_AS(parse_braid_word("1,x", 2), ParseError);
    CHECK_THROWS_AS(parse_braid_word("0", 2), ParseError);
    CHECK_THROWS_AS(parse_braid_word("2", 2), ParseError);
    CHECK_THROWS_AS(parse_braid_word("-3", 3), ParseError);
    CHECK_THROWS_AS(parse_braid_word("1", 0), ParseError);
    CHECK_THROWS_AS(parse_braid_word("1.5", 3), ParseError);
  }

  TEST_CASE("lettered PD code") {
    const auto d = parse_pd_code(fixtures::kGraphTrefoil);
    CHECK(d.crossing_count() == 4);
    CHECK(d.edge_count() == 8);
    CHECK(d.component_count() == 1);
    CHECK(d.edge_name(EdgeLabel{0}) == "A");
    CHECK(d.edge_name(EdgeLabel{7}) == "H");
    CHECK(d.find_edge("E")->id == 4);
    CHECK_FALSE(d.find_edge("Z"));
    const auto e = parse_pd_code(fixtures::kGraphFigureEight);
    CHECK(e.n_black() == 2);
    CHECK(e.n_white() == 2);
  }

  TEST_CASE("numeric labels sort numerically") {
    const auto d = parse_braid_word("1,1,1,1,1,1,1,1,1,1", 2);
    CHECK(d.edge_count() == 20);
    CHECK(d.edge_name(EdgeLabel{1}) == "2");
    CHECK(d.edge_name(EdgeLabel{9}) == "10");
  }

  TEST_CASE("PD text round trip") {
    for (const char* text : {fixtures::kGraphTrefoil, fixtures::kGraphFigureEight, fixtures::kPdTrefoil}) {
      const auto d = parse_pd_code(text);
      const auto again = parse_pd_code(to_pd_text(d));
      CHECK(to_pd_text(again) == to_pd_text(d));
      CHECK(again.n_black() == d.n_black());
    }
    const auto u = parse_pd_code("O(a)");
    CHECK(to_pd_text(u) == "O(a)");
  }

  TEST_CASE("PD comments and line numbers") {
    const auto d = parse_pd_code("# trefoil\nX(1,4,2,5)+  # first\nX(3,6,4,1)+\nX(5,2,6,3)+\n");
    CHECK(d.crossing_count() == 3);
    try {
      parse_pd_code("X(1,4,2,5)+\nX(3,6,4,1)+\nX(5,2,6,3)");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_pd_code(""), ParseError);
    CHECK_THROWS_AS(parse_pd_code("# nothing"), ParseError);
    CHECK_THROWS_AS(parse_pd_code("Y(1,2,3,4)+"), ParseError);
    CHECK_THROWS_AS(parse_pd_code("X(1,2,3)+"), ParseError);
    CHECK_THROWS_AS(parse_pd_code("X(1,2,2,1)"), ParseError);
  }

  TEST_CASE("validation reports every violation") {
    DiagramDraft draft = parse_pd_draft("X(1,4,2,5)+ X(3,6,4,1)+ X(5,2,6,7)+ X(1,4,2,5)+");
    draft.marked_edge = "99";
    const auto report = validate(draft);
    CHECK_FALSE(report.ok());
    CHECK(has_violation(report, Violation::Kind::EdgeIncidence));
    CHECK(has_violation(report, Violation::Kind::DuplicateCrossing));
    CHECK(has_violation(report, Violation::Kind::MarkedEdgeUnknown));
    CHECK(report.violations.size() >= 5);
    try {
      KnotDiagram::from_draft(draft);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      CHECK(what.find("edge 7") != std::string::npos);
      CHECK(what.find("duplicate") != std::string::npos);
      CHECK(what.find("99") != std::string::npos);
    }
  }

  TEST_CASE("empty draft") {
    const auto report = validate(DiagramDraft{});
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::EmptyDiagram);
  }

  TEST_CASE("loop edge reused by a crossing") {
    DiagramDraft draft = parse_pd_draft(fixtures::kPdTrefoil);
    draft.loops.push_back("1");
    CHECK(has_violation(validate(draft), Violation::Kind::EdgeIncidence));
  }

  TEST_CASE("first entry must be incoming") {
    // Rotating a record by two slots makes its first entry an outgoing end.
    const auto report = validate(parse_pd_draft("X(2,5,1,4)+ X(3,6,4,1)+ X(5,2,6,3)+"));
    CHECK(has_violation(report, Violation::Kind::Orientation));
    CHECK_THROWS_AS(parse_pd_code("X(2,5,1,4)+ X(3,6,4,1)+ X(5,2,6,3)+"), ValidationError);
  }

  TEST_CASE("marked edge") {
    const auto d = parse_pd_code(fixtures::kGraphTrefoil);
    CHECK_FALSE(d.marked_edge());
    CHECK(d.effective_marked_edge().id == 0);
    const auto m = d.with_marked_edge("F");
    CHECK(m.marked_edge()->id == 5);
    CHECK(m.effective_marked_edge().id == 5);
    CHECK_THROWS_AS(d.with_marked_edge("Q"), ValidationError);
    CHECK(m.to_draft().marked_edge == std::optional<std::string>("F"));
  }

  TEST_CASE("smoothing pairs") {
    for (const auto& c : parse_pd_code(fixtures::kGraphFigureEight).crossings()) {
      const auto s0 = c.smoothing(0), s1 = c.smoothing(1);
      CHECK(s0 != s1);
      // Every position appears once in each smoothing.
      for (const auto& s : {s0, s1}) {
        std::vector<int> pos{s[0].first, s[0].second, s[1].first, s[1].second};
        std::sort(pos.begin(), pos.end());
        CHECK(pos == std::vector<int>{0, 1, 2, 3});
      }
    }
  }

  TEST_CASE("random braids: counts and components") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 200; ++i) {
      const auto b = fixtures::random_braid(rng, 10, 5);
      const auto d = parse_braid_word(b.word, b.strands);
      const std::size_t letters = d.crossing_count();
      CHECK(d.edge_count() >= 2 * letters);
      CHECK(d.n_black() + d.n_white() == static_cast<int>(letters));
      CHECK(d.component_count() == permutation_cycles(b.word, b.strands));
      CHECK(to_pd_text(parse_pd_code(to_pd_text(d))) == to_pd_text(d));
    }
  }
}
