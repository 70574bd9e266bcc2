#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "khova/diagram.hpp"
#include "khova/laurent.hpp"

namespace fixtures {

// Three-strand closure of s1 s2 s1 s2 with edges named A..H. The same planar
// graph carries the trefoil (all crossings positive) and the figure-eight
// (alternating signs).
inline const char* kGraphTrefoil = "X(H,E,F,G)+ X(A,B,D,E)+ X(D,C,G,F)+ X(B,A,H,C)+";
inline const char* kGraphFigureEight = "X(H,E,F,G)+ X(A,B,D,E)- X(D,C,G,F)+ X(B,A,H,C)-";
inline const char* kPdTrefoil = "X(1,4,2,5)+, X(3,6,4,1)+, X(5,2,6,3)+";

inline khova::LaurentPoly1 P1(const char* s) { return khova::parse_laurent1(s); }
inline khova::LaurentPoly2 P2(const char* s) { return khova::parse_laurent2(s); }

// Edge names of a cycle, read cyclically from its smallest name in the
// lexicographically smaller of the two directions.
inline std::string canonical_cycle(std::string s) {
  std::string best;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      std::string r = s.substr(k) + s.substr(0, k);
      if (best.empty() || r < best) best = r;
    }
    std::reverse(s.begin(), s.end());
  }
  return best;
}

struct RandomBraid {
  std::string word;
  int strands;
};

// Random braid word with 1..max_letters letters on 2..max_strands strands.
inline RandomBraid random_braid(std::mt19937& rng, int max_letters, int max_strands) {
  const int strands = std::uniform_int_distribution<int>(2, max_strands)(rng);
  const int letters = std::uniform_int_distribution<int>(1, max_letters)(rng);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(0.4);
  std::string word;
  for (int i = 0; i < letters; ++i) {
    if (!word.empty()) word += ",";
    const int g = gen(rng);
    word += std::to_string(neg(rng) ? -g : g);
  }
  return {word, strands};
}

}  // namespace fixtures
