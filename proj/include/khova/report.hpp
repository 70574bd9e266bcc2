#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khova/diagram.hpp"
#include "khova/homology.hpp"
#include "khova/int_matrix.hpp"
#include "khova/serialize.hpp"

namespace khova {

enum class Flavor { Unreduced, Reduced, Both };

struct ComputeOptions {
  Flavor flavor = Flavor::Both;
  std::optional<std::string> marked;  // edge name; default is the smallest label
  Field field = Field::rationals();
  std::size_t max_crossings = kDefaultMaxCrossings;
  bool timing = false;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FlavorResult {
  bool reduced = false;
  std::optional<std::string> marked;
  std::vector<LaurentPoly1> chain_qdims;
  HomologyTable homology;
  Superpolynomial superpolynomial;
};

struct DiagramReport {
  std::string name;
  std::string pd;
  std::size_t crossings = 0;
  int n_black = 0;
  int n_white = 0;
  std::size_t components = 0;
  LaurentPoly1 jones;
  LaurentPoly1 reduced_jones;
  std::vector<FlavorResult> flavors;
  std::vector<Check> checks;
  std::optional<double> elapsed_ms;

  bool ok() const;
  const FlavorResult* flavor(bool reduced) const;
};

struct RunReport {
  std::vector<DiagramReport> diagrams;
  bool ok() const;
  std::size_t passed() const;
};

// Runs the whole pipeline for one diagram and records every invariant check.
DiagramReport cmd_compute(const KnotDiagram& diagram, const ComputeOptions& options, std::string name = "");

Json to_json(const DiagramReport& report);
Json to_json(const RunReport& report);
std::string to_text(const DiagramReport& report);
std::string to_text(const RunReport& report);
std::string to_latex(const DiagramReport& report);
std::string to_latex(const RunReport& report);

}  // namespace khova
