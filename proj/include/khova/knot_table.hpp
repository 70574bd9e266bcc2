#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "khova/diagram.hpp"
#include "khova/report.hpp"

namespace khova {

struct KnotTableEntry {
  std::string name;
  std::string pd;
  KnotDiagram diagram;
  std::optional<LaurentPoly1> expected_jones;
};

// Newline-delimited JSON records {"name": ..., "pd": ..., "jones": ...}; the
// jones field is optional polynomial text. Blank lines are skipped. Throws
// Error("table") naming the line and record on malformed input or a duplicate
// name.
std::vector<KnotTableEntry> parse_knot_table(std::istream& in);
std::vector<KnotTableEntry> load_knot_table(const std::string& path);

struct VerifyOptions {
  ComputeOptions compute;
  unsigned jobs = 1;
  // Additional marked edges compared against the default one.
  std::size_t marked_samples = 2;
};

// Per entry: the full compute pipeline, the Jones value against the expected
// column, and reduced superpolynomials over several marked edges. Results keep
// input order regardless of the number of workers.
RunReport batch_verify(const std::vector<KnotTableEntry>& entries, const VerifyOptions& options);

}  // namespace khova
