#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "khova/error.hpp"

namespace khova {

// Index of an edge inside its diagram. Ids follow label order: numeric order
// when every label is an integer, lexicographic order otherwise.
struct EdgeLabel {
  int id = 0;
  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

// Black = positive crossing (R), white = negative crossing (R^-1).
enum class CrossingSign { Positive, Negative };

using PositionPair = std::pair<int, int>;

struct Crossing {
  // Counterclockwise around the crossing, pd[0] is the incoming under-strand.
  std::array<EdgeLabel, 4> pd;
  CrossingSign sign = CrossingSign::Positive;
  // Whether pd[1] is the incoming end of the second strand (derived from the
  // global strand orientation).
  bool second_strand_enters_at_1 = false;

  bool is_black() const noexcept { return sign == CrossingSign::Positive; }

  // Positions joined by the two smoothings. Smoothing 0 is the oriented
  // (Seifert) smoothing, smoothing 1 the other one.
  std::array<PositionPair, 2> smoothing(int which) const;
};

// Unvalidated diagram description with textual edge labels.
struct CrossingRecord {
  std::array<std::string, 4> pd;
  CrossingSign sign = CrossingSign::Positive;
};

struct DiagramDraft {
  std::vector<CrossingRecord> crossings;
  // Edges that form crossingless closed components.
  std::vector<std::string> loops;
  std::optional<std::string> marked_edge;
};

struct Violation {
  enum class Kind { EmptyDiagram, EdgeIncidence, DuplicateCrossing, MarkedEdgeUnknown, Orientation };
  Kind kind;
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

// Checks every structural invariant and reports all violations.
ValidationReport validate(const DiagramDraft& draft);

// Validated, immutable link diagram.
class KnotDiagram {
 public:
  // Throws ValidationError carrying the full violation list.
  static KnotDiagram from_draft(const DiagramDraft& draft);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t edge_count() const noexcept { return names_.size(); }
  int n_black() const noexcept { return n_black_; }
  int n_white() const noexcept { return n_white_; }
  std::size_t component_count() const noexcept { return components_; }

  const std::string& edge_name(EdgeLabel e) const { return names_.at(static_cast<std::size_t>(e.id)); }
  std::optional<EdgeLabel> find_edge(std::string_view name) const;
  bool is_loop(EdgeLabel e) const { return loop_.at(static_cast<std::size_t>(e.id)); }

  std::optional<EdgeLabel> marked_edge() const noexcept { return marked_; }
  // The explicit marked edge, or the smallest edge label.
  EdgeLabel effective_marked_edge() const { return marked_.value_or(EdgeLabel{0}); }
  // Throws ValidationError if the edge is unknown.
  KnotDiagram with_marked_edge(std::string_view name) const;

  DiagramDraft to_draft() const;

 private:
  KnotDiagram() = default;

  std::vector<Crossing> crossings_;
  std::vector<std::string> names_;
  std::vector<bool> loop_;
  std::optional<EdgeLabel> marked_;
  int n_black_ = 0;
  int n_white_ = 0;
  std::size_t components_ = 0;
};

// Closure of a braid on `strands` strands. The word is a comma and/or
// whitespace separated list of nonzero integers; letter i > 0 is the positive
// generator sigma_i, -i its inverse. Edges are numbered 1, 2, ... in
// traversal order. Throws ParseError.
KnotDiagram parse_braid_word(std::string_view text, int strands);

// Planar diagram code: records "X(e1,e2,e3,e4)+" or "X(e1,e2,e3,e4)-", plus
// "O(e)" for a crossingless loop, separated by whitespace or commas; '#'
// starts a comment. Labels are integers or identifiers. Throws ParseError or
// ValidationError.
KnotDiagram parse_pd_code(std::string_view text);
DiagramDraft parse_pd_draft(std::string_view text);

// PD text accepted by parse_pd_code.
std::string to_pd_text(const KnotDiagram& diagram);

}  // namespace khova
