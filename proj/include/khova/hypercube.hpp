#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "khova/diagram.hpp"
#include "khova/laurent.hpp"

namespace khova {

inline constexpr std::size_t kDefaultMaxCrossings = 20;

// Binary word with one bit per crossing; crossing 0 is written first.
class ResolutionLabel {
 public:
  ResolutionLabel() = default;
  ResolutionLabel(std::uint64_t mask, std::size_t size);

  // "[0101]" or "0101". Throws ParseError.
  static ResolutionLabel parse(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool bit(std::size_t k) const { return ((mask_ >> k) & 1u) != 0; }
  ResolutionLabel flipped(std::size_t k) const { return {mask_ ^ (std::uint64_t{1} << k), size_}; }
  int distance(const ResolutionLabel& o) const;
  std::string to_string() const;

  friend bool operator==(const ResolutionLabel&, const ResolutionLabel&) = default;

 private:
  std::uint64_t mask_ = 0;
  std::size_t size_ = 0;
};

// Resolution label with exactly one position replaced by '*'.
struct StarLabel {
  ResolutionLabel base;  // star position holds 0
  std::size_t star = 0;

  // "[1,*,1]", "[1*1]" or "1*1". Throws ParseError unless there is exactly
  // one star.
  static StarLabel parse(std::string_view text);
  std::string to_string() const;
};

// (-1)^(number of 1s left of the star).
int edge_sign(const StarLabel& label);

// Closed loop of diagram edges, starting at its smallest edge and following
// the strand direction of that edge.
struct Cycle {
  std::vector<EdgeLabel> edges;
  std::size_t length() const noexcept { return edges.size(); }
  bool contains(EdgeLabel e) const;
};

// Cycles of one resolution, sorted by smallest edge.
struct CycleSet {
  std::vector<Cycle> cycles;
  std::vector<int> cycle_of_edge;  // edge id -> cycle index

  std::size_t nu() const noexcept { return cycles.size(); }
  int cycle_containing(EdgeLabel e) const { return cycle_of_edge.at(static_cast<std::size_t>(e.id)); }
  std::vector<std::size_t> lengths() const;  // sorted ascending
};

CycleSet smooth(const KnotDiagram& diagram, const ResolutionLabel& label);

enum class EdgeKind { Merge, Split };

// Difference between two resolutions one flip apart. Cycle ids refer to the
// source and target CycleSets respectively.
struct EdgeChange {
  EdgeKind kind = EdgeKind::Merge;
  std::vector<int> from;  // two cycles for a merge, one for a split
  std::vector<int> to;    // one cycle for a merge, two for a split
  std::vector<std::pair<int, int>> unchanged;  // source id -> target id
};

// Throws Error("argument") unless the cycle counts differ by exactly one and
// every other cycle is carried over unchanged.
EdgeChange classify_edge(const CycleSet& source, const CycleSet& target);

// Cube edge stored in the geometric direction 0 -> 1 at `position`.
struct HypercubeEdge {
  StarLabel label;
  std::size_t position = 0;
  int sign = 1;
  std::uint64_t source = 0;  // vertex mask with 0 at position
  std::uint64_t target = 0;  // vertex mask with 1 at position
  EdgeChange change;
};

struct Hypercube {
  std::size_t crossings = 0;
  std::vector<CycleSet> vertices;  // indexed by resolution mask
  std::vector<HypercubeEdge> edges;
  ResolutionLabel initial;  // 0 at black, 1 at white crossings

  const CycleSet& vertex(const ResolutionLabel& r) const { return vertices.at(r.mask()); }
  // Hamming distance of the vertex from the initial resolution.
  int degree(std::uint64_t mask) const;
};

// Throws ResourceError beyond `max_crossings` and InternalError if a flip
// fails to merge or split (non-planar input).
Hypercube build_hypercube(const KnotDiagram& diagram, std::size_t max_crossings = kDefaultMaxCrossings);

struct ExtendedJonesTerm {
  int t_power = 0;
  std::vector<std::size_t> lengths;  // sorted ascending
  std::size_t multiplicity = 0;
  friend bool operator==(const ExtendedJonesTerm&, const ExtendedJonesTerm&) = default;
};

// Resolutions aggregated by (distance from the initial vertex, cycle lengths),
// sorted by t-power then lengths.
std::vector<ExtendedJonesTerm> extended_jones(const Hypercube& cube);

// Lengths -> D, t -> -q, times (-1)^n_white q^(n_black - 2 n_white).
LaurentPoly1 specialize_extended_jones(const std::vector<ExtendedJonesTerm>& terms, int n_black, int n_white);

// Unreduced Jones polynomial from the state sum over all resolutions.
LaurentPoly1 state_sum_jones(const Hypercube& cube, const KnotDiagram& diagram);

// Quotient by D = q + 1/q. Throws DivisionError when not divisible.
LaurentPoly1 reduced_jones(const LaurentPoly1& jones);

}  // namespace khova
