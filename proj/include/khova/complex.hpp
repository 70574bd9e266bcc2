#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "khova/hypercube.hpp"
#include "khova/int_matrix.hpp"
#include "khova/laurent.hpp"

namespace khova {

// Basis vectors of the two-dimensional space attached to a cycle: minus has
// q-degree -1, plus has q-degree +1.
enum class Tag { Minus, Plus };

enum class MergeRole { None, FirstReduced };
enum class SplitRole { None, SourceReduced };

// Multiplication. With FirstReduced, the first factor and the product live on
// the reduced cycle, where minus is quotiented out. Throws Error("argument")
// when a reduced factor carries minus.
std::optional<Tag> frobenius_merge(Tag a, Tag b, MergeRole role = MergeRole::None);

// Comultiplication. With SourceReduced, the source and the first output factor
// live on the reduced cycle. Throws Error("argument") when the reduced source
// carries minus.
std::vector<std::pair<Tag, Tag>> frobenius_split(Tag t, SplitRole role = SplitRole::None);

struct ChainBasisElement {
  std::uint64_t resolution = 0;
  std::uint32_t plus_mask = 0;  // bit j set: cycle j carries plus
  int qdeg = 0;

  Tag tag(std::size_t cycle) const { return ((plus_mask >> cycle) & 1u) ? Tag::Plus : Tag::Minus; }
};

// C_i split into q-degree blocks. Resolutions are taken in increasing mask
// order; within a resolution the tags are enumerated with cycle 0 as the most
// significant digit and minus before plus. A reduced cycle always carries plus.
struct GradedChainGroup {
  int degree = 0;
  std::map<int, std::vector<ChainBasisElement>> blocks;

  std::size_t dimension() const;
  std::size_t block_size(int qdeg) const;
};

LaurentPoly1 qdim(const GradedChainGroup& group);

// Marked edge for the reduced theory; nullopt for the unreduced one.
struct Reduction {
  std::optional<EdgeLabel> marked;
  bool reduced() const noexcept { return marked.has_value(); }
};

std::vector<GradedChainGroup> chain_groups(const Hypercube& cube, Reduction reduction);

struct ChainComplex {
  std::vector<GradedChainGroup> groups;  // C_0 .. C_n
  // (i, m) -> matrix from block m of C_i to block m-1 of C_{i+1}; rows index
  // the target block, columns the source block. Empty blocks are omitted.
  std::map<std::pair<int, int>, IntMatrix> differentials;
  Reduction reduction;

  const IntMatrix* differential(int i, int m) const;
};

// Throws InternalError if an edge map fails to lower q-degree by one or hits
// a reduced-minus element.
ChainComplex build_differentials(const Hypercube& cube, Reduction reduction);

// (i, m) of every block where d_{i+1} d_i is nonzero.
std::vector<std::pair<int, int>> check_nilpotent(const ChainComplex& complex);

}  // namespace khova
