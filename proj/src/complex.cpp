#include "khova/complex.hpp"

#include <bit>
#include <unordered_map>

namespace khova {

std::optional<Tag> frobenius_merge(Tag a, Tag b, MergeRole role) {
  if (role == MergeRole::FirstReduced) {
    if (a == Tag::Minus) throw Error("argument", "reduced factor cannot carry minus");
    return b == Tag::Plus ? std::optional<Tag>(Tag::Plus) : std::nullopt;
  }
  if (a == Tag::Plus && b == Tag::Plus) return Tag::Plus;
  if (a == Tag::Minus && b == Tag::Minus) return std::nullopt;
  return Tag::Minus;
}

std::vector<std::pair<Tag, Tag>> frobenius_split(Tag t, SplitRole role) {
  if (role == SplitRole::SourceReduced) {
    if (t == Tag::Minus) throw Error("argument", "reduced source cannot carry minus");
    return {{Tag::Plus, Tag::Minus}};
  }
  if (t == Tag::Plus) return {{Tag::Plus, Tag::Minus}, {Tag::Minus, Tag::Plus}};
  return {{Tag::Minus, Tag::Minus}};
}

std::size_t GradedChainGroup::dimension() const {
  std::size_t n = 0;
  for (const auto& [m, block] : blocks) n += block.size();
  return n;
}

std::size_t GradedChainGroup::block_size(int qdeg) const {
  auto it = blocks.find(qdeg);
  return it == blocks.end() ? 0 : it->second.size();
}

LaurentPoly1 qdim(const GradedChainGroup& group) {
  LaurentPoly1 out;
  for (const auto& [m, block] : group.blocks) out.add_term(m, static_cast<unsigned long>(block.size()));
  return out;
}

namespace {

int marked_cycle(const Hypercube& cube, std::uint64_t mask, const Reduction& reduction) {
  return reduction.reduced() ? cube.vertices[mask].cycle_containing(*reduction.marked) : -1;
}

}  // namespace

std::vector<GradedChainGroup> chain_groups(const Hypercube& cube, Reduction reduction) {
  if (reduction.reduced()) {
    const auto id = static_cast<std::size_t>(reduction.marked->id);
    if (cube.vertices.empty() || id >= cube.vertices.front().cycle_of_edge.size())
      throw Error("argument", "marked edge is not an edge of the diagram");
  }
  std::vector<GradedChainGroup> groups(cube.crossings + 1);
  for (std::size_t i = 0; i < groups.size(); ++i) groups[i].degree = static_cast<int>(i);

  for (std::uint64_t m = 0; m < cube.vertices.size(); ++m) {
    const CycleSet& cs = cube.vertices[m];
    const std::size_t nu = cs.nu();
    if (nu > 31) throw ResourceError("resolution with more than 31 cycles");
    const int reduced = marked_cycle(cube, m, reduction);
    std::vector<std::size_t> free_cycles;
    for (std::size_t j = 0; j < nu; ++j)
      if (static_cast<int>(j) != reduced) free_cycles.push_back(j);
    const std::size_t f = free_cycles.size();
    auto& group = groups[static_cast<std::size_t>(cube.degree(m))];
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << f); ++x) {
      std::uint32_t plus = reduced >= 0 ? (std::uint32_t{1} << reduced) : 0u;
      for (std::size_t j = 0; j < f; ++j)
        if ((x >> (f - 1 - j)) & 1u) plus |= std::uint32_t{1} << free_cycles[j];
      const int qdeg = 2 * std::popcount(plus) - static_cast<int>(nu);
      group.blocks[qdeg].push_back({m, plus, qdeg});
    }
  }
  return groups;
}

const IntMatrix* ChainComplex::differential(int i, int m) const {
  auto it = differentials.find({i, m});
  return it == differentials.end() ? nullptr : &it->second;
}

namespace {

struct Position {
  int qdeg;
  std::size_t index;
};

std::uint64_t key(std::uint64_t resolution, std::uint32_t plus) { return (resolution << 32) | plus; }

void set_tag(std::uint32_t& plus, int cycle, Tag t) {
  const std::uint32_t bit = std::uint32_t{1} << cycle;
  plus = t == Tag::Plus ? (plus | bit) : (plus & ~bit);
}

// Edge change read in the direction of the differential.
EdgeChange reversed(const EdgeChange& c) {
  EdgeChange r;
  r.kind = c.kind == EdgeKind::Merge ? EdgeKind::Split : EdgeKind::Merge;
  r.from = c.to;
  r.to = c.from;
  for (const auto& [a, b] : c.unchanged) r.unchanged.emplace_back(b, a);
  return r;
}

}  // namespace

ChainComplex build_differentials(const Hypercube& cube, Reduction reduction) {
  ChainComplex cx;
  cx.reduction = reduction;
  cx.groups = chain_groups(cube, reduction);

  std::unordered_map<std::uint64_t, Position> where;
  std::unordered_map<std::uint64_t, std::vector<const ChainBasisElement*>> by_resolution;
  for (const auto& g : cx.groups) {
    for (const auto& [m, block] : g.blocks) {
      for (std::size_t idx = 0; idx < block.size(); ++idx) {
        where.emplace(key(block[idx].resolution, block[idx].plus_mask), Position{m, idx});
        by_resolution[block[idx].resolution].push_back(&block[idx]);
      }
    }
  }

  auto matrix = [&](int i, int m) -> IntMatrix& {
    auto it = cx.differentials.find({i, m});
    if (it != cx.differentials.end()) return it->second;
    const std::size_t rows = cx.groups[static_cast<std::size_t>(i) + 1].block_size(m - 1);
    const std::size_t cols = cx.groups[static_cast<std::size_t>(i)].block_size(m);
    return cx.differentials.emplace(std::pair{i, m}, IntMatrix(rows, cols)).first->second;
  };

  for (const HypercubeEdge& edge : cube.edges) {
    const bool forward = !cube.initial.bit(edge.position);
    const std::uint64_t src = forward ? edge.source : edge.target;
    const std::uint64_t tgt = forward ? edge.target : edge.source;
    const EdgeChange change = forward ? edge.change : reversed(edge.change);
    const int i = cube.degree(src);
    const int src_marked = marked_cycle(cube, src, reduction);
    const int tgt_marked = marked_cycle(cube, tgt, reduction);

    for (const ChainBasisElement* el : by_resolution[src]) {
      std::uint32_t base = 0;
      for (const auto& [a, b] : change.unchanged) set_tag(base, b, el->tag(static_cast<std::size_t>(a)));

      std::vector<std::uint32_t> images;
      if (change.kind == EdgeKind::Merge) {
        int a = change.from[0], b = change.from[1];
        MergeRole role = MergeRole::None;
        if (b == src_marked) std::swap(a, b);
        if (a == src_marked) role = MergeRole::FirstReduced;
        const auto t = frobenius_merge(el->tag(static_cast<std::size_t>(a)), el->tag(static_cast<std::size_t>(b)), role);
        if (t) {
          std::uint32_t plus = base;
          set_tag(plus, change.to[0], *t);
          images.push_back(plus);
        }
      } else {
        const int a = change.from[0];
        int b = change.to[0], c = change.to[1];
        SplitRole role = SplitRole::None;
        if (a == src_marked) {
          role = SplitRole::SourceReduced;
          if (c == tgt_marked) std::swap(b, c);
        }
        for (const auto& [tb, tc] : frobenius_split(el->tag(static_cast<std::size_t>(a)), role)) {
          std::uint32_t plus = base;
          set_tag(plus, b, tb);
          set_tag(plus, c, tc);
          images.push_back(plus);
        }
      }

      const Position from = where.at(key(src, el->plus_mask));
      for (std::uint32_t plus : images) {
        auto it = where.find(key(tgt, plus));
        if (it == where.end())
          throw InternalError("edge " + edge.label.to_string() + " maps onto a reduced-minus element");
        if (it->second.qdeg != from.qdeg - 1)
          throw InternalError("edge " + edge.label.to_string() + " does not lower the q-degree by one");
        matrix(i, from.qdeg).add(it->second.index, from.index, edge.sign);
      }
    }
  }
  return cx;
}

std::vector<std::pair<int, int>> check_nilpotent(const ChainComplex& complex) {
  std::vector<std::pair<int, int>> failures;
  for (const auto& [im, d] : complex.differentials) {
    const IntMatrix* next = complex.differential(im.first + 1, im.second - 1);
    if (next == nullptr) continue;
    if (!((*next) * d).is_zero()) failures.push_back(im);
  }
  return failures;
}

}  // namespace khova
