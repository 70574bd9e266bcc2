#include "khova/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace khova {

ResolutionLabel::ResolutionLabel(std::uint64_t mask, std::size_t size) : mask_(mask), size_(size) {
  if (size > 63) throw ResourceError("resolution labels are limited to 63 crossings");
  if (size < 64 && (mask >> size) != 0) throw Error("argument", "resolution mask exceeds label length");
}

ResolutionLabel ResolutionLabel::parse(std::string_view text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::uint64_t mask = 0;
  std::size_t n = 0;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (ch != '0' && ch != '1') throw ParseError("bad resolution label character '" + std::string(1, ch) + "'");
    if (n >= 63) throw ParseError("resolution label too long");
    if (ch == '1') mask |= std::uint64_t{1} << n;
    ++n;
  }
  return {mask, n};
}

int ResolutionLabel::distance(const ResolutionLabel& o) const { return std::popcount(mask_ ^ o.mask_); }

std::string ResolutionLabel::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < size_; ++k) out.push_back(bit(k) ? '1' : '0');
  return out + "]";
}

StarLabel StarLabel::parse(std::string_view text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::uint64_t mask = 0;
  std::size_t n = 0, stars = 0, star = 0;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (n >= 63) throw ParseError("star label too long");
    if (ch == '*') {
      ++stars;
      star = n;
    } else if (ch == '1') {
      mask |= std::uint64_t{1} << n;
    } else if (ch != '0') {
      throw ParseError("bad star label character '" + std::string(1, ch) + "'");
    }
    ++n;
  }
  if (stars != 1) throw ParseError("star label needs exactly one '*', found " + std::to_string(stars));
  return {ResolutionLabel(mask, n), star};
}

std::string StarLabel::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < base.size(); ++k) out.push_back(k == star ? '*' : (base.bit(k) ? '1' : '0'));
  return out + "]";
}

int edge_sign(const StarLabel& label) {
  const std::uint64_t left = label.base.mask() & ((std::uint64_t{1} << label.star) - 1);
  return std::popcount(left) % 2 == 0 ? 1 : -1;
}

bool Cycle::contains(EdgeLabel e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }

std::vector<std::size_t> CycleSet::lengths() const {
  std::vector<std::size_t> out;
  for (const auto& c : cycles) out.push_back(c.length());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Slot {
  std::size_t crossing;
  int position;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Incidence {
  std::vector<std::vector<Slot>> slots;  // edge id -> its two slots, head first
};

Incidence incidence(const KnotDiagram& d) {
  Incidence inc;
  inc.slots.resize(d.edge_count());
  for (std::size_t k = 0; k < d.crossing_count(); ++k) {
    const Crossing& c = d.crossings()[k];
    const int second_in = c.second_strand_enters_at_1 ? 1 : 3;
    for (int p = 0; p < 4; ++p) {
      auto& v = inc.slots[static_cast<std::size_t>(c.pd[p].id)];
      const bool head = p == 0 || p == second_in;
      if (head) {
        v.insert(v.begin(), Slot{k, p});
      } else {
        v.push_back(Slot{k, p});
      }
    }
  }
  return inc;
}

CycleSet smooth_with(const KnotDiagram& d, const Incidence& inc, const ResolutionLabel& label) {
  CycleSet out;
  const std::size_t n_edges = d.edge_count();
  out.cycle_of_edge.assign(n_edges, -1);
  for (std::size_t s = 0; s < n_edges; ++s) {
    if (out.cycle_of_edge[s] != -1) continue;
    const int id = static_cast<int>(out.cycles.size());
    Cycle cycle;
    const EdgeLabel start{static_cast<int>(s)};
    EdgeLabel e = start;
    if (!d.is_loop(start)) {
      Slot exit = inc.slots[s][0];
      while (true) {
        cycle.edges.push_back(e);
        out.cycle_of_edge[static_cast<std::size_t>(e.id)] = id;
        const Crossing& c = d.crossings()[exit.crossing];
        const auto pairs = c.smoothing(label.bit(exit.crossing) ? 1 : 0);
        int partner = -1;
        for (const auto& [a, b] : pairs) {
          if (a == exit.position) partner = b;
          if (b == exit.position) partner = a;
        }
        const Slot entry{exit.crossing, partner};
        e = c.pd[static_cast<std::size_t>(partner)];
        if (e == start) break;
        const auto& sl = inc.slots[static_cast<std::size_t>(e.id)];
        exit = sl[0] == entry ? sl[1] : sl[0];
      }
    } else {
      cycle.edges.push_back(e);
      out.cycle_of_edge[s] = id;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

CycleSet smooth(const KnotDiagram& diagram, const ResolutionLabel& label) {
  if (label.size() != diagram.crossing_count())
    throw Error("argument", "resolution label " + label.to_string() + " does not match " +
                                std::to_string(diagram.crossing_count()) + " crossings");
  return smooth_with(diagram, incidence(diagram), label);
}

EdgeChange classify_edge(const CycleSet& source, const CycleSet& target) {
  const std::size_t ns = source.nu(), nt = target.nu();
  if (ns != nt + 1 && nt != ns + 1)
    throw Error("argument", "resolutions with " + std::to_string(ns) + " and " + std::to_string(nt) +
                                " cycles are not one merge or split apart");
  EdgeChange change;
  change.kind = ns > nt ? EdgeKind::Merge : EdgeKind::Split;
  std::vector<bool> matched(nt, false);
  for (std::size_t i = 0; i < ns; ++i) {
    const Cycle& c = source.cycles[i];
    const int j = target.cycle_containing(c.edges.front());
    const Cycle& t = target.cycles[static_cast<std::size_t>(j)];
    bool same = t.length() == c.length();
    for (std::size_t k = 0; same && k < c.length(); ++k) same = target.cycle_containing(c.edges[k]) == j;
    if (same) {
      change.unchanged.emplace_back(static_cast<int>(i), j);
      matched[static_cast<std::size_t>(j)] = true;
    } else {
      change.from.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t j = 0; j < nt; ++j)
    if (!matched[j]) change.to.push_back(static_cast<int>(j));
  const bool ok = change.kind == EdgeKind::Merge ? (change.from.size() == 2 && change.to.size() == 1)
                                                 : (change.from.size() == 1 && change.to.size() == 2);
  if (!ok) throw Error("argument", "resolutions differ by more than one merge or split");
  return change;
}

int Hypercube::degree(std::uint64_t mask) const { return std::popcount(mask ^ initial.mask()); }

Hypercube build_hypercube(const KnotDiagram& diagram, std::size_t max_crossings) {
  const std::size_t n = diagram.crossing_count();
  if (n > max_crossings)
    throw ResourceError("diagram has " + std::to_string(n) + " crossings, limit is " + std::to_string(max_crossings));
  if (n > 30) throw ResourceError("diagram has " + std::to_string(n) + " crossings, hard limit is 30");

  Hypercube cube;
  cube.crossings = n;
  std::uint64_t initial = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (!diagram.crossings()[k].is_black()) initial |= std::uint64_t{1} << k;
  cube.initial = ResolutionLabel(initial, n);

  const Incidence inc = incidence(diagram);
  const std::uint64_t count = std::uint64_t{1} << n;
  cube.vertices.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) cube.vertices.push_back(smooth_with(diagram, inc, ResolutionLabel(m, n)));

  cube.edges.reserve(n * (count / 2));
  for (std::uint64_t m = 0; m < count; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      if ((m >> k) & 1u) continue;
      HypercubeEdge edge;
      edge.label = StarLabel{ResolutionLabel(m, n), k};
      edge.position = k;
      edge.sign = edge_sign(edge.label);
      edge.source = m;
      edge.target = m | (std::uint64_t{1} << k);
      try {
        edge.change = classify_edge(cube.vertices[edge.source], cube.vertices[edge.target]);
      } catch (const Error& e) {
        throw InternalError("flip " + edge.label.to_string() + " is neither a merge nor a split: " + e.what());
      }
      cube.edges.push_back(std::move(edge));
    }
  }
  return cube;
}

std::vector<ExtendedJonesTerm> extended_jones(const Hypercube& cube) {
  std::map<std::pair<int, std::vector<std::size_t>>, std::size_t> agg;
  for (std::uint64_t m = 0; m < cube.vertices.size(); ++m) ++agg[{cube.degree(m), cube.vertices[m].lengths()}];
  std::vector<ExtendedJonesTerm> out;
  for (const auto& [key, mult] : agg) out.push_back({key.first, key.second, mult});
  return out;
}

namespace {

LaurentPoly1 prefactor(int n_black, int n_white) {
  LaurentPoly1 p = q_pow(n_black - 2 * n_white);
  return n_white % 2 == 0 ? p : -p;
}

LaurentPoly1 minus_q_pow(int t) {
  LaurentPoly1 p = q_pow(t);
  return t % 2 == 0 ? p : -p;
}

}  // namespace

LaurentPoly1 specialize_extended_jones(const std::vector<ExtendedJonesTerm>& terms, int n_black, int n_white) {
  const LaurentPoly1 d = quantum_d();
  LaurentPoly1 sum;
  for (const auto& term : terms)
    sum += minus_q_pow(term.t_power) * d.pow(static_cast<unsigned>(term.lengths.size())) * BigInt(term.multiplicity);
  return prefactor(n_black, n_white) * sum;
}

LaurentPoly1 state_sum_jones(const Hypercube& cube, const KnotDiagram& diagram) {
  // Collect powers of D per distance first.
  std::map<std::pair<int, std::size_t>, BigInt> count;
  for (std::uint64_t m = 0; m < cube.vertices.size(); ++m) count[{cube.degree(m), cube.vertices[m].nu()}] += 1;
  const LaurentPoly1 d = quantum_d();
  LaurentPoly1 sum;
  for (const auto& [key, c] : count) sum += minus_q_pow(key.first) * d.pow(static_cast<unsigned>(key.second)) * c;
  return prefactor(diagram.n_black(), diagram.n_white()) * sum;
}

LaurentPoly1 reduced_jones(const LaurentPoly1& jones) { return div_exact(jones, quantum_d()); }

}  // namespace khova
