#include "khova/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace khova {

namespace {

Json coeff_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return c.convert_to<std::int64_t>();
  return c.str();
}

BigInt coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("bad coefficient in term array: " + j.dump());
}

int exponent_from_json(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("bad exponent in term array: " + j.dump());
  return j.get<int>();
}

std::string cycle_text(const Cycle& c, const KnotDiagram& d) {
  std::string out;
  const bool short_names = std::all_of(c.edges.begin(), c.edges.end(),
                                       [&](EdgeLabel e) { return d.edge_name(e).size() == 1; });
  for (std::size_t k = 0; k < c.edges.size(); ++k) {
    if (k > 0 && !short_names) out += ",";
    out += d.edge_name(c.edges[k]);
  }
  return out;
}

}  // namespace

Json to_json(const LaurentPoly1& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, coeff_json(c)}));
  return out;
}

Json to_json(const LaurentPoly2& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.q, e.t, coeff_json(c)}));
  return out;
}

LaurentPoly1 laurent1_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("term array expected");
  LaurentPoly1 out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw ParseError("bad term " + t.dump());
    out.add_term(exponent_from_json(t[0]), coeff_from_json(t[1]));
  }
  return out;
}

LaurentPoly2 laurent2_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("term array expected");
  LaurentPoly2 out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ParseError("bad term " + t.dump());
    out.add_term({exponent_from_json(t[0]), exponent_from_json(t[1])}, coeff_from_json(t[2]));
  }
  return out;
}

Json to_json(const HomologyTable& table) {
  Json out = Json::array();
  for (std::size_t i = 0; i < table.dims.size(); ++i) out.push_back(Json::array({i, to_json(table.dims[i])}));
  return out;
}

Json hypercube_to_json(const Hypercube& cube, const KnotDiagram& diagram) {
  Json vertices = Json::array();
  for (std::uint64_t m = 0; m < cube.vertices.size(); ++m) {
    Json cycles = Json::array();
    for (const auto& c : cube.vertices[m].cycles) {
      Json edges = Json::array();
      for (EdgeLabel e : c.edges) edges.push_back(diagram.edge_name(e));
      cycles.push_back(edges);
    }
    vertices.push_back({{"label", ResolutionLabel(m, cube.crossings).to_string()},
                        {"degree", cube.degree(m)},
                        {"cycles", cycles}});
  }
  Json edges = Json::array();
  for (const auto& e : cube.edges) {
    edges.push_back({{"label", e.label.to_string()},
                     {"position", e.position},
                     {"sign", e.sign},
                     {"kind", e.change.kind == EdgeKind::Merge ? "merge" : "split"},
                     {"from", e.change.from},
                     {"to", e.change.to}});
  }
  return {{"crossings", cube.crossings},
          {"initial", cube.initial.to_string()},
          {"vertices", vertices},
          {"edges", edges}};
}

std::string hypercube_to_text(const Hypercube& cube, const KnotDiagram& diagram) {
  std::ostringstream out;
  out << "initial " << cube.initial.to_string() << "\n";
  for (std::uint64_t m = 0; m < cube.vertices.size(); ++m) {
    out << ResolutionLabel(m, cube.crossings).to_string() << " t^" << cube.degree(m) << ":";
    for (const auto& c : cube.vertices[m].cycles) out << " " << cycle_text(c, diagram);
    out << "\n";
  }
  for (const auto& e : cube.edges) {
    const auto& from = cube.vertices[e.source].cycles;
    const auto& to = cube.vertices[e.target].cycles;
    out << e.label.to_string() << " " << (e.sign > 0 ? "+" : "-") << " "
        << (e.change.kind == EdgeKind::Merge ? "merge" : "split") << " ";
    for (std::size_t k = 0; k < e.change.from.size(); ++k)
      out << (k ? "," : "") << cycle_text(from[static_cast<std::size_t>(e.change.from[k])], diagram);
    out << " -> ";
    for (std::size_t k = 0; k < e.change.to.size(); ++k)
      out << (k ? "," : "") << cycle_text(to[static_cast<std::size_t>(e.change.to[k])], diagram);
    out << "\n";
  }
  return out.str();
}

Json complex_to_json(const ChainComplex& complex, const KnotDiagram& diagram) {
  Json groups = Json::array();
  for (const auto& g : complex.groups) {
    Json blocks = Json::array();
    for (const auto& [m, block] : g.blocks) blocks.push_back(Json::array({m, block.size()}));
    groups.push_back({{"degree", g.degree}, {"qdim", to_json(qdim(g))}, {"blocks", blocks}});
  }
  Json diffs = Json::array();
  for (const auto& [im, d] : complex.differentials) {
    diffs.push_back({{"degree", im.first},
                     {"qdeg", im.second},
                     {"rows", d.rows()},
                     {"cols", d.cols()},
                     {"nonzeros", d.nonzeros()}});
  }
  Json out = {{"reduced", complex.reduction.reduced()},
              {"groups", groups},
              {"differentials", diffs},
              {"nilpotent", check_nilpotent(complex).empty()}};
  out["marked"] = complex.reduction.marked ? Json(diagram.edge_name(*complex.reduction.marked)) : Json(nullptr);
  return out;
}

std::string complex_to_text(const ChainComplex& complex, const KnotDiagram& diagram) {
  std::ostringstream out;
  if (complex.reduction.marked)
    out << "reduced at edge " << diagram.edge_name(*complex.reduction.marked) << "\n";
  else
    out << "unreduced\n";
  for (const auto& g : complex.groups) out << "C_" << g.degree << ": " << to_string(qdim(g)) << "\n";
  for (const auto& [im, d] : complex.differentials) {
    out << "d_" << im.first << " q^" << im.second << ": " << d.rows() << "x" << d.cols() << ", " << d.nonzeros()
        << " nonzeros\n";
  }
  const auto fails = check_nilpotent(complex);
  out << "d^2 = 0: " << (fails.empty() ? "yes" : "NO") << "\n";
  return out.str();
}

}  // namespace khova
