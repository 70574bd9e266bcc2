#include "khova/knot_table.hpp"

#include <atomic>
#include <fstream>
#include <set>
#include <thread>

namespace khova {

std::vector<KnotTableEntry> parse_knot_table(std::istream& in) {
  std::vector<KnotTableEntry> entries;
  std::set<std::string> names;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "knot table line " + std::to_string(lineno);
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw Error("table", where + ": malformed JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j["name"].is_string() || !j.contains("pd") || !j["pd"].is_string())
      throw Error("table", where + ": record needs string fields \"name\" and \"pd\"");
    const std::string name = j["name"].get<std::string>();
    if (!names.insert(name).second) throw Error("table", where + ": duplicate record name " + name);
    const std::string pd = j["pd"].get<std::string>();
    try {
      KnotDiagram diagram = parse_pd_code(pd);
      std::optional<LaurentPoly1> jones;
      if (j.contains("jones") && !j["jones"].is_null()) {
        if (!j["jones"].is_string()) throw ParseError("field \"jones\" must be polynomial text");
        jones = parse_laurent1(j["jones"].get<std::string>());
      }
      entries.push_back({name, pd, std::move(diagram), std::move(jones)});
    } catch (const Error& e) {
      throw Error("table", where + ": record " + name + ": " + e.what());
    }
  }
  return entries;
}

std::vector<KnotTableEntry> load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open knot table " + path);
  return parse_knot_table(in);
}

namespace {

DiagramReport verify_one(const KnotTableEntry& entry, const VerifyOptions& options) {
  ComputeOptions compute = options.compute;
  compute.flavor = Flavor::Both;
  DiagramReport report;
  try {
    report = cmd_compute(entry.diagram, compute, entry.name);
  } catch (const Error& e) {
    report.name = entry.name;
    report.pd = entry.pd;
    report.checks.push_back({"pipeline", false, std::string(e.kind()) + ": " + e.what()});
    return report;
  }

  if (entry.expected_jones) {
    const LaurentPoly1& want = *entry.expected_jones;
    const FlavorResult* u = report.flavor(false);
    Check c{"expected_jones", u && evaluate_T(u->superpolynomial.value, -1) == want, ""};
    if (!c.passed) c.detail = "P(T=-1) = " + to_string(report.jones) + ", table says " + to_string(want);
    report.checks.push_back(c);
    const FlavorResult* r = report.flavor(true);
    Check cr{"expected_reduced_jones", false, ""};
    try {
      cr.passed = r && evaluate_T(r->superpolynomial.value, -1) == reduced_jones(want);
    } catch (const DivisionError&) {
      cr.detail = "table value is not divisible by q + 1/q";
    }
    report.checks.push_back(cr);
  }

  // Reduced superpolynomial must not depend on the marked edge.
  const FlavorResult* base = report.flavor(true);
  const std::size_t n = entry.diagram.edge_count();
  Check inv{"marked_edge_invariance", true, ""};
  std::set<int> tried{base ? entry.diagram.find_edge(*base->marked)->id : 0};
  for (std::size_t s = 1; s <= options.marked_samples && base; ++s) {
    const int id = static_cast<int>(s * n / (options.marked_samples + 1));
    if (!tried.insert(id).second) continue;
    ComputeOptions alt = compute;
    alt.flavor = Flavor::Reduced;
    alt.marked = entry.diagram.edge_name(EdgeLabel{id});
    alt.timing = false;
    try {
      const DiagramReport other = cmd_compute(entry.diagram, alt, entry.name);
      if (other.flavors.front().superpolynomial.value != base->superpolynomial.value) {
        inv.passed = false;
        inv.detail += "edge " + *alt.marked + " gives " + to_string(other.flavors.front().superpolynomial.value) + "; ";
      }
    } catch (const Error& e) {
      inv.passed = false;
      inv.detail += "edge " + *alt.marked + ": " + e.what() + "; ";
    }
  }
  if (tried.size() < 2 && inv.passed) inv.detail = "single edge";
  report.checks.push_back(inv);
  return report;
}

}  // namespace

RunReport batch_verify(const std::vector<KnotTableEntry>& entries, const VerifyOptions& options) {
  RunReport run;
  run.diagrams.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < entries.size(); k = next++) run.diagrams[k] = verify_one(entries[k], options);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(entries.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return run;
}

}  // namespace khova
