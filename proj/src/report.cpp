#include "khova/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace khova {

bool DiagramReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const FlavorResult* DiagramReport::flavor(bool reduced) const {
  for (const auto& f : flavors)
    if (f.reduced == reduced) return &f;
  return nullptr;
}

bool RunReport::ok() const {
  return std::all_of(diagrams.begin(), diagrams.end(), [](const DiagramReport& d) { return d.ok(); });
}

std::size_t RunReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(diagrams.begin(), diagrams.end(), [](const DiagramReport& d) { return d.ok(); }));
}

namespace {

std::string flavor_name(bool reduced) { return reduced ? "reduced" : "unreduced"; }

Check equal_check(std::string name, const LaurentPoly1& got, const LaurentPoly1& want) {
  Check c{std::move(name), got == want, ""};
  if (!c.passed) c.detail = "got " + to_string(got) + ", expected " + to_string(want);
  return c;
}

}  // namespace

DiagramReport cmd_compute(const KnotDiagram& diagram, const ComputeOptions& options, std::string name) {
  const auto start = std::chrono::steady_clock::now();
  DiagramReport report;
  report.name = std::move(name);
  report.pd = to_pd_text(diagram);
  report.crossings = diagram.crossing_count();
  report.n_black = diagram.n_black();
  report.n_white = diagram.n_white();
  report.components = diagram.component_count();

  const Hypercube cube = build_hypercube(diagram, options.max_crossings);
  report.jones = state_sum_jones(cube, diagram);
  report.checks.push_back(equal_check("extended_jones",
                                      specialize_extended_jones(extended_jones(cube), diagram.n_black(), diagram.n_white()),
                                      report.jones));
  try {
    report.reduced_jones = khova::reduced_jones(report.jones);
    report.checks.push_back({"jones_divisible", true, ""});
  } catch (const DivisionError& e) {
    report.checks.push_back({"jones_divisible", false, e.what()});
  }

  std::vector<bool> wanted;
  if (options.flavor != Flavor::Reduced) wanted.push_back(false);
  if (options.flavor != Flavor::Unreduced) wanted.push_back(true);

  for (bool reduced : wanted) {
    const std::string tag = "[" + flavor_name(reduced) + "]";
    Reduction reduction;
    FlavorResult result;
    result.reduced = reduced;
    if (reduced) {
      if (options.marked) {
        const auto e = diagram.find_edge(*options.marked);
        if (!e) throw ValidationError("invalid diagram: marked edge unknown: " + *options.marked);
        reduction.marked = e;
      } else {
        reduction.marked = diagram.effective_marked_edge();
      }
      result.marked = diagram.edge_name(*reduction.marked);
    }

    const ChainComplex cx = build_differentials(cube, reduction);
    const auto failures = check_nilpotent(cx);
    Check nil{"d_squared_zero" + tag, failures.empty(), ""};
    for (const auto& [i, m] : failures)
      nil.detail += (nil.detail.empty() ? "" : ", ") + std::string("d_") + std::to_string(i) + " at q^" + std::to_string(m);
    report.checks.push_back(nil);

    const DifferentialDims dd = differential_dims(cx, options.field);
    bool rn = true;
    std::string rn_detail;
    for (std::size_t i = 0; i < cx.groups.size(); ++i) {
      result.chain_qdims.push_back(qdim(cx.groups[i]));
      if (dd.kernel[i] + dd.image[i].shifted(1) != result.chain_qdims.back()) {
        rn = false;
        rn_detail += (rn_detail.empty() ? "" : ", ") + std::string("degree ") + std::to_string(i);
      }
    }
    report.checks.push_back({"rank_nullity" + tag, rn, rn_detail});

    result.homology = homology_dims(cx, dd, options.field);
    result.superpolynomial = superpolynomial(result.homology, diagram.n_black(), diagram.n_white());

    const LaurentPoly1& target = reduced ? report.reduced_jones : report.jones;
    report.checks.push_back(
        equal_check("chain_euler" + tag, euler_characteristic(cx, diagram.n_black(), diagram.n_white()), target));
    report.checks.push_back(equal_check("euler" + tag, evaluate_T(result.superpolynomial.value, -1), target));
    report.flavors.push_back(std::move(result));
  }

  if (options.timing) {
    const auto end = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
  }
  return report;
}

namespace {

Json poly_json(const LaurentPoly1& p) { return {{"text", to_string(p)}, {"terms", to_json(p)}}; }
Json poly_json(const LaurentPoly2& p) { return {{"text", to_string(p)}, {"terms", to_json(p)}}; }

}  // namespace

Json to_json(const DiagramReport& r) {
  Json flavors = Json::array();
  for (const auto& f : r.flavors) {
    Json qdims = Json::array();
    for (const auto& q : f.chain_qdims) qdims.push_back(to_json(q));
    Json out = {{"reduced", f.reduced},
                {"field", f.homology.field.name()},
                {"chain_qdims", qdims},
                {"homology", to_json(f.homology)},
                {"superpolynomial", poly_json(f.superpolynomial.value)}};
    out["marked"] = f.marked ? Json(*f.marked) : Json(nullptr);
    flavors.push_back(out);
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json out = {{"name", r.name},
              {"pd", r.pd},
              {"crossings", r.crossings},
              {"n_black", r.n_black},
              {"n_white", r.n_white},
              {"components", r.components},
              {"jones", poly_json(r.jones)},
              {"reduced_jones", poly_json(r.reduced_jones)},
              {"flavors", flavors},
              {"checks", checks},
              {"ok", r.ok()}};
  if (r.elapsed_ms) out["elapsed_ms"] = *r.elapsed_ms;
  return out;
}

Json to_json(const RunReport& report) {
  Json diagrams = Json::array();
  for (const auto& d : report.diagrams) diagrams.push_back(to_json(d));
  const std::size_t passed = report.passed();
  return {{"diagrams", diagrams},
          {"summary", {{"total", report.diagrams.size()}, {"passed", passed}, {"failed", report.diagrams.size() - passed}}},
          {"ok", report.ok()}};
}

std::string to_text(const DiagramReport& r) {
  std::ostringstream out;
  if (!r.name.empty()) out << "name: " << r.name << "\n";
  out << "pd: " << r.pd << "\n";
  out << "crossings: " << r.crossings << " (black " << r.n_black << ", white " << r.n_white << "), components: "
      << r.components << "\n";
  out << "jones: " << to_string(r.jones) << "\n";
  out << "reduced jones: " << to_string(r.reduced_jones) << "\n";
  for (const auto& f : r.flavors) {
    out << (f.reduced ? "reduced at edge " + *f.marked : std::string("unreduced")) << ", field "
        << f.homology.field.name() << "\n";
    for (std::size_t i = 0; i < f.homology.dims.size(); ++i)
      out << "  H_" << i << ": " << to_string(f.homology.dims[i]) << "\n";
    out << "  P = " << to_string(f.superpolynomial.value) << "\n";
  }
  out << "checks:\n";
  for (const auto& c : r.checks)
    out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  if (r.elapsed_ms) out << "elapsed: " << *r.elapsed_ms << " ms\n";
  return out.str();
}

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  for (const auto& d : report.diagrams) {
    out << (d.ok() ? "PASS " : "FAIL ") << (d.name.empty() ? d.pd : d.name);
    for (const auto& c : d.checks)
      if (!c.passed) out << "\n  failed " << c.name << (c.detail.empty() ? "" : ": " + c.detail);
    if (d.elapsed_ms) out << " (" << *d.elapsed_ms << " ms)";
    out << "\n";
  }
  out << report.passed() << "/" << report.diagrams.size() << " passed\n";
  return out.str();
}

std::string to_latex(const DiagramReport& r) {
  std::ostringstream out;
  out << "% " << (r.name.empty() ? r.pd : r.name) << "\n";
  out << "J(q) = " << to_latex(r.jones) << "\n";
  out << "\\underline{J}(q) = " << to_latex(r.reduced_jones) << "\n";
  for (const auto& f : r.flavors) {
    for (std::size_t i = 0; i < f.homology.dims.size(); ++i)
      out << (f.reduced ? "\\dim_q \\underline{H}_" : "\\dim_q H_") << i << " = " << to_latex(f.homology.dims[i]) << "\n";
    out << (f.reduced ? "\\underline{P}(q|T) = " : "P(q|T) = ") << to_latex(f.superpolynomial.value) << "\n";
  }
  return out.str();
}

std::string to_latex(const RunReport& report) {
  std::string out;
  for (const auto& d : report.diagrams) out += to_latex(d);
  return out;
}

}  // namespace khova
