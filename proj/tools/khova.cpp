// khova: Khovanov homology and superpolynomials from braid words or PD codes.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "khova/knot_table.hpp"
#include "khova/report.hpp"

#ifndef KHOVA_DEFAULT_TABLE
#define KHOVA_DEFAULT_TABLE "data/knot_table.jsonl"
#endif

namespace {

struct InputArgs {
  std::optional<std::string> braid;
  std::optional<int> strands;
  std::optional<std::string> pd_file;
  std::optional<std::string> pd_text;
};

struct CommonArgs {
  InputArgs input;
  bool reduced = false;
  bool unreduced = false;
  bool both = false;
  std::optional<std::string> marked;
  std::string field = "q";
  std::string format = "text";
  std::size_t max_crossings = khova::kDefaultMaxCrossings;
  bool timing = false;
};

void add_input(CLI::App* cmd, InputArgs& in) {
  auto* braid = cmd->add_option("--braid", in.braid, "braid word, e.g. \"1,1,1\" or \"1 -2 1 -2\"");
  cmd->add_option("--strands", in.strands, "number of braid strands (default: largest letter + 1)")->needs(braid);
  auto* pd = cmd->add_option("--pd", in.pd_file, "file with a PD code ('-' reads stdin)");
  auto* pd_text = cmd->add_option("--pd-text", in.pd_text, "PD code given inline");
  braid->excludes(pd)->excludes(pd_text);
  pd->excludes(pd_text);
}

void add_limits(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--max-crossings", a.max_crossings, "refuse diagrams with more crossings")
      ->envname("KHOVA_MAX_CROSSINGS")
      ->capture_default_str();
}

int default_strands(std::string_view word) {
  int top = 0;
  std::string token;
  for (char ch : word) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!token.empty()) top = std::max(top, std::abs(std::atoi(token.c_str())));
      token.clear();
    } else {
      token.push_back(ch);
    }
  }
  if (!token.empty()) top = std::max(top, std::abs(std::atoi(token.c_str())));
  return top + 1;
}

khova::KnotDiagram load_diagram(const InputArgs& in) {
  if (in.braid) return khova::parse_braid_word(*in.braid, in.strands.value_or(default_strands(*in.braid)));
  if (in.pd_text) return khova::parse_pd_code(*in.pd_text);
  if (in.pd_file) {
    std::string text;
    if (*in.pd_file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream f(*in.pd_file);
      if (!f) throw khova::Error("io", "cannot open " + *in.pd_file);
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return khova::parse_pd_code(text);
  }
  throw khova::ParseError("no input: give --braid, --pd or --pd-text");
}

khova::Flavor flavor_of(const CommonArgs& a, khova::Flavor fallback) {
  if (int(a.reduced) + int(a.unreduced) + int(a.both) > 1)
    throw khova::Error("argument", "--reduced, --unreduced and --both are mutually exclusive");
  if (a.reduced) return khova::Flavor::Reduced;
  if (a.unreduced) return khova::Flavor::Unreduced;
  if (a.both) return khova::Flavor::Both;
  return fallback;
}

khova::ComputeOptions compute_options(const CommonArgs& a, khova::Flavor fallback) {
  khova::ComputeOptions opt;
  opt.flavor = flavor_of(a, fallback);
  opt.marked = a.marked;
  opt.field = khova::Field::parse(a.field);
  opt.max_crossings = a.max_crossings;
  opt.timing = a.timing;
  return opt;
}

khova::Reduction reduction_for(const khova::KnotDiagram& d, const khova::ComputeOptions& opt) {
  khova::Reduction r;
  if (opt.flavor == khova::Flavor::Unreduced) return r;
  if (opt.marked) {
    r.marked = d.find_edge(*opt.marked);
    if (!r.marked) throw khova::ValidationError("invalid diagram: marked edge unknown: " + *opt.marked);
  } else {
    r.marked = d.effective_marked_edge();
  }
  return r;
}

template <class Report>
void emit(const Report& report, const std::string& format) {
  if (format == "json") {
    std::cout << khova::to_json(report).dump(2) << "\n";
  } else if (format == "latex") {
    std::cout << khova::to_latex(report);
  } else {
    std::cout << khova::to_text(report);
  }
}

int fail(const khova::Error& e) {
  const khova::Json err = {{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
  std::cerr << err.dump() << "\n";
  const bool input = e.kind() == "parse" || e.kind() == "validation" || e.kind() == "argument" || e.kind() == "io" ||
                     e.kind() == "table";
  return input ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov homology and Jones superpolynomials of knot diagrams"};
  app.require_subcommand(1);

  CommonArgs compute_args, cube_args, complex_args;
  auto* compute = app.add_subcommand("compute", "homology, superpolynomials and invariant checks for one diagram");
  add_input(compute, compute_args.input);
  compute->add_flag("--reduced", compute_args.reduced, "reduced theory only");
  compute->add_flag("--unreduced", compute_args.unreduced, "unreduced theory only");
  compute->add_flag("--both", compute_args.both, "both theories (default)");
  compute->add_option("--marked", compute_args.marked, "marked edge for the reduced theory");
  compute->add_option("--field", compute_args.field, "coefficient field: q (rationals) or a prime")->capture_default_str();
  compute->add_option("--format", compute_args.format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  compute->add_flag("--timing", compute_args.timing, "report elapsed time");
  add_limits(compute, compute_args);

  auto* cube = app.add_subcommand("hypercube", "dump the cube of resolutions");
  add_input(cube, cube_args.input);
  cube->add_option("--format", cube_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  add_limits(cube, cube_args);

  auto* cx = app.add_subcommand("complex", "dump chain group dimensions and differential blocks");
  add_input(cx, complex_args.input);
  cx->add_flag("--reduced", complex_args.reduced, "reduced complex");
  cx->add_flag("--unreduced", complex_args.unreduced, "unreduced complex (default)");
  cx->add_option("--marked", complex_args.marked, "marked edge for the reduced complex");
  cx->add_option("--format", complex_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  add_limits(cx, complex_args);

  std::string table = KHOVA_DEFAULT_TABLE;
  unsigned jobs = 1;
  CommonArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check every knot of a table");
  verify->add_option("--table", table, "newline-delimited JSON knot table")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  verify->add_option("--field", verify_args.field, "coefficient field: q (rationals) or a prime")->capture_default_str();
  verify->add_option("--format", verify_args.format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  verify->add_flag("--timing", verify_args.timing, "report elapsed time per knot");
  add_limits(verify, verify_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      const auto opt = compute_options(compute_args, khova::Flavor::Both);
      const auto diagram = load_diagram(compute_args.input);
      const auto report = khova::cmd_compute(diagram, opt);
      emit(report, compute_args.format);
      return report.ok() ? 0 : 1;
    }
    if (*cube) {
      const auto diagram = load_diagram(cube_args.input);
      const auto hc = khova::build_hypercube(diagram, cube_args.max_crossings);
      if (cube_args.format == "json")
        std::cout << khova::hypercube_to_json(hc, diagram).dump(2) << "\n";
      else
        std::cout << khova::hypercube_to_text(hc, diagram);
      return 0;
    }
    if (*cx) {
      const auto opt = compute_options(complex_args, khova::Flavor::Unreduced);
      const auto diagram = load_diagram(complex_args.input);
      const auto hc = khova::build_hypercube(diagram, complex_args.max_crossings);
      const auto chain = khova::build_differentials(hc, reduction_for(diagram, opt));
      if (complex_args.format == "json")
        std::cout << khova::complex_to_json(chain, diagram).dump(2) << "\n";
      else
        std::cout << khova::complex_to_text(chain, diagram);
      return khova::check_nilpotent(chain).empty() ? 0 : 1;
    }
    if (*verify) {
      khova::VerifyOptions opt;
      opt.compute = compute_options(verify_args, khova::Flavor::Both);
      opt.jobs = jobs;
      const auto entries = khova::load_knot_table(table);
      const auto report = khova::batch_verify(entries, opt);
      emit(report, verify_args.format);
      return report.ok() ? 0 : 1;
    }
  } catch (const khova::Error& e) {
    return fail(e);
  }
  return 0;
}
