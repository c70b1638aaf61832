// pierce: command-line front end for the line-piercing solver.
//
// Exit codes: 0 success, 1 property/bound not met, 2 parse or usage error,
// 3 hypothesis violated, 4 inconclusive, 5 internal error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pierce/chords.hpp"
#include "pierce/error.hpp"
#include "pierce/generate.hpp"
#include "pierce/instance.hpp"
#include "pierce/kkm.hpp"
#include "pierce/report.hpp"
#include "pierce/solver.hpp"
#include "pierce/svg.hpp"
#include "pierce/transversal.hpp"

namespace {

using namespace pierce;
using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kHypothesis = 3, kInconclusive = 4, kInternal = 5 };

Families load(const std::string& path) { return to_families(parse_instance(read_text_file(path))); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("PIERCE_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("PIERCE_SEED is not an integer: ") + env);
    }
  }
  return seed;
}

// Positions of a cyclically expanded instance back to input families.
void map_witness(HypothesisReport& h, std::size_t families) {
  for (SetRef& r : h.witness) r.family = (r.family - 1) % static_cast<int>(families) + 1;
}

struct CheckArgs {
  std::string property;
  std::string file;
  bool allow_large = false;
};

int run_check(const CheckArgs& a) {
  const Families fams = load(a.file);
  HypothesisReport report;
  if (a.property == "colorful-tight") {
    report = check_colorful_tight(expand_families(fams, 6));
    map_witness(report, fams.size());
  } else if (a.property == "colorful-t4") {
    report = check_colorful_T4(expand_families(fams, 4));
    map_witness(report, fams.size());
  } else {
    for (std::size_t f = 0; f < fams.size(); ++f) {
      const int idx = static_cast<int>(f) + 1;
      if (a.property == "t3") {
        report = check_T_r(fams[f], 3, idx, a.allow_large);
      } else if (a.property == "t4") {
        report = check_T_r(fams[f], 4, idx, a.allow_large);
      } else {
        report = check_tight_triples(fams[f], idx, a.allow_large);
      }
      if (!report.holds) break;
    }
  }
  std::cout << hypothesis_to_json(report);
  return report.holds ? kOk : kFailed;
}

struct SolveArgs {
  std::string file;
  int lines = 3;
  bool waive = false;
  std::uint64_t seed = 1;
  int budget = SolverOptions{}.evals_per_start;
  double tol = SolverOptions{}.tol_residual;
  std::string out;
  std::string svg;
  bool no_timings = false;
};

int run_solve(const SolveArgs& a) {
  const Families fams = load(a.file);
  SolverOptions opt;
  opt.seed = effective_seed(a.seed);
  opt.evals_per_start = a.budget;
  opt.tol_residual = a.tol;
  opt.waive_hypothesis = a.waive;
  const SolveResult result = solve_lines(fams, a.lines, opt);
  if (result.certificate && !verify_certificate(fams, *result.certificate)) {
    throw Error(ErrorCode::SolverFailed, "certificate failed re-verification");
  }
  emit(report_to_json(make_report(result, opt.seed), !a.no_timings), a.out);
  if (!a.svg.empty()) {
    SvgOverlay overlay;
    if (result.certificate) overlay = overlay_of(*result.certificate);
    write_text_file(a.svg, render_svg(fams, overlay));
  }
  if (!a.out.empty()) std::cerr << "outcome: " << to_string(result.outcome) << "\n";
  switch (result.outcome) {
    case Outcome::Certificate: return kOk;
    case Outcome::HypothesisViolated:
    case Outcome::DualWitness: return kHypothesis;
    case Outcome::Inconclusive: return kInconclusive;
  }
  return kInternal;
}

struct DeepArgs {
  std::string file;
  int family = 1;
  std::uint64_t seed = 1;
};

int run_deep_line(const DeepArgs& a) {
  const Families fams = load(a.file);
  if (a.family < 1 || a.family > static_cast<int>(fams.size())) {
    throw Error(ErrorCode::InvalidArgument, "no family " + std::to_string(a.family));
  }
  const Family& fam = fams[static_cast<std::size_t>(a.family - 1)];
  SolverOptions opt;
  opt.seed = effective_seed(a.seed);
  const DeepLine d = deep_line(fam, opt);
  const int n = static_cast<int>(fam.size());
  const int required = (n + 2) / 3;
  json j;
  j["line"] = {d.line.a, d.line.b, d.line.c};
  j["hits"] = d.hits;
  j["n"] = n;
  j["required"] = required;
  std::cout << j.dump(2) << "\n";
  return d.hits >= required ? kOk : kFailed;
}

int run_gen(const GeneratorParams& p, const std::string& out) {
  GeneratorParams q = p;
  q.seed = effective_seed(p.seed);
  emit(serialize_instance(generate(q)), out);
  return kOk;
}

struct KkmArgs {
  int n = 6;
  std::string cover = "threshold";
  double threshold = -1.0;
  int resolution = 16;
  std::string csv;
};

std::string csv_dump(const CoverOracle& oracle, int resolution) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < oracle.n; ++i) os << (i ? "," : "") << "x" << i + 1;
  for (int c = 0; c < oracle.n; ++c) {
    for (int s = 0; s < oracle.n; ++s) os << ",c" << c + 1 << "s" << s + 1;
  }
  os << "\n";
  GridEnumerator it(KuhnGrid{oracle.n, resolution});
  SimplexPoint x;
  while (it.next(x)) {
    for (int i = 0; i < oracle.n; ++i) os << (i ? "," : "") << x[i];
    for (std::uint8_t b : membership_matrix(oracle, x)) os << "," << int(b);
    os << "\n";
  }
  return os.str();
}

int run_kkm_demo(const KkmArgs& a) {
  CoverOracle oracle;
  if (a.cover == "threshold") {
    const double t = a.threshold >= 0.0 ? a.threshold : 1.0 / (a.n + 4);
    oracle = threshold_cover(a.n, std::vector<double>(static_cast<std::size_t>(a.n), t));
  } else if (a.cover.rfind("instance:", 0) == 0) {
    const Families fams = load(a.cover.substr(9));
    const NormalizedFamilies norm = normalize_to_disk(expand_families(fams, static_cast<std::size_t>(a.n)));
    oracle = induced_cover(norm.families, a.n);
  } else {
    throw Error(ErrorCode::InvalidArgument, "cover must be 'threshold' or 'instance:FILE'");
  }
  std::optional<ColorfulWitness> w;
  json j;
  try {
    w = find_colorful_witness(oracle, a.resolution);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::KkmConditionViolated) throw;
    j["witness"] = nullptr;
    j["error"] = e.what();
  }
  if (w) {
    j["witness"] = {{"permutation", w->permutation},
                    {"point", std::vector<double>(w->point.coords().begin(), w->point.coords().end())},
                    {"resolution", w->resolution}};
    json m = json::array();
    for (double v : w->margins) m.push_back(std::isfinite(v) ? json(v) : json(nullptr));
    j["witness"]["margins"] = m;
  } else if (!j.contains("witness")) {
    j["witness"] = nullptr;
  }
  std::cout << j.dump(2) << "\n";
  if (!a.csv.empty()) write_text_file(a.csv, csv_dump(oracle, w ? w->resolution : a.resolution));
  return w ? kOk : kInconclusive;
}

struct RenderArgs {
  std::string file;
  std::string cert;
  std::vector<double> chords;
  std::string out;
};

int run_render(const RenderArgs& a) {
  const Families fams = load(a.file);
  SvgOverlay overlay;
  if (!a.cert.empty()) {
    const RunReport report = report_from_json(read_text_file(a.cert));
    if (report.certificate) {
      if (!verify_certificate(fams, *report.certificate)) {
        throw Error(ErrorCode::SolverFailed, "certificate does not pierce this instance");
      }
      overlay = overlay_of(*report.certificate);
    }
  }
  if (!a.chords.empty()) overlay.chords = chords_from_simplex(SimplexPoint(a.chords));
  emit(render_svg(fams, overlay), a.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Piercing families of convex sets with few lines"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Check a hypothesis on an instance");
  c->add_option("--property", check.property, "t3, t4, tight, colorful-tight or colorful-t4")
      ->required()
      ->check(CLI::IsMember({"t3", "t4", "tight", "colorful-tight", "colorful-t4"}));
  c->add_option("file", check.file, "Instance JSON")->required();
  c->add_flag("--allow-large", check.allow_large, "Allow exhaustive checks on large families");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Find piercing lines");
  s->add_option("--lines", solve.lines, "Number of lines")->check(CLI::IsMember({2, 3}));
  s->add_option("file", solve.file, "Instance JSON")->required();
  s->add_flag("--waive-hypothesis", solve.waive, "Search even if the hypothesis fails");
  s->add_option("--seed", solve.seed, "Random seed (PIERCE_SEED overrides)");
  s->add_option("--budget", solve.budget, "Objective evaluations per descent start")->check(CLI::PositiveNumber);
  s->add_option("--tol", solve.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  s->add_option("--out", solve.out, "Report JSON path (default stdout)");
  s->add_option("--svg", solve.svg, "Write an SVG of the solution");
  s->add_flag("--no-timings", solve.no_timings, "Omit phase timings from the report");

  DeepArgs deep;
  auto* d = app.add_subcommand("deep-line", "Line meeting at least a third of a family");
  d->add_option("file", deep.file, "Instance JSON")->required();
  d->add_option("--family", deep.family, "1-based family index");
  d->add_option("--seed", deep.seed, "Random seed (PIERCE_SEED overrides)");

  GeneratorParams gen;
  std::string gen_out;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--kind", gen.kind, "Generator kind")->required()->check(CLI::IsMember(generator_kinds()));
  g->add_option("--n", gen.n, "Bodies per family")->required();
  g->add_option("--seed", gen.seed, "Random seed (PIERCE_SEED overrides)");
  g->add_option("--families", gen.families, "Number of families");
  g->add_option("--lines", gen.lines, "Target line count (2 or 3)")->check(CLI::IsMember({2, 3}));
  g->add_option("--out", gen_out, "Output path (default stdout)");

  KkmArgs kkm;
  auto* k = app.add_subcommand("kkm-demo", "Colorful KKM witness search");
  k->add_option("--n", kkm.n, "Simplex dimension plus one")->check(CLI::IsMember({4, 6}));
  k->add_option("--cover", kkm.cover, "threshold or instance:FILE");
  k->add_option("--threshold", kkm.threshold, "Threshold for the threshold cover (default 1/(n+4))");
  k->add_option("--resolution", kkm.resolution, "Maximum grid resolution")->check(CLI::PositiveNumber);
  k->add_option("--csv", kkm.csv, "Dump lattice vertices and membership bits");

  RenderArgs render;
  auto* r = app.add_subcommand("render", "Render an instance to SVG");
  r->add_option("file", render.file, "Instance JSON")->required();
  r->add_option("--cert", render.cert, "Report JSON with a certificate");
  r->add_option("--chords", render.chords, "Simplex point whose chords to draw")->delimiter(',');
  r->add_option("--out", render.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*c) return run_check(check);
    if (*s) return run_solve(solve);
    if (*d) return run_deep_line(deep);
    if (*g) return run_gen(gen, gen_out);
    if (*k) return run_kkm_demo(kkm);
    if (*r) return run_render(render);
  } catch (const ParseError& e) {
    std::cerr << "parse error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::BadArity:
      case ErrorCode::UnsupportedR: return kParse;
      case ErrorCode::SolverFailed: return kInconclusive;
      default: return kInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
