#include "pierce/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "pierce/error.hpp"
#include "pierce/random.hpp"

namespace pierce {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Certificate: return "Certificate";
    case Outcome::DualWitness: return "DualWitness";
    case Outcome::Inconclusive: return "Inconclusive";
    case Outcome::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

std::optional<Outcome> outcome_from_string(std::string_view s) {
  for (Outcome o : {Outcome::Certificate, Outcome::DualWitness, Outcome::Inconclusive,
                    Outcome::HypothesisViolated}) {
    if (to_string(o) == s) return o;
  }
  return std::nullopt;
}

double piercing_objective(const ChordConfig& config, const Family& family) {
  double worst = 0.0;
  for (const ConvexBody& body : family) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Chord& chord : config.chords) {
      nearest = std::min(nearest, body_segment_distance(body, chord));
      if (nearest == 0.0) break;
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

bool hits_in_original(const ConvexBody& body, const LineEq& line, const AffineMap& transform) {
  const double eps = kGeomEps * std::max(1.0, 1.0 / transform.scale);
  return body_line_hit(body, line, eps);
}

bool verify_certificate(const Families& families, const PiercingCertificate& cert) {
  if (cert.family < 1 || cert.family > static_cast<int>(families.size())) return false;
  if (cert.lines_original.empty()) return false;
  const Family& family = families[static_cast<std::size_t>(cert.family - 1)];
  for (std::size_t i = 0; i < family.size(); ++i) {
    const int assigned = i < cert.assignment.size() ? cert.assignment[i] : -1;
    if (assigned >= 0 && assigned < static_cast<int>(cert.lines_original.size()) &&
        hits_in_original(family[i], cert.lines_original[static_cast<std::size_t>(assigned)],
                         cert.transform)) {
      continue;
    }
    const bool any = std::any_of(cert.lines_original.begin(), cert.lines_original.end(),
                                 [&](const LineEq& l) { return hits_in_original(family[i], l, cert.transform); });
    if (!any) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct DescentResult {
  SimplexPoint point;
  double value = std::numeric_limits<double>::infinity();
};

// Nelder-Mead over the first n-1 barycentric coordinates; every trial point
// is projected onto the simplex before evaluation and stored projected.
class SimplexDescent {
 public:
  SimplexDescent(std::function<double(const SimplexPoint&)> f, Rng& rng)
      : f_(std::move(f)), rng_(rng) {}

  DescentResult run(const SimplexPoint& start, double step, int max_evals, double target) {
    const int n = start.n();
    const int d = n - 1;
    evals_ = 0;
    max_evals_ = max_evals;
    best_ = {start, eval(start)};

    double current_step = step;
    while (evals_ < max_evals_ && best_.value > target) {
      std::vector<Vertex> simplex = initial_simplex(best_.point, current_step, d);
      iterate(simplex, target);
      current_step = std::max(current_step * 0.5, 1e-9);
    }
    return best_;
  }

 private:
  struct Vertex {
    std::vector<double> y;
    double value;
  };

  SimplexPoint to_point(const std::vector<double>& y) const {
    std::vector<double> full(y);
    double rest = 1.0;
    for (double v : y) rest -= v;
    full.push_back(rest);
    return SimplexPoint::project(full);
  }

  Vertex make(const std::vector<double>& y) {
    const SimplexPoint p = to_point(y);
    const double v = eval(p);
    std::vector<double> stored(p.coords().begin(), p.coords().end() - 1);
    return {std::move(stored), v};
  }

  double eval(const SimplexPoint& p) {
    ++evals_;
    const double v = f_(p);
    if (v < best_.value) best_ = {p, v};
    return v;
  }

  std::vector<Vertex> initial_simplex(const SimplexPoint& base, double step, int d) {
    std::vector<double> y0(base.coords().begin(), base.coords().end() - 1);
    std::vector<Vertex> s;
    s.push_back({y0, best_.value});
    for (int i = 0; i < d; ++i) {
      std::vector<double> y = y0;
      const double sign = uniform01(rng_) < 0.5 ? -1.0 : 1.0;
      y[static_cast<std::size_t>(i)] += sign * step;
      s.push_back(make(y));
    }
    return s;
  }

  void iterate(std::vector<Vertex>& s, double target) {
    const std::size_t d = s.size() - 1;
    auto lerp = [](const std::vector<double>& a, const std::vector<double>& b, double t) {
      std::vector<double> r(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
      return r;
    };
    while (evals_ < max_evals_ && best_.value > target) {
      std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.value < b.value; });

      double spread = 0.0;
      for (std::size_t i = 1; i <= d; ++i) {
        for (std::size_t k = 0; k < d; ++k) spread = std::max(spread, std::abs(s[i].y[k] - s[0].y[k]));
      }
      if (spread < 1e-12 || s[d].value - s[0].value <= 1e-15) return;

      std::vector<double> centroid(d, 0.0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) centroid[k] += s[i].y[k] / static_cast<double>(d);
      }
      Vertex& worst = s[d];
      const Vertex reflected = make(lerp(centroid, worst.y, -1.0));
      if (reflected.value < s[0].value) {
        const Vertex expanded = make(lerp(centroid, worst.y, -2.0));
        worst = expanded.value < reflected.value ? expanded : reflected;
      } else if (reflected.value < s[d - 1].value) {
        worst = reflected;
      } else {
        const bool outside = reflected.value < worst.value;
        const Vertex contracted = make(lerp(centroid, worst.y, outside ? -0.5 : 0.5));
        if (contracted.value < std::min(reflected.value, worst.value)) {
          worst = contracted;
        } else {
          for (std::size_t i = 1; i <= d; ++i) s[i] = make(lerp(s[0].y, s[i].y, 0.5));
        }
      }
    }
  }

  std::function<double(const SimplexPoint&)> f_;
  Rng& rng_;
  DescentResult best_;
  int evals_ = 0;
  int max_evals_ = 0;
};

// Re-derives exact lines from an approximate chord configuration: each set
// goes to its nearest chord, and each group gets its own common transversal.
std::optional<std::vector<LineEq>> snap_lines(const ChordConfig& config, const Family& family) {
  const int h = config.chord_count();
  std::vector<std::vector<ConvexBody>> groups(static_cast<std::size_t>(h));
  for (const ConvexBody& body : family) {
    int nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < h; ++k) {
      const double d = body_segment_distance(body, config.chords[static_cast<std::size_t>(k)]);
      if (d < best) {
        best = d;
        nearest = k;
      }
    }
    groups[static_cast<std::size_t>(nearest)].push_back(body);
  }
  std::vector<LineEq> lines;
  for (int k = 0; k < h; ++k) {
    const auto& group = groups[static_cast<std::size_t>(k)];
    const LineEq chord_line = config.line(k);
    const bool chord_ok = std::all_of(group.begin(), group.end(),
                                      [&](const ConvexBody& b) { return body_line_hit(b, chord_line); });
    if (chord_ok) {
      lines.push_back(chord_line);
      continue;
    }
    auto line = common_transversal(group);
    if (!line) return std::nullopt;
    lines.push_back(*line);
  }
  return lines;
}

std::optional<PiercingCertificate> make_certificate(const Families& original, const Family& normalized,
                                                    int family_index, std::vector<LineEq> lines,
                                                    const ChordConfig& config, double search_residual,
                                                    const AffineMap& transform, bool from_chords) {
  PiercingCertificate cert;
  cert.family = family_index;
  cert.witness = config.x;
  cert.transform = transform;
  cert.search_residual = search_residual;
  cert.from_chords = from_chords;
  for (LineEq& l : lines) {
    cert.lines.push_back(l.canonical());
    cert.lines_original.push_back(transform.pull_back(l).canonical());
  }
  double residual = 0.0;
  for (const ConvexBody& body : normalized) {
    int assigned = -1;
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cert.lines.size(); ++k) {
      nearest = std::min(nearest, body_line_distance(body, cert.lines[k]));
      if (assigned < 0 && body_line_hit(body, cert.lines[k])) assigned = static_cast<int>(k);
    }
    if (assigned < 0) return std::nullopt;
    cert.assignment.push_back(assigned);
    residual = std::max(residual, nearest);
  }
  cert.residual = residual;
  if (!verify_certificate(original, cert)) return std::nullopt;
  return cert;
}

std::vector<LineEq> chord_lines(const ChordConfig& config) {
  std::vector<LineEq> out;
  for (int k = 0; k < config.chord_count(); ++k) out.push_back(config.line(k));
  return out;
}

}  // namespace

SolveResult solve_lines(const Families& families, int lines, const SolverOptions& options) {
  if (lines != 2 && lines != 3) throw Error(ErrorCode::InvalidArgument, "solver supports 2 or 3 lines");
  const int n = 2 * lines;
  if (families.empty() || static_cast<int>(families.size()) > n) {
    throw Error(ErrorCode::BadArity, "expected 1.." + std::to_string(n) + " families, got " +
                                         std::to_string(families.size()));
  }
  const int m = static_cast<int>(families.size());

  SolveResult result;
  result.lines = lines;

  auto t0 = Clock::now();
  const Families expanded = expand_families(families, static_cast<std::size_t>(n));
  result.hypothesis = lines == 3 ? check_colorful_tight(expanded) : check_colorful_T4(expanded);
  for (SetRef& ref : result.hypothesis.witness) ref.family = (ref.family - 1) % m + 1;
  result.timings.hypothesis_ms = elapsed_ms(t0);
  if (!result.hypothesis.holds && !options.waive_hypothesis) {
    result.outcome = Outcome::HypothesisViolated;
    return result;
  }

  const NormalizedFamilies norm = normalize_to_disk(families);
  Rng rng(options.seed);
  double best = std::numeric_limits<double>::infinity();

  auto accept = [&](PiercingCertificate cert) {
    result.outcome = Outcome::Certificate;
    result.best_residual = cert.search_residual;
    result.certificate = std::move(cert);
    return result;
  };

  auto try_config = [&](const ChordConfig& config, int j, double g) -> std::optional<PiercingCertificate> {
    const Family& fam = norm.families[static_cast<std::size_t>(j)];
    if (g <= options.tol_residual) {
      if (auto cert = make_certificate(families, fam, j + 1, chord_lines(config), config, g, norm.map, true)) {
        return cert;
      }
    }
    if (auto snapped = snap_lines(config, fam)) {
      return make_certificate(families, fam, j + 1, *snapped, config, g, norm.map, false);
    }
    return std::nullopt;
  };

  // Phase A: lattice scan of the simplex, all families jointly.
  t0 = Clock::now();
  const int resolution = options.grid_resolution > 0 ? options.grid_resolution : (n == 6 ? 12 : 24);
  struct Seed {
    double value;
    std::size_t order;
    int family;
    SimplexPoint x;
  };
  std::vector<Seed> seeds;
  {
    GridEnumerator it({n, resolution});
    SimplexPoint x;
    std::size_t order = 0;
    while (it.next(x)) {
      const ChordConfig config = chords_from_simplex(x);
      for (int j = 0; j < m; ++j) {
        const double g = piercing_objective(config, norm.families[static_cast<std::size_t>(j)]);
        best = std::min(best, g);
        if (g <= options.tol_residual) {
          if (auto cert = try_config(config, j, g)) {
            result.timings.scan_ms = elapsed_ms(t0);
            return accept(std::move(*cert));
          }
        }
        seeds.push_back({g, order, j, x});
      }
      ++order;
    }
  }
  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.order != b.order) return a.order < b.order;
    return a.family < b.family;
  });
  const std::size_t start_count = static_cast<std::size_t>(std::max(options.starts, 0));
  if (seeds.size() > start_count) seeds.resize(start_count);
  while (seeds.size() < start_count) {
    const int j = seeds.empty() ? 0 : seeds.front().family;
    seeds.push_back({std::numeric_limits<double>::infinity(), 0, j, random_simplex_point(n, rng)});
  }
  result.timings.scan_ms = elapsed_ms(t0);

  // Phase B: multi-start descent from the best seeds, then exact snapping.
  t0 = Clock::now();
  for (const Seed& seed : seeds) {
    const Family& fam = norm.families[static_cast<std::size_t>(seed.family)];
    SimplexDescent descent(
        [&](const SimplexPoint& p) { return piercing_objective(chords_from_simplex(p), fam); }, rng);
    const DescentResult r =
        descent.run(seed.x, 1.0 / resolution, options.evals_per_start, options.tol_residual);
    best = std::min(best, r.value);
    if (auto cert = try_config(chords_from_simplex(r.point), seed.family, r.value)) {
      result.timings.descent_ms = elapsed_ms(t0);
      return accept(std::move(*cert));
    }
    if (std::isfinite(seed.value)) {
      if (auto cert = try_config(chords_from_simplex(seed.x), seed.family, seed.value)) {
        result.timings.descent_ms = elapsed_ms(t0);
        return accept(std::move(*cert));
      }
    }
  }
  result.timings.descent_ms = elapsed_ms(t0);
  result.best_residual = best;

  // Fallback: colorful KKM witness on the induced cover.
  t0 = Clock::now();
  const Families norm_expanded = expand_families(norm.families, static_cast<std::size_t>(n));
  const CoverOracle cover = induced_cover(norm_expanded, n);
  std::optional<ColorfulWitness> witness;
  try {
    witness = find_colorful_witness(cover, options.kkm_max_resolution);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::KkmConditionViolated) throw;
    // An uncovered lattice vertex is a configuration whose chords meet every
    // set of that family.
    const KkmCheckResult miss =
        check_kkm_condition(cover, {n, std::min(kKkmStartResolution, options.kkm_max_resolution)});
    if (!miss.ok && miss.vertex) {
      const int j = miss.cover % m;
      const ChordConfig config = chords_from_simplex(*miss.vertex);
      const double g = piercing_objective(config, norm.families[static_cast<std::size_t>(j)]);
      if (auto cert = try_config(config, j, std::min(g, options.tol_residual))) {
        result.timings.dual_ms = elapsed_ms(t0);
        return accept(std::move(*cert));
      }
    }
  }
  if (witness) {
    DualWitness dual;
    dual.kkm = *witness;
    const ChordConfig config = chords_from_simplex(witness->point);
    std::vector<const ConvexBody*> held(static_cast<std::size_t>(n), nullptr);
    dual.region_sets.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      const int region = witness->permutation[static_cast<std::size_t>(c)] + 1;
      const Family& fam = norm_expanded[static_cast<std::size_t>(c)];
      for (std::size_t b = 0; b < fam.size(); ++b) {
        if (body_in_region(config, region, fam[b])) {
          dual.region_sets[static_cast<std::size_t>(region - 1)] = {c % m + 1, static_cast<int>(b)};
          held[static_cast<std::size_t>(region - 1)] = &fam[b];
          break;
        }
      }
    }
    auto body_at = [&](int region) { return *held[static_cast<std::size_t>(region - 1)]; };
    const bool complete = std::all_of(held.begin(), held.end(), [](const ConvexBody* b) { return b; });
    if (complete && n == 6) {
      for (std::vector<int> group : {std::vector<int>{1, 3, 5}, std::vector<int>{2, 4, 6}}) {
        if (!tight_triple(body_at(group[0]), body_at(group[1]), body_at(group[2]))) {
          dual.group = group;
          dual.verified = true;
          break;
        }
      }
    } else if (complete) {
      const std::vector<ConvexBody> four = {body_at(1), body_at(2), body_at(3), body_at(4)};
      dual.group = {1, 2, 3, 4};
      dual.verified = !common_transversal(four).has_value();
    }
    result.outcome = dual.verified ? Outcome::DualWitness : Outcome::Inconclusive;
    result.dual = std::move(dual);
  } else {
    result.outcome = Outcome::Inconclusive;
  }
  result.timings.dual_ms = elapsed_ms(t0);
  return result;
}

SolveResult solve_three_lines(const Families& families, const SolverOptions& options) {
  return solve_lines(families, 3, options);
}

SolveResult solve_two_lines(const Families& families, const SolverOptions& options) {
  return solve_lines(families, 2, options);
}

DeepLine deep_line(const Family& family, const SolverOptions& options) {
  const Families single = {family};
  SolverOptions opts = options;
  opts.waive_hypothesis = true;
  const SolveResult r = solve_three_lines(single, opts);
  if (r.outcome != Outcome::Certificate || !r.certificate) {
    throw Error(ErrorCode::SolverFailed, "no three-line certificate for the family (outcome " +
                                             std::string(to_string(r.outcome)) + ")");
  }
  DeepLine out;
  out.hits = -1;
  for (const LineEq& line : r.certificate->lines_original) {
    int hits = 0;
    for (const ConvexBody& body : family) hits += hits_in_original(body, line, r.certificate->transform);
    if (hits > out.hits) {
      out.hits = hits;
      out.line = line;
    }
  }
  return out;
}

}  // namespace pierce
