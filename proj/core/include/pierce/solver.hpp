#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pierce/chords.hpp"
#include "pierce/geometry.hpp"
#include "pierce/kkm.hpp"
#include "pierce/transversal.hpp"

namespace pierce {

struct SolverOptions {
  std::uint64_t seed = 1;
  /// Phase A lattice resolution; 0 picks 12 on the 5-simplex, 24 on the 3-simplex.
  int grid_resolution = 0;
  int starts = 32;
  int evals_per_start = 2000;
  double tol_residual = 1e-9;
  bool waive_hypothesis = false;
  /// Resolution cap for the colorful-witness fallback.
  int kkm_max_resolution = 16;
};

/// k lines piercing every set of one family.
struct PiercingCertificate {
  std::vector<LineEq> lines;           // normalized coordinates
  std::vector<LineEq> lines_original;  // input coordinates
  int family = 1;                      // 1-based, into the caller's families
  std::vector<int> assignment;         // per set: index of a line hitting it
  double residual = 0.0;               // max set-to-nearest-line distance, normalized
  double search_residual = 0.0;        // chord objective at the witness
  bool from_chords = false;            // lines are exactly the witness chords
  SimplexPoint witness;
  AffineMap transform;
};

/// Colorful KKM witness on the induced cover, plus the sets it places in the
/// regions and the alternating group whose regions are pairwise disjoint.
struct DualWitness {
  ColorfulWitness kkm;
  std::vector<SetRef> region_sets;  // region i+1 holds region_sets[i]
  std::vector<int> group;           // 1-based regions of the violating group
  bool verified = false;            // group re-checked as non-tight / no transversal
};

enum class Outcome { Certificate, DualWitness, Inconclusive, HypothesisViolated };

std::string_view to_string(Outcome o);
std::optional<Outcome> outcome_from_string(std::string_view s);

struct PhaseTimings {
  double hypothesis_ms = 0.0;
  double scan_ms = 0.0;
  double descent_ms = 0.0;
  double dual_ms = 0.0;
};

struct SolveResult {
  int lines = 3;
  Outcome outcome = Outcome::Inconclusive;
  HypothesisReport hypothesis;
  std::optional<PiercingCertificate> certificate;
  std::optional<DualWitness> dual;
  double best_residual = 0.0;
  PhaseTimings timings;
};

/// max over sets of the distance to the nearest chord; zero iff the chords
/// pierce the family (bodies in normalized coordinates).
double piercing_objective(const ChordConfig& config, const Family& family);

/// Three piercing lines for some family of a colorful tight-triple instance
/// (1..6 families, repeated cyclically up to six).
SolveResult solve_three_lines(const Families& families, const SolverOptions& options = {});

/// Two piercing lines for some family of a colorful T(4) instance
/// (1..4 families, repeated cyclically up to four).
SolveResult solve_two_lines(const Families& families, const SolverOptions& options = {});

SolveResult solve_lines(const Families& families, int lines, const SolverOptions& options = {});

/// Re-checks every set of the certificate's family against its assigned line
/// in input coordinates, falling back to the other lines before failing.
bool verify_certificate(const Families& families, const PiercingCertificate& certificate);

struct DeepLine {
  LineEq line;  // input coordinates
  int hits = 0;
};

/// Certificate line meeting the most members of the family. The hypothesis
/// is not enforced; at least ceil(n/3) hits is guaranteed only under T(3).
/// Throws Error(SolverFailed) if no three-line certificate is found.
DeepLine deep_line(const Family& family, const SolverOptions& options = {});

/// Hit test in input coordinates with the tolerance scaled by the
/// certificate's normalization.
bool hits_in_original(const ConvexBody& body, const LineEq& line, const AffineMap& transform);

}  // namespace pierce
