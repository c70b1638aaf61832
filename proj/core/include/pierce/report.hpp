#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pierce/solver.hpp"
#include "pierce/transversal.hpp"

namespace pierce {

struct RunReport {
  HypothesisReport hypothesis;
  Outcome outcome = Outcome::Inconclusive;
  int lines = 3;
  std::optional<PiercingCertificate> certificate;
  std::optional<DualWitness> dual;
  double best_residual = 0.0;
  PhaseTimings timings;
  std::uint64_t seed = 0;
};

RunReport make_report(const SolveResult& result, std::uint64_t seed);

/// Stable key order and number formatting; identical reports serialize to
/// identical bytes. Infinite residuals are written as null.
std::string report_to_json(const RunReport& report, bool include_timings = true);
RunReport report_from_json(std::string_view text);

std::string hypothesis_to_json(const HypothesisReport& report);

}  // namespace pierce
