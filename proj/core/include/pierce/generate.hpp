#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pierce/instance.hpp"

namespace pierce {

/// Instance generators. Each one self-checks its output before returning:
///
///   stabbed        every body meets one planted line
///   planted3       bodies on three planted lines, kept only while the
///                  hypothesis still holds
///   planted2       same with two lines (four-family T(4) instances)
///   plantedChords  bodies on the chords of a hidden simplex point
///   tightRandom    random bodies, rejection-sampled against the hypothesis
///   violator       a stabbed instance with an embedded violating tuple
///
/// The hypothesis is the colorful tight-triple condition for lines = 3 and
/// colorful T(4) for lines = 2 (families repeated cyclically). A single
/// family with lines = 3 is additionally checked for T(3) on every kind
/// except tightRandom and violator.
struct GeneratorParams {
  std::string kind = "stabbed";
  int n = 20;          // bodies per family
  int families = 1;    // 1..6 (1..4 for lines = 2)
  int lines = 3;       // 2 or 3
  std::uint64_t seed = 1;
  int max_attempts = 100000;  // rejected bodies before GeneratorExhausted
};

const std::vector<std::string>& generator_kinds();

/// Throws Error(InvalidArgument) for bad parameters and
/// Error(GeneratorExhausted) once max_attempts bodies have been drawn.
InstanceFile generate(const GeneratorParams& params);

/// Re-runs the check advertised in the instance metadata. True iff the
/// instance is what its generator claims (for a violator: the violation).
bool generator_self_check(const InstanceFile& instance);

}  // namespace pierce
