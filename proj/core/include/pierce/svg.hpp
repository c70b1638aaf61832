#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pierce/chords.hpp"
#include "pierce/geometry.hpp"
#include "pierce/solver.hpp"

namespace pierce {

struct SvgOverlay {
  std::optional<ChordConfig> chords;
  std::vector<LineEq> lines;  // normalized coordinates
};

/// Families are drawn in the normalized frame (unit circle), one color per
/// family. Output depends only on the inputs: fixed number formatting, no
/// timestamps.
std::string render_svg(const Families& families, const SvgOverlay& overlay = {});

/// Certificate lines plus the chords of its witness point.
SvgOverlay overlay_of(const PiercingCertificate& certificate);

}  // namespace pierce
