#pragma once

#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/kkm.hpp"

namespace pierce {

/// Six (or four) points on the unit circle driven by a simplex point, and the
/// three (two) chords joining opposite points.
///
/// Anchor f_i sits at angle 2*pi*s_i with s_i = x_1 + ... + x_i, so f_n is
/// always (1, 0). Chord k (0-based) joins f_{k+1} and f_{k+1+n/2}; the arc of
/// the circle running counterclockwise from its first to its second endpoint
/// is its "arc side", described by dot(axis, z) > level.
struct ChordConfig {
  int n = 6;
  SimplexPoint x;
  std::vector<double> cumulative;  // s_1 .. s_n
  std::vector<Point> anchors;      // f_1 .. f_n
  std::vector<Chord> chords;       // n / 2 entries
  std::vector<Point> axis;
  std::vector<double> level;

  int chord_count() const { return n / 2; }
  /// Full line through chord k (tangent line at the point for a degenerate chord).
  LineEq line(int k) const;
  /// 0-based chord index bounding region i (1-based) on its clockwise side.
  int chord_before(int region) const;
  /// 0-based chord index bounding region i (1-based) on its counterclockwise side.
  int chord_after(int region) const;
  /// Whether region i lies on the arc side of chord k.
  bool region_on_arc_side(int region, int k) const;
};

/// Requires x.n() to be 4 or 6; throws Error(InvalidArgument) otherwise.
ChordConfig chords_from_simplex(const SimplexPoint& x);

inline constexpr double kArcPull = 1e-6;

/// Midpoint of the arc between f_{i-1} and f_i, pulled to radius 1 - pull.
Point arc_midpoint(const ChordConfig& config, int region, double pull = kArcPull);

/// Open region R^i: inside the open unit disk and strictly on the arc side of
/// both chords bounding arc i. Empty when x_i = 0.
bool region_contains(const ChordConfig& config, int region, Point p);

/// Convexity of R^i makes a vertex check sufficient.
bool body_in_region(const ChordConfig& config, int region, const ConvexBody& body);

/// Minimum slack of the body's vertices against the region's constraints;
/// positive iff body_in_region (up to the strictness tolerance).
double body_region_slack(const ChordConfig& config, int region, const ConvexBody& body);

/// The two closed halfplanes of R^i (empty when x_i = 0).
std::vector<HalfPlane> region_halfplanes(const ChordConfig& config, int region);

/// R^i clipped to an inscribed regular polygon of the unit circle.
std::vector<Point> region_polygon(const ChordConfig& config, int region, int sides = 64);

/// Cover whose cover index is the family and whose set index is the region:
/// membership(j, i, x) holds iff some body of families[j] lies in R^{i+1}_x.
/// Families are expected in normalized (unit disk) coordinates; there must be
/// exactly n of them.
CoverOracle induced_cover(const Families& families, int n);

}  // namespace pierce
