#include "pierce/chords.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pierce/error.hpp"

namespace pierce {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Point on_circle(double turns) { return {std::cos(kTwoPi * turns), std::sin(kTwoPi * turns)}; }

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

LineEq ChordConfig::line(int k) const { return LineEq{axis[idx(k)].x, axis[idx(k)].y, level[idx(k)]}; }

int ChordConfig::chord_before(int region) const {
  const int h = chord_count();
  return ((region - 2) % h + h) % h;
}

int ChordConfig::chord_after(int region) const {
  const int h = chord_count();
  return (region - 1) % h;
}

bool ChordConfig::region_on_arc_side(int region, int k) const {
  // Chord k spans anchors a = k+1 .. b = k+1+h; its counterclockwise arc
  // holds arcs a+1 .. b.
  const int a = k + 1;
  const int b = k + 1 + chord_count();
  return region > a && region <= b;
}

ChordConfig chords_from_simplex(const SimplexPoint& x) {
  if (x.n() != 4 && x.n() != 6) {
    throw Error(ErrorCode::InvalidArgument, "chord configurations need a point of dimension 4 or 6");
  }
  ChordConfig c;
  c.n = x.n();
  c.x = x;
  double s = 0.0;
  for (int i = 0; i < c.n; ++i) {
    s += x[i];
    c.cumulative.push_back(i + 1 == c.n ? 1.0 : s);
    c.anchors.push_back(i + 1 == c.n ? Point{1.0, 0.0} : on_circle(s));
  }
  const int h = c.chord_count();
  for (int k = 0; k < h; ++k) {
    const double sa = c.cumulative[idx(k)];
    const double sb = c.cumulative[idx(k + h)];
    c.chords.push_back({c.anchors[idx(k)], c.anchors[idx(k + h)]});
    // The chord between angles alpha <= beta is the line through the
    // direction of the bisector at distance cos((beta - alpha) / 2).
    c.axis.push_back(on_circle(0.5 * (sa + sb)));
    c.level.push_back(std::cos(std::numbers::pi * (sb - sa)));
  }
  return c;
}

Point arc_midpoint(const ChordConfig& config, int region, double pull) {
  const double start = region == 1 ? 0.0 : config.cumulative[idx(region - 2)];
  const double mid = start + 0.5 * config.x[region - 1];
  return (1.0 - pull) * on_circle(mid);
}

std::vector<HalfPlane> region_halfplanes(const ChordConfig& config, int region) {
  std::vector<HalfPlane> out;
  if (!(config.x[region - 1] > 0.0)) return out;
  for (int k : {config.chord_before(region), config.chord_after(region)}) {
    const Point ax = config.axis[idx(k)];
    const double lv = config.level[idx(k)];
    if (config.region_on_arc_side(region, k)) {
      out.push_back({-1.0 * ax, -lv});
    } else {
      out.push_back({ax, lv});
    }
  }
  return out;
}

double body_region_slack(const ChordConfig& config, int region, const ConvexBody& body) {
  if (!(config.x[region - 1] > 0.0)) return -std::numeric_limits<double>::infinity();
  const auto planes = region_halfplanes(config, region);
  double slack = std::numeric_limits<double>::infinity();
  for (const Point& p : body.vertices()) {
    slack = std::min(slack, 1.0 - norm(p));
    for (const HalfPlane& h : planes) slack = std::min(slack, -h.eval(p));
  }
  return slack - kGeomEps;
}

bool region_contains(const ChordConfig& config, int region, Point p) {
  if (!(config.x[region - 1] > 0.0)) return false;
  if (!(norm(p) < 1.0 - kGeomEps)) return false;
  for (int k : {config.chord_before(region), config.chord_after(region)}) {
    const double v = dot(config.axis[idx(k)], p) - config.level[idx(k)];
    if (config.region_on_arc_side(region, k) ? !(v > kGeomEps) : !(v < -kGeomEps)) return false;
  }
  return true;
}

bool body_in_region(const ChordConfig& config, int region, const ConvexBody& body) {
  return std::all_of(body.vertices().begin(), body.vertices().end(),
                     [&](const Point& p) { return region_contains(config, region, p); });
}

std::vector<Point> region_polygon(const ChordConfig& config, int region, int sides) {
  const auto planes = region_halfplanes(config, region);
  if (planes.empty()) return {};
  std::vector<Point> poly = regular_polygon({0.0, 0.0}, 1.0, sides);
  for (const HalfPlane& h : planes) poly = clip_halfplane(poly, h);
  return poly;
}

CoverOracle induced_cover(const Families& families, int n) {
  if (static_cast<int>(families.size()) != n) {
    throw Error(ErrorCode::BadArity, "induced cover needs one family per cover");
  }
  CoverOracle oracle;
  oracle.n = n;
  // Configurations are recomputed per query; membership stays a pure function.
  oracle.membership = [families](int cover, int set, const SimplexPoint& x) {
    if (!(x[set] > 0.0)) return false;
    const ChordConfig config = chords_from_simplex(x);
    for (const ConvexBody& body : families[idx(cover)]) {
      if (body_in_region(config, set + 1, body)) return true;
    }
    return false;
  };
  oracle.margin = [families](int cover, int set, const SimplexPoint& x) {
    const ChordConfig config = chords_from_simplex(x);
    double best = -std::numeric_limits<double>::infinity();
    for (const ConvexBody& body : families[idx(cover)]) {
      best = std::max(best, body_region_slack(config, set + 1, body));
    }
    return best;
  };
  return oracle;
}

}  // namespace pierce
