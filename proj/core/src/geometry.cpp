#include "pierce/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pierce/error.hpp"

namespace pierce {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnsupportedR: return "UnsupportedR";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::KkmConditionViolated: return "KkmConditionViolated";
    case ErrorCode::GeneratorExhausted: return "GeneratorExhausted";
    case ErrorCode::SolverFailed: return "SolverFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::UnknownShapeKind: return "UnknownShapeKind";
    case ErrorCode::EmptyShape: return "EmptyShape";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::BadRadius: return "BadRadius";
    case ErrorCode::TooManyFamilies: return "TooManyFamilies";
    case ErrorCode::NoFamilies: return "NoFamilies";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ConvexBody

ConvexBody ConvexBody::hull_of(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "convex hull of an empty point set");

  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return ConvexBody(std::move(pts));

  // Andrew's monotone chain; tolerant orient drops collinear vertices.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  std::vector<Point> out;
  out.reserve(hull.size());
  for (const Point& p : hull) {
    if (out.empty() || distance(out.back(), p) > kGeomEps) out.push_back(p);
  }
  while (out.size() > 1 && distance(out.front(), out.back()) <= kGeomEps) out.pop_back();
  return ConvexBody(std::move(out));
}

ConvexBody ConvexBody::from_canonical(std::vector<Point> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::EmptyInput, "body without vertices");
  return ConvexBody(std::move(vertices));
}

ConvexBody convex_hull(std::span<const Point> points) { return ConvexBody::hull_of(points); }

// ---------------------------------------------------------------------------
// Lines and maps

LineEq LineEq::through(Point p, Point q) { return with_direction(p, q - p); }

LineEq LineEq::with_direction(Point p, Point direction) {
  const double len = norm(direction);
  if (!(len > 0.0)) throw Error(ErrorCode::InvalidArgument, "line direction is zero");
  const Point n = perp((1.0 / len) * direction);
  return LineEq{n.x, n.y, dot(n, p)};
}

LineEq LineEq::canonical() const {
  if (a < 0.0 || (a == 0.0 && b < 0.0)) return LineEq{-a, -b, -c};
  return *this;
}

ConvexBody AffineMap::apply(const ConvexBody& body) const {
  std::vector<Point> v;
  v.reserve(body.size());
  for (const Point& p : body.vertices()) v.push_back(apply(p));
  return ConvexBody::from_canonical(std::move(v));
}

LineEq AffineMap::pull_back(const LineEq& line) const {
  return LineEq{line.a, line.b, line.c / scale + line.a * shift.x + line.b * shift.y};
}

LineEq AffineMap::push_forward(const LineEq& line) const {
  return LineEq{line.a, line.b, scale * (line.c - line.a * shift.x - line.b * shift.y)};
}

// ---------------------------------------------------------------------------
// Distances and hits

bool body_line_hit(const ConvexBody& body, const LineEq& line, double eps) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point& p : body.vertices()) {
    const double v = line.eval(p);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return lo <= eps && hi >= -eps;
}

double body_line_distance(const ConvexBody& body, const LineEq& line) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point& p : body.vertices()) {
    const double v = line.eval(p);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo <= 0.0 && hi >= 0.0) return 0.0;
  return lo > 0.0 ? lo : -hi;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

double segment_segment_distance(Point a, Point b, Point c, Point d) {
  const int o1 = orient_exact(a, b, c);
  const int o2 = orient_exact(a, b, d);
  const int o3 = orient_exact(c, d, a);
  const int o4 = orient_exact(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

double point_body_distance(Point p, const ConvexBody& body) {
  const auto v = body.vertices();
  if (v.size() == 1) return distance(p, v[0]);
  if (v.size() == 2) return point_segment_distance(p, v[0], v[1]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    if (cross(b - a, p - a) < 0.0) inside = false;
    best = std::min(best, point_segment_distance(p, a, b));
  }
  return inside ? 0.0 : best;
}

double body_segment_distance(const ConvexBody& body, const Chord& chord) {
  const auto v = body.vertices();
  if (v.size() == 1) return point_segment_distance(v[0], chord.p, chord.q);
  if (v.size() == 2) return segment_segment_distance(v[0], v[1], chord.p, chord.q);
  double best = std::min(point_body_distance(chord.p, body), point_body_distance(chord.q, body));
  if (best == 0.0) return 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, segment_segment_distance(v[i], v[(i + 1) % v.size()], chord.p, chord.q));
    if (best == 0.0) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Polygons

std::vector<Point> clip_halfplane(std::span<const Point> polygon, const HalfPlane& plane) {
  std::vector<Point> out;
  const std::size_t n = polygon.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = polygon[i];
    const Point& nxt = polygon[(i + 1) % n];
    const double fc = plane.eval(cur);
    const double fn = plane.eval(nxt);
    if (fc <= 0.0) out.push_back(cur);
    if ((fc < 0.0 && fn > 0.0) || (fc > 0.0 && fn < 0.0)) {
      const double t = fc / (fc - fn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

double polygon_area(std::span<const Point> polygon) {
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    twice += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return 0.5 * twice;
}

Point polygon_centroid(std::span<const Point> polygon) {
  if (polygon.empty()) return {};
  const double area = polygon_area(polygon);
  if (std::abs(area) < 1e-14) {
    Point sum;
    for (const Point& p : polygon) sum = sum + p;
    return (1.0 / static_cast<double>(polygon.size())) * sum;
  }
  Point acc;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % polygon.size()];
    acc = acc + cross(a, b) * (a + b);
  }
  return (1.0 / (6.0 * area)) * acc;
}

std::vector<Point> regular_polygon(Point center, double radius, int sides, double phase) {
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    const double t = phase + 2.0 * std::numbers::pi * i / sides;
    v.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
  }
  return v;
}

// ---------------------------------------------------------------------------
// Normalization

NormalizedFamilies normalize_to_disk(const Families& families) {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  bool any = false;
  for (const Family& fam : families) {
    for (const ConvexBody& body : fam) {
      for (const Point& p : body.vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
        any = true;
      }
    }
  }
  if (!any) throw Error(ErrorCode::EmptyInput, "no bodies to normalize");

  const Point center{0.5 * (xmin + xmax), 0.5 * (ymin + ymax)};
  double radius = 0.0;
  for (const Family& fam : families) {
    for (const ConvexBody& body : fam) {
      for (const Point& p : body.vertices()) radius = std::max(radius, distance(p, center));
    }
  }

  NormalizedFamilies out;
  out.map.shift = center;
  out.map.scale = radius > 1e-12 ? (1.0 - kDiskMargin) / radius : 1.0;
  out.families.reserve(families.size());
  for (const Family& fam : families) {
    Family mapped;
    mapped.reserve(fam.size());
    for (const ConvexBody& body : fam) mapped.push_back(out.map.apply(body));
    out.families.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace pierce
