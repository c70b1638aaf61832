#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace pierce {

/// Global geometric tolerance. All predicates use closed semantics at this
/// scale: a body within kGeomEps of a line counts as hit.
inline constexpr double kGeomEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline bool is_finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Sign of the signed area of abc, computed exactly (adaptive precision).
int orient_exact(Point a, Point b, Point c);

/// Tolerant orientation: 0 when the triangle's height over its longest side
/// is at most kGeomEps, otherwise the exact sign.
int orient(Point a, Point b, Point c);

/// Closed convex polygon in canonical form: counterclockwise, no repeated
/// consecutive vertices, no collinear interior vertices. Degenerate bodies
/// (one vertex = point, two vertices = segment) are first-class.
class ConvexBody {
 public:
  /// Hull of the given points. Throws Error(EmptyInput) for an empty span.
  static ConvexBody hull_of(std::span<const Point> points);

  /// Wraps vertices that are already canonical (e.g. an image of a canonical
  /// body under a similarity). No hull is recomputed.
  static ConvexBody from_canonical(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }

  friend bool operator==(const ConvexBody&, const ConvexBody&) = default;

 private:
  explicit ConvexBody(std::vector<Point> v) : vertices_(std::move(v)) {}
  std::vector<Point> vertices_;
};

ConvexBody convex_hull(std::span<const Point> points);

/// Line a*x + b*y = c with a^2 + b^2 = 1.
struct LineEq {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;

  /// Line through two distinct points.
  static LineEq through(Point p, Point q);
  /// Line with the given direction through p.
  static LineEq with_direction(Point p, Point direction);

  double eval(Point p) const { return a * p.x + b * p.y - c; }
  Point normal() const { return {a, b}; }
  /// Same line with the sign convention: first nonzero of (a, b) positive.
  LineEq canonical() const;

  friend bool operator==(const LineEq&, const LineEq&) = default;
};

/// Segment between two points of the unit circle; p == q is allowed.
struct Chord {
  Point p;
  Point q;
};

/// Closed halfplane normal . z <= offset, with |normal| = 1.
struct HalfPlane {
  Point normal;
  double offset = 0.0;

  double eval(Point z) const { return dot(normal, z) - offset; }
};

/// Similarity z -> scale * (z - shift).
struct AffineMap {
  double scale = 1.0;
  Point shift;

  Point apply(Point z) const { return scale * (z - shift); }
  Point invert(Point w) const { return (1.0 / scale) * w + shift; }
  ConvexBody apply(const ConvexBody& body) const;
  /// Line given in mapped coordinates, expressed in source coordinates.
  LineEq pull_back(const LineEq& line) const;
  /// Line given in source coordinates, expressed in mapped coordinates.
  LineEq push_forward(const LineEq& line) const;
};

using Family = std::vector<ConvexBody>;
using Families = std::vector<Family>;

bool body_line_hit(const ConvexBody& body, const LineEq& line, double eps = kGeomEps);

/// Distance from the body to the line; 0 when they meet.
double body_line_distance(const ConvexBody& body, const LineEq& line);

double point_segment_distance(Point p, Point a, Point b);
double segment_segment_distance(Point a, Point b, Point c, Point d);
double point_body_distance(Point p, const ConvexBody& body);

/// Euclidean distance between the body and the (possibly degenerate) chord.
double body_segment_distance(const ConvexBody& body, const Chord& chord);

/// Halfplane description of a body. Points and segments are encoded with
/// paired opposite halfplanes so every body is a bounded intersection.
std::vector<HalfPlane> halfplanes_of(const ConvexBody& body);

/// Whether the halfplanes, each relaxed by eps, have a common point.
/// Randomized incremental 2D LP with a fixed shuffle seed.
bool halfplanes_feasible(std::span<const HalfPlane> planes, double eps = kGeomEps);

bool bodies_intersect(const ConvexBody& f, const ConvexBody& g, const ConvexBody& h,
                      double eps = kGeomEps);

/// Sutherland-Hodgman clip of a convex polygon against one halfplane.
std::vector<Point> clip_halfplane(std::span<const Point> polygon, const HalfPlane& plane);

double polygon_area(std::span<const Point> polygon);
Point polygon_centroid(std::span<const Point> polygon);

/// Regular polygon with `sides` vertices at the given radius around center.
std::vector<Point> regular_polygon(Point center, double radius, int sides, double phase = 0.0);

struct NormalizedFamilies {
  AffineMap map;
  Families families;
};

inline constexpr double kDiskMargin = 0.05;

/// Similarity placing every body inside the closed disk of radius
/// 1 - kDiskMargin centered at the origin. Throws Error(EmptyInput) when no
/// family has a body.
NormalizedFamilies normalize_to_disk(const Families& families);

}  // namespace pierce
