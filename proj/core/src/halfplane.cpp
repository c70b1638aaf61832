#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "pierce/geometry.hpp"

namespace pierce {

std::vector<HalfPlane> halfplanes_of(const ConvexBody& body) {
  const auto v = body.vertices();
  std::vector<HalfPlane> out;
  if (v.size() == 1) {
    const Point p = v[0];
    out = {{{1, 0}, p.x}, {{-1, 0}, -p.x}, {{0, 1}, p.y}, {{0, -1}, -p.y}};
    return out;
  }
  if (v.size() == 2) {
    const Point d = (1.0 / distance(v[0], v[1])) * (v[1] - v[0]);
    const Point n = perp(d);
    out = {{n, dot(n, v[0])},
           {-1.0 * n, -dot(n, v[0])},
           {d, dot(d, v[1])},
           {-1.0 * d, -dot(d, v[0])}};
    return out;
  }
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point e = v[(i + 1) % v.size()] - v[i];
    const Point n = (1.0 / norm(e)) * Point{e.y, -e.x};
    out.push_back({n, dot(n, v[i])});
  }
  return out;
}

bool halfplanes_feasible(std::span<const HalfPlane> planes, double eps) {
  if (planes.empty()) return true;

  double bound = 1.0;
  for (const HalfPlane& h : planes) bound = std::max(bound, std::abs(h.offset));
  bound = 4.0 * bound + 1.0;

  // Bounding box first (never shuffled, never relaxed), then the relaxed
  // constraints in a fixed pseudo-random order.
  std::vector<HalfPlane> cons = {
      {{1, 0}, bound}, {{-1, 0}, bound}, {{0, 1}, bound}, {{0, -1}, bound}};
  const std::size_t box = cons.size();
  std::vector<std::size_t> order(planes.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(0x5eed1u);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i : order) cons.push_back({planes[i].normal, planes[i].offset + eps});

  const Point objective{1.0, 0.6180339887498949};
  Point v{bound, bound};
  const double tie = 1e-12 * bound;

  for (std::size_t i = box; i < cons.size(); ++i) {
    const HalfPlane& h = cons[i];
    if (h.eval(v) <= tie) continue;

    // New optimum lies on the boundary line of h.
    const Point base = h.offset * h.normal;
    const Point dir = perp(h.normal);
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < i; ++j) {
      const HalfPlane& g = cons[j];
      const double denom = dot(g.normal, dir);
      const double num = g.offset - dot(g.normal, base);
      if (std::abs(denom) < 1e-14) {
        if (num < -tie) return false;
        continue;
      }
      const double t = num / denom;
      if (denom > 0.0) {
        hi = std::min(hi, t);
      } else {
        lo = std::max(lo, t);
      }
    }
    if (lo > hi + tie) return false;
    const double t = dot(objective, dir) > 0.0 ? hi : lo;
    v = base + t * dir;
  }
  return true;
}

bool bodies_intersect(const ConvexBody& f, const ConvexBody& g, const ConvexBody& h, double eps) {
  std::vector<HalfPlane> planes = halfplanes_of(f);
  for (const ConvexBody* b : {&g, &h}) {
    auto more = halfplanes_of(*b);
    planes.insert(planes.end(), more.begin(), more.end());
  }
  return halfplanes_feasible(planes, eps);
}

}  // namespace pierce
