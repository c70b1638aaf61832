#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "pierce/geometry.hpp"

namespace pierce {
namespace {

struct Pair {
  double hi;
  double lo;
};

Pair two_sum(double a, double b) {
  const double s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  return {s, (a - av) + (b - bv)};
}

Pair two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Shewchuk's grow-expansion with zero elimination. `e` holds a nonoverlapping
// expansion in increasing magnitude order.
void grow_expansion(std::vector<double>& e, double b) {
  double q = b;
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Pair s = two_sum(q, e[i]);
    q = s.hi;
    if (s.lo != 0.0) e[out++] = s.lo;
  }
  e.resize(out);
  if (q != 0.0) e.push_back(q);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

int orient_exact(Point a, Point b, Point c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  const double detsum = std::abs(detleft) + std::abs(detright);
  constexpr double kEps = std::numeric_limits<double>::epsilon() * 0.5;
  constexpr double kErrBound = (3.0 + 16.0 * kEps) * kEps;
  if (std::abs(det) > kErrBound * detsum) return sign_of(det);

  // Exact: expand into six coordinate products and sum them without error.
  const std::array<Pair, 6> terms = {
      two_product(a.x, b.y),  two_product(-a.x, c.y), two_product(-c.x, b.y),
      two_product(-a.y, b.x), two_product(a.y, c.x),  two_product(c.y, b.x),
  };
  std::vector<double> e;
  e.reserve(16);
  for (const Pair& t : terms) {
    grow_expansion(e, t.lo);
    grow_expansion(e, t.hi);
  }
  return e.empty() ? 0 : sign_of(e.back());
}

int orient(Point a, Point b, Point c) {
  const double det = cross(b - a, c - a);
  const double longest = std::max({distance(a, b), distance(b, c), distance(c, a)});
  if (std::abs(det) <= kGeomEps * longest) return 0;
  return orient_exact(a, b, c);
}

}  // namespace pierce
