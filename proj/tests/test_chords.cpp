#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "pierce/chords.hpp"
#include "pierce/random.hpp"

using namespace pierce;

namespace {

constexpr double kPi = std::numbers::pi;

Point polar(double r, double deg) { return {r * std::cos(deg * kPi / 180), r * std::sin(deg * kPi / 180)}; }

SimplexPoint interior_point(Rng& rng, int n, double floor) {
  while (true) {
    SimplexPoint x = random_simplex_point(n, rng);
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && x[i] > floor;
    if (ok) return x;
  }
}

ConvexBody tiny_square(Point c, double h) {
  return convex_hull(std::vector<Point>{c + Point{-h, -h}, c + Point{h, -h}, c + Point{h, h}, c + Point{-h, h}});
}

double overlap_area(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.size() < 3 || b.size() < 3) return 0.0;
  return oracle::area(oracle::clip_by(a, b, 0.0));
}

}  // namespace

TEST_SUITE("chords") {

TEST_CASE("barycentric configuration is a regular hexagon of diameters") {
  const ChordConfig c = chords_from_simplex(SimplexPoint::barycenter(6));
  for (int i = 0; i < 6; ++i) {
    const Point want = polar(1, 60.0 * (i + 1));
    CHECK(c.anchors[static_cast<std::size_t>(i)].x == doctest::Approx(want.x));
    CHECK(c.anchors[static_cast<std::size_t>(i)].y == doctest::Approx(want.y));
  }
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(c.line(k).c) <= 1e-12);
    const Chord& ch = c.chords[static_cast<std::size_t>(k)];
    CHECK(distance(ch.p, ch.q) == doctest::Approx(2.0));
  }
  // Chords join f1-f4, f2-f5, f3-f6.
  CHECK(c.chords[0].p == c.anchors[0]);
  CHECK(c.chords[0].q == c.anchors[3]);
  CHECK(c.chords[2].q == c.anchors[5]);
}

TEST_CASE("vertex e6 pins every anchor at (1, 0)") {
  const ChordConfig c = chords_from_simplex(SimplexPoint::vertex(6, 5));
  for (const Point& a : c.anchors) {
    CHECK(a.x == doctest::Approx(1.0));
    CHECK(std::abs(a.y) <= 1e-12);
  }
  for (int i = 1; i <= 5; ++i) {
    CHECK(region_halfplanes(c, i).empty());
    CHECK_FALSE(region_contains(c, i, {0.0, 0.0}));
  }
}

TEST_CASE("anchors follow cumulative angles") {
  const SimplexPoint x({0.3, 0.1, 0.2, 0.15, 0.15, 0.1});
  const ChordConfig c = chords_from_simplex(x);
  const double s[6] = {0.3, 0.4, 0.6, 0.75, 0.9, 1.0};
  for (int i = 0; i < 6; ++i) {
    CHECK(c.anchors[static_cast<std::size_t>(i)].x == doctest::Approx(std::cos(2 * kPi * s[i])).epsilon(1e-12));
    CHECK(c.anchors[static_cast<std::size_t>(i)].y == doctest::Approx(std::sin(2 * kPi * s[i])).scale(1).epsilon(1e-12));
  }
  // The line through each chord passes through both endpoints.
  for (int k = 0; k < 3; ++k) {
    const Chord& ch = c.chords[static_cast<std::size_t>(k)];
    CHECK(std::abs(c.line(k).eval(ch.p)) <= 1e-12);
    CHECK(std::abs(c.line(k).eval(ch.q)) <= 1e-12);
  }
}

TEST_CASE("anchor invariant on random points") {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = trial % 2 ? 4 : 6;
    const ChordConfig c = chords_from_simplex(random_simplex_point(n, rng));
    CHECK(c.anchors.back() == Point{1.0, 0.0});
    for (int i = 1; i < n; ++i) CHECK(c.cumulative[static_cast<std::size_t>(i)] >= c.cumulative[static_cast<std::size_t>(i - 1)]);
    for (const Point& a : c.anchors) CHECK(norm(a) == doctest::Approx(1.0));
  }
  CHECK_THROWS(chords_from_simplex(SimplexPoint::barycenter(5)));
}

TEST_CASE("region_contains examples") {
  const ChordConfig hex = chords_from_simplex(SimplexPoint::barycenter(6));
  CHECK(region_contains(hex, 1, polar(0.9, 30)));
  CHECK_FALSE(region_contains(hex, 2, polar(0.9, 30)));
  for (int i = 1; i <= 6; ++i) CHECK_FALSE(region_contains(hex, i, {2.0, 0.0}));
  const ChordConfig gap = chords_from_simplex(SimplexPoint({0.3, 0.0, 0.2, 0.2, 0.2, 0.1}));
  Rng rng(42);
  for (int t = 0; t < 1000; ++t) CHECK_FALSE(region_contains(gap, 2, {uniform(rng, -1, 1), uniform(rng, -1, 1)}));
}

TEST_CASE("pulled arc midpoints lie in their regions") {
  Rng rng(43);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = trial % 2 ? 4 : 6;
    const ChordConfig c = chords_from_simplex(random_simplex_point(n, rng));
    for (int i = 1; i <= n; ++i) {
      if (c.x[i - 1] > 2 * kArcPull) CHECK(region_contains(c, i, arc_midpoint(c, i)));
    }
  }
}

TEST_CASE("regions are convex") {
  Rng rng(44);
  int pairs = 0;
  while (pairs < 10000) {
    const ChordConfig c = chords_from_simplex(random_simplex_point(6, rng));
    const int i = uniform_int(rng, 1, 6);
    const Point p{uniform(rng, -1, 1), uniform(rng, -1, 1)}, q{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    if (!region_contains(c, i, p) || !region_contains(c, i, q)) continue;
    ++pairs;
    CHECK(region_contains(c, i, 0.5 * (p + q)));
  }
}

TEST_CASE("regions agree with the flood-fill raster") {
  Rng rng(45);
  const oracle::Raster raster(400);
  const double band = 2 * raster.pitch;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = trial % 4 == 3 ? 4 : 6;
    const ChordConfig c = chords_from_simplex(interior_point(rng, n, 0.03));
    for (int i = 1; i <= n; ++i) {
      const Chord& before = c.chords[static_cast<std::size_t>(c.chord_before(i))];
      const Chord& after = c.chords[static_cast<std::size_t>(c.chord_after(i))];
      const std::vector<std::pair<Point, Point>> walls{{before.p, before.q}, {after.p, after.q}};
      auto near_wall = [&](Point p) {
        return oracle::seg_point_dist(p, before.p, before.q) <= band ||
               oracle::seg_point_dist(p, after.p, after.q) <= band || std::abs(norm(p) - 1.0) <= band;
      };
      // Seed: walk inward from the arc midpoint to the first pixel clear of the band.
      const double mid = (i == 1 ? 0.0 : c.cumulative[static_cast<std::size_t>(i - 2)]) + 0.5 * c.x[i - 1];
      const Point dir{std::cos(2 * kPi * mid), std::sin(2 * kPi * mid)};
      std::optional<std::pair<int, int>> seed;
      for (double r = 1.0; r > 0 && !seed; r -= raster.pitch / 4) {
        const auto px = raster.pixel_of(r * dir);
        if (!near_wall(raster.center(px.first, px.second))) seed = px;
      }
      REQUIRE(seed);
      const auto filled = raster.flood(*seed, walls);
      int disagreements = 0, compared = 0;
      for (int py = 0; py < raster.res; ++py) {
        for (int px = 0; px < raster.res; ++px) {
          const Point p = raster.center(px, py);
          if (norm(p) >= 1.0 || near_wall(p)) continue;
          ++compared;
          disagreements += region_contains(c, i, p) != (filled[static_cast<std::size_t>(py * raster.res + px)] != 0);
        }
      }
      CHECK(compared > 50000);
      CHECK(disagreements == 0);
    }
  }
}

TEST_CASE("alternating regions are pairwise disjoint") {
  Rng rng(46);
  for (int trial = 0; trial < 2000; ++trial) {
    const ChordConfig c = chords_from_simplex(interior_point(rng, 6, 0.01));
    bool some_group = false;
    for (const auto& group : {std::array<int, 3>{1, 3, 5}, std::array<int, 3>{2, 4, 6}}) {
      bool disjoint = true;
      for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
          disjoint = disjoint && overlap_area(region_polygon(c, group[a]), region_polygon(c, group[b])) <= 1e-12;
        }
      }
      some_group = some_group || disjoint;
    }
    CHECK(some_group);
  }
}

TEST_CASE("body_in_region examples") {
  const ChordConfig hex = chords_from_simplex(SimplexPoint::barycenter(6));
  CHECK(body_in_region(hex, 1, tiny_square(polar(0.85, 30), 0.02)));
  const ConvexBody straddle = tiny_square(polar(0.5, 60), 0.05);
  for (int i = 1; i <= 6; ++i) CHECK_FALSE(body_in_region(hex, i, straddle));
  const ConvexBody on_chord = convex_hull(std::vector<Point>{polar(0.4, 60)});
  for (int i = 1; i <= 6; ++i) CHECK_FALSE(body_in_region(hex, i, on_chord));
  CHECK(body_region_slack(hex, 1, tiny_square(polar(0.85, 30), 0.02)) > 0);
  CHECK(body_region_slack(hex, 1, straddle) < 0);
}

TEST_CASE("induced cover") {
  const SimplexPoint bary = SimplexPoint::barycenter(6);
  SUBCASE("point at the origin is on every diameter") {
    const CoverOracle o = induced_cover(Families(6, Family{convex_hull(std::vector<Point>{{0, 0}})}), 6);
    for (int j = 0; j < 6; ++j) {
      for (int i = 0; i < 6; ++i) CHECK_FALSE(o.membership(j, i, bary));
    }
  }
  SUBCASE("bodies hugging arc 3") {
    const Family hug{tiny_square(polar(0.9, 150), 0.03), tiny_square(polar(0.3, 0), 0.01)};
    const CoverOracle o = induced_cover(Families(6, hug), 6);
    for (int j = 0; j < 6; ++j) CHECK(o.membership(j, 2, bary));
    CHECK(o.margin(0, 2, bary) > 0);
  }
  SUBCASE("faces only reach their own regions") {
    Rng rng(47);
    Family fam;
    for (int k = 0; k < 12; ++k) fam.push_back(tiny_square(polar(uniform(rng, 0.2, 0.9), uniform(rng, 0, 360)), 0.02));
    const CoverOracle o = induced_cover(Families(6, fam), 6);
    for (int trial = 0; trial < 300; ++trial) {
      const double a = uniform01(rng);
      std::vector<double> x(6, 0.0);
      const int p = uniform_int(rng, 0, 5), q = (p + uniform_int(rng, 1, 5)) % 6;
      x[static_cast<std::size_t>(p)] = a;
      x[static_cast<std::size_t>(q)] += 1.0 - a;
      const SimplexPoint sx(x);
      for (int i = 0; i < 6; ++i) {
        if (i == p || i == q) continue;
        for (int j = 0; j < 6; ++j) CHECK_FALSE(o.membership(j, i, sx));
      }
    }
  }
  CHECK_THROWS(induced_cover(Families(5, Family{}), 6));
}

TEST_CASE("regions miss every body that avoids the chords") {
  // If no body of a family lies in any region, every body meets a chord.
  Rng rng(48);
  int triggered = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    Family fam;
    const int k = uniform_int(rng, 1, 2);
    for (int b = 0; b < k; ++b) fam.push_back(tiny_square(polar(uniform(rng, 0, 0.7), uniform(rng, 0, 360)), uniform(rng, 0.01, 0.2)));
    const ChordConfig c = chords_from_simplex(random_simplex_point(6, rng));
    bool in_some = false;
    for (const ConvexBody& b : fam) {
      for (int i = 1; i <= 6; ++i) in_some = in_some || body_in_region(c, i, b);
    }
    if (in_some) continue;
    ++triggered;
    for (const ConvexBody& b : fam) {
      double best = 1e300;
      for (const Chord& ch : c.chords) best = std::min(best, body_segment_distance(b, ch));
      CHECK(best <= kGeomEps);
    }
  }
  CHECK(triggered > 100);
}

}  // TEST_SUITE
