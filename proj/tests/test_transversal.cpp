#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "pierce/error.hpp"
#include "pierce/generate.hpp"
#include "pierce/random.hpp"
#include "pierce/transversal.hpp"

using namespace pierce;

namespace {

std::vector<Point> verts(const ConvexBody& b) { return {b.vertices().begin(), b.vertices().end()}; }

ConvexBody pt(double x, double y) { return convex_hull(std::vector<Point>{{x, y}}); }

ConvexBody square_at(double cx, double cy, double h) {
  return convex_hull(std::vector<Point>{{cx - h, cy - h}, {cx + h, cy - h}, {cx + h, cy + h}, {cx - h, cy + h}});
}

ConvexBody random_polygon(Rng& rng, Point c, double r, int min_vertices = 1) {
  while (true) {
    std::vector<Point> v;
    const int k = uniform_int(rng, 3, 5);
    for (int i = 0; i < k; ++i) {
      const double t = uniform(rng, 0, 2 * M_PI), s = r * std::sqrt(uniform01(rng));
      v.push_back(c + Point{s * std::cos(t), s * std::sin(t)});
    }
    ConvexBody b = convex_hull(v);
    if (static_cast<int>(b.size()) >= min_vertices) return b;
  }
}

bool reverifies(const LineEq& l, std::span<const ConvexBody> bodies) {
  return std::all_of(bodies.begin(), bodies.end(), [&](const ConvexBody& b) { return body_line_hit(b, l); });
}

std::vector<oracle::Poly> polys(std::span<const ConvexBody> bodies) {
  std::vector<oracle::Poly> out;
  for (const ConvexBody& b : bodies) out.push_back(verts(b));
  return out;
}

// Bodies of planted-line families built directly, independent of the generator.
Family planted_family(Rng& rng, int n, int lines) {
  std::vector<LineEq> ls;
  for (int k = 0; k < lines; ++k) {
    const double t = uniform(rng, 0, M_PI);
    ls.push_back({std::cos(t), std::sin(t), uniform(rng, -0.3, 0.3)});
  }
  Family fam;
  for (int i = 0; i < n; ++i) {
    const LineEq& l = ls[static_cast<std::size_t>(i % lines)];
    const Point on = l.c * l.normal() + uniform(rng, -1, 1) * perp(l.normal());
    std::vector<Point> v{on};
    for (int k = 0; k < 3; ++k) v.push_back(on + Point{uniform(rng, -0.1, 0.1), uniform(rng, -0.1, 0.1)});
    fam.push_back(convex_hull(v));
  }
  return fam;
}

}  // namespace

TEST_SUITE("transversal") {

TEST_CASE("common_transversal examples") {
  const std::vector<ConvexBody> squares{square_at(0, 0, 0.5), square_at(10, 0, 0.5), square_at(20, 0, 0.5)};
  const auto l = common_transversal(squares);
  REQUIRE(l);
  CHECK(reverifies(*l, squares));

  const std::vector<ConvexBody> pts{pt(0, 0), pt(1, 1), pt(2, 0)};
  CHECK_FALSE(common_transversal(pts));
  CHECK_THROWS_AS(common_transversal(std::vector<ConvexBody>{}), Error);

  CHECK(common_transversal(std::vector<ConvexBody>{pt(3, 4)}));
  CHECK(common_transversal(std::vector<ConvexBody>{pt(3, 4), pt(3, 4)}));
}

TEST_CASE("planted transversal is found and re-verifies") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Family fam = planted_family(rng, 8, 1);
    const auto l = common_transversal(fam);
    REQUIRE(l);
    CHECK(reverifies(*l, fam));
  }
}

TEST_CASE("point triples: transversal iff collinear") {
  Rng rng(4);
  for (int i = 0; i < 3000; ++i) {
    Point a{uniform(rng, -1, 1), uniform(rng, -1, 1)}, b{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    Point c{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    if (i % 3 == 0) {
      // Exactly collinear on a lattice line.
      const int dx = uniform_int(rng, -3, 3), dy = uniform_int(rng, -3, 3);
      a = {double(uniform_int(rng, -5, 5)), double(uniform_int(rng, -5, 5))};
      b = a + Point{double(dx), double(dy)};
      c = a + Point{double(-2 * dx), double(-2 * dy)};
    }
    const std::vector<ConvexBody> bodies{convex_hull(std::vector<Point>{a}), convex_hull(std::vector<Point>{b}),
                                         convex_hull(std::vector<Point>{c})};
    const auto l = common_transversal(bodies);
    CHECK(l.has_value() == (orient_exact(a, b, c) == 0));
    if (l) CHECK(reverifies(*l, bodies));
  }
}

TEST_CASE("candidate enumeration agrees with all vertex pairs") {
  Rng rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<ConvexBody> bodies;
    const int k = uniform_int(rng, 2, 5);
    for (int i = 0; i < k; ++i) bodies.push_back(random_polygon(rng, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.4));
    const auto fast = common_transversal(bodies);
    const auto slow = common_transversal_all_pairs(bodies);
    const auto ref = oracle::transversal_all_pairs(polys(bodies));
    CHECK(fast.has_value() == ref.has_value());
    CHECK(slow.has_value() == ref.has_value());
    if (fast) {
      CHECK(reverifies(*fast, bodies));
      // Monotonicity: every subset keeps a transversal.
      for (int drop = 0; drop < k; ++drop) {
        std::vector<ConvexBody> sub;
        for (int i = 0; i < k; ++i) {
          if (i != drop) sub.push_back(bodies[static_cast<std::size_t>(i)]);
        }
        CHECK(common_transversal(sub));
      }
    }
  }
}

TEST_CASE("check_T_r examples") {
  Family around_origin;
  Rng rng(9);
  for (int i = 0; i < 12; ++i) {
    std::vector<Point> v{{0, 0}};
    for (int k = 0; k < 3; ++k) v.push_back({uniform(rng, -1, 1), uniform(rng, -1, 1)});
    around_origin.push_back(convex_hull(v));
  }
  CHECK(check_T_r(around_origin, 3).holds);
  CHECK(check_T_r(around_origin, 4).holds);

  const Family pts{pt(0, 0), pt(1, 1), pt(2, 0)};
  const HypothesisReport r = check_T_r(pts, 3);
  CHECK_FALSE(r.holds);
  CHECK(r.property == Property::T3);
  CHECK(r.witness == std::vector<SetRef>{{1, 0}, {1, 1}, {1, 2}});

  CHECK(check_T_r(Family{pt(0, 0), pt(1, 1)}, 3).holds);
  CHECK_THROWS_AS(check_T_r(pts, 5), Error);
  try {
    check_T_r(pts, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedR);
  }
  Family big(81, pt(0, 0));
  try {
    check_T_r(big, 3);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("check_T_r matches an independent triple loop on planted families") {
  Rng rng(12);
  for (int trial = 0; trial < 6; ++trial) {
    const Family fam = planted_family(rng, 20, 3);
    const auto ps = polys(fam);
    std::optional<std::array<int, 3>> first;
    int triples = 0;
    for (int i = 0; i < 20 && !first; ++i) {
      for (int j = i + 1; j < 20 && !first; ++j) {
        for (int k = j + 1; k < 20 && !first; ++k) {
          ++triples;
          if (!oracle::transversal_all_pairs({ps[i], ps[j], ps[k]})) first = std::array<int, 3>{i, j, k};
        }
      }
    }
    const HypothesisReport r = check_T_r(fam, 3, 2);
    CHECK(r.holds == !first.has_value());
    if (first) {
      CHECK(r.witness == std::vector<SetRef>{{2, (*first)[0]}, {2, (*first)[1]}, {2, (*first)[2]}});
    } else {
      CHECK(triples == 1140);
    }
  }
}

TEST_CASE("tight_triple examples") {
  CHECK(tight_triple(pt(0, 0), pt(1, 0), pt(2, 0)));
  CHECK_FALSE(tight_triple(pt(0, 0), pt(1, 0), pt(0, 1)));
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Family fam = planted_family(rng, 3, 1);
    CHECK(tight_triple(fam[0], fam[1], fam[2]));
  }
}

TEST_CASE("tight_triple is symmetric") {
  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<ConvexBody, 3> t{random_polygon(rng, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.3),
                                random_polygon(rng, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.3),
                                random_polygon(rng, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.3)};
    const bool base = tight_triple(t[0], t[1], t[2]);
    std::array<int, 3> p{0, 1, 2};
    while (std::next_permutation(p.begin(), p.end())) CHECK(tight_triple(t[p[0]], t[p[1]], t[p[2]]) == base);
  }
}

TEST_CASE("tight_triple agrees with the grid oracle") {
  Rng rng(15);
  int band = 0, yes = 0, no = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ConvexBody a = random_polygon(rng, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.5, 3);
    const ConvexBody b = random_polygon(rng, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.5, 3);
    const ConvexBody c = random_polygon(rng, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.5, 3);
    const auto v = oracle::tight_by_grid(verts(a), verts(b), verts(c), 200);
    const bool got = tight_triple(a, b, c);
    if (v == oracle::Verdict::Band) {
      ++band;
      continue;
    }
    (v == oracle::Verdict::Yes ? yes : no)++;
    CHECK(got == (v == oracle::Verdict::Yes));
  }
  CHECK(yes > 20);
  CHECK(no > 20);
  CHECK(band < 20);
}

TEST_CASE("colorful tight-triple condition") {
  SUBCASE("six copies of an x-axis family") {
    Rng rng(16);
    Family fam;
    for (int i = 0; i < 8; ++i) {
      const double x = uniform(rng, -1, 1);
      fam.push_back(convex_hull(std::vector<Point>{{x, 0}, {x + 0.1, uniform(rng, 0, 0.2)}, {x, -uniform(rng, 0, 0.2)}}));
    }
    CHECK(check_colorful_tight(Families(6, fam)).holds);
    CHECK(check_colorful_tight(expand_families({fam}, 6)).holds);
  }
  SUBCASE("triangle vertices split across three colors") {
    // The filler square forms a tight triple with anything inside it.
    Families fams(6, Family{square_at(0.5, 0.5, 1.5)});
    fams[1].push_back(pt(0, 0));
    fams[3].push_back(pt(1, 0));
    fams[4].push_back(pt(0, 1));
    const HypothesisReport r = check_colorful_tight(fams);
    CHECK_FALSE(r.holds);
    CHECK(r.property == Property::ColorfulTightTriples);
    REQUIRE(r.witness.size() == 3);
    CHECK(r.witness == std::vector<SetRef>{{2, 1}, {4, 1}, {5, 1}});
  }
  SUBCASE("arity") {
    CHECK_THROWS_AS(check_colorful_tight(Families(5, Family{pt(0, 0)})), Error);
    CHECK_THROWS_AS(check_colorful_T4(Families(3, Family{pt(0, 0)})), Error);
  }
}

TEST_CASE("colorful tight check matches an independent triple loop") {
  Rng rng(18);
  for (int trial = 0; trial < 12; ++trial) {
    Families fams;
    for (int f = 0; f < 6; ++f) {
      Family fam;
      for (int i = 0; i < 3; ++i) fam.push_back(random_polygon(rng, {uniform(rng, -0.6, 0.6), uniform(rng, -0.6, 0.6)}, 0.5, 3));
      fams.push_back(fam);
    }
    bool holds = true;
    for (int f = 0; f < 6 && holds; ++f) {
      for (int g = f + 1; g < 6 && holds; ++g) {
        for (int h = g + 1; h < 6 && holds; ++h) {
          for (const ConvexBody& a : fams[f]) {
            for (const ConvexBody& b : fams[g]) {
              for (const ConvexBody& c : fams[h]) {
                const auto ab = oracle::join(verts(a), verts(b));
                const auto ac = oracle::join(verts(a), verts(c));
                const auto bc = oracle::join(verts(b), verts(c));
                holds = holds && oracle::triple_intersect_clip(ab, ac, bc);
              }
            }
          }
        }
      }
    }
    const HypothesisReport r = check_colorful_tight(fams);
    CHECK(r.holds == holds);
    if (!r.holds) {
      REQUIRE(r.witness.size() == 3);
      const auto& w = r.witness;
      CHECK_FALSE(tight_triple(fams[w[0].family - 1][w[0].index], fams[w[1].family - 1][w[1].index],
                               fams[w[2].family - 1][w[2].index]));
    }
  }
}

TEST_CASE("T(3) implies the colorful condition on six replicas") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Families fams = to_families(generate({"planted3", 12, 1, 3, seed}));
    REQUIRE(check_T_r(fams[0], 3).holds);
    CHECK(check_colorful_tight(expand_families(fams, 6)).holds);
    CHECK(check_tight_triples(fams[0]).holds);
  }
}

TEST_CASE("colorful T(4)") {
  Families fams(4, Family{pt(0, 0)});
  fams[1].push_back(pt(1, 0));
  CHECK(check_colorful_T4(fams).holds);
  fams[2].push_back(pt(0, 1));
  fams[3].push_back(pt(1, 1));
  const HypothesisReport r = check_colorful_T4(fams);
  CHECK_FALSE(r.holds);
  CHECK(r.witness.size() == 4);
}

TEST_CASE("expand_families repeats cyclically") {
  const Families fams{Family{pt(0, 0)}, Family{pt(1, 0)}};
  const Families e = expand_families(fams, 6);
  REQUIRE(e.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(e[i] == fams[i % 2]);
}

}  // TEST_SUITE
