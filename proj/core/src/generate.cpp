#include "pierce/generate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "pierce/chords.hpp"
#include "pierce/error.hpp"
#include "pierce/random.hpp"
#include "pierce/transversal.hpp"

namespace pierce {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_line(const LineEq& l) { return fmt(l.a) + "," + fmt(l.b) + "," + fmt(l.c); }

Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

LineEq random_line(Rng& rng, double spread) {
  const double r = spread * std::sqrt(uniform01(rng));
  const Point q = r * unit(kTwoPi * uniform01(rng));
  return LineEq::with_direction(q, unit(std::numbers::pi * uniform01(rng)));
}

// Foot of the normal from the origin.
Point line_base(const LineEq& l) { return l.c * l.normal(); }
Point line_dir(const LineEq& l) { return perp(l.normal()); }

// Random convex body containing the anchor: a point, a segment through it,
// or the hull of a small cloud around it.
ConvexBody body_at(Rng& rng, Point anchor, double rad) {
  const double roll = uniform01(rng);
  if (roll < 0.12) return convex_hull(std::vector<Point>{anchor});
  if (roll < 0.27) {
    const Point u = uniform(rng, 0.3, 1.0) * rad * unit(kTwoPi * uniform01(rng));
    const double back = uniform(rng, 0.0, 1.0);
    return convex_hull(std::vector<Point>{anchor + u, anchor - back * u});
  }
  const Point center = anchor + 0.5 * rad * uniform01(rng) * unit(kTwoPi * uniform01(rng));
  std::vector<Point> pts{anchor};
  const int k = uniform_int(rng, 3, 6);
  for (int i = 0; i < k; ++i) {
    pts.push_back(center + uniform(rng, 0.4, 1.0) * rad * unit(kTwoPi * uniform01(rng)));
  }
  return convex_hull(pts);
}

// Tuples (as sorted family indices) that may accompany a body of family f in
// one colorful tuple of the cyclically expanded instance.
std::vector<std::vector<int>> partner_tuples(int families, int positions, int arity, int f) {
  std::set<std::vector<int>> out;
  std::vector<int> pos(static_cast<std::size_t>(positions));
  for (int p = 0; p < positions; ++p) pos[static_cast<std::size_t>(p)] = p % families;
  std::vector<bool> pick(static_cast<std::size_t>(positions), false);
  std::fill(pick.end() - arity, pick.end(), true);
  do {
    std::vector<int> fams;
    for (int p = 0; p < positions; ++p) {
      if (pick[static_cast<std::size_t>(p)]) fams.push_back(pos[static_cast<std::size_t>(p)]);
    }
    for (std::size_t drop = 0; drop < fams.size(); ++drop) {
      if (fams[drop] != f) continue;
      std::vector<int> rest;
      for (std::size_t i = 0; i < fams.size(); ++i) {
        if (i != drop) rest.push_back(fams[i]);
      }
      std::sort(rest.begin(), rest.end());
      out.insert(rest);
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  return {out.begin(), out.end()};
}

class Builder {
 public:
  explicit Builder(const GeneratorParams& p)
      : positions_(p.lines == 3 ? 6 : 4), arity_(p.lines == 3 ? 3 : 4), fams_(static_cast<std::size_t>(p.families)) {
    for (int f = 0; f < p.families; ++f) partners_.push_back(partner_tuples(p.families, positions_, arity_, f));
  }

  // Whether adding b to family f keeps the hypothesis.
  bool admissible(const ConvexBody& b, int f, bool check_t3) const {
    for (const auto& tuple : partners_[static_cast<std::size_t>(f)]) {
      if (!tuple_ok(b, f, tuple)) return false;
    }
    if (check_t3) {
      const Family& fam = fams_[static_cast<std::size_t>(f)];
      for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          const ConvexBody trio[3] = {b, fam[i], fam[j]};
          if (!common_transversal(trio)) return false;
        }
      }
    }
    return true;
  }

  void add(ConvexBody b, int f) { fams_[static_cast<std::size_t>(f)].push_back(std::move(b)); }
  Families& families() { return fams_; }

 private:
  bool tuple_ok(const ConvexBody& b, int f, const std::vector<int>& tuple) const {
    // The new body may also be chosen again at positions of its own family.
    auto pool = [&](int fam) {
      std::vector<const ConvexBody*> v;
      for (const ConvexBody& c : fams_[static_cast<std::size_t>(fam)]) v.push_back(&c);
      if (fam == f) v.push_back(&b);
      return v;
    };
    if (arity_ == 3) {
      const auto a = pool(tuple[0]);
      const auto c = pool(tuple[1]);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = tuple[0] == tuple[1] ? i : 0; j < c.size(); ++j) {
          if (!tight_triple(b, *a[i], *c[j])) return false;
        }
      }
      return true;
    }
    const auto a = pool(tuple[0]);
    const auto c = pool(tuple[1]);
    const auto d = pool(tuple[2]);
    for (const ConvexBody* x : a) {
      for (const ConvexBody* y : c) {
        for (const ConvexBody* z : d) {
          const ConvexBody four[4] = {b, *x, *y, *z};
          if (!common_transversal(four)) return false;
        }
      }
    }
    return true;
  }

  int positions_;
  int arity_;
  Families fams_;
  std::vector<std::vector<std::vector<int>>> partners_;
};

struct Anchor {
  Point point;
  double rad;
};

// Fills every family with n bodies drawn from `sample`, rejecting bodies
// that break the hypothesis. A body that keeps getting rejected means the
// earlier draws left no room; start over.
template <class Sample>
Families fill(const GeneratorParams& p, Rng& rng, bool check_hypothesis, bool check_t3, Sample sample) {
  const int stall_limit = std::max(1, std::min(2000, p.max_attempts / 8));
  Builder builder(p);
  int attempts = 0;
  for (int i = 0; i < p.n; ++i) {
    for (int f = 0; f < p.families; ++f) {
      int stalled = 0;
      while (true) {
        if (++attempts > p.max_attempts) {
          throw Error(ErrorCode::GeneratorExhausted,
                      "generator '" + p.kind + "' exceeded " + std::to_string(p.max_attempts) + " attempts");
        }
        const Anchor a = sample();
        ConvexBody body = body_at(rng, a.point, a.rad);
        if (!check_hypothesis || builder.admissible(body, f, check_t3)) {
          builder.add(std::move(body), f);
          break;
        }
        if (++stalled == stall_limit) {
          builder = Builder(p);
          i = 0;
          f = -1;
          break;
        }
      }
    }
  }
  return std::move(builder.families());
}

void validate(const GeneratorParams& p) {
  const auto& kinds = generator_kinds();
  if (std::find(kinds.begin(), kinds.end(), p.kind) == kinds.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown generator kind '" + p.kind + "'");
  }
  if (p.lines != 2 && p.lines != 3) throw Error(ErrorCode::InvalidArgument, "lines must be 2 or 3");
  const int max_families = p.lines == 3 ? 6 : 4;
  if (p.families < 1 || p.families > max_families) {
    throw Error(ErrorCode::InvalidArgument, "families must be in 1.." + std::to_string(max_families));
  }
  const int min_n = p.kind == "violator" ? (p.lines == 3 ? 3 : 4) : 1;
  if (p.n < min_n || p.n > 200) throw Error(ErrorCode::InvalidArgument, "n out of range");
}

// Tiny triangles at the corners of a large regular polygon: for three
// corners the pairwise hulls are thin edges with no common point; for four
// no line meets all of them.
std::vector<ConvexBody> violating_tuple(Rng& rng, int count) {
  const double phase = kTwoPi * uniform01(rng);
  std::vector<ConvexBody> out;
  for (int j = 0; j < count; ++j) {
    const Point c = 0.9 * unit(phase + kTwoPi * j / count);
    out.push_back(convex_hull(regular_polygon(c, 0.01, 3, uniform01(rng))));
  }
  return out;
}

std::string property_name(const GeneratorParams& p) { return p.lines == 3 ? "colorful-tight" : "colorful-t4"; }

}  // namespace

const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds{"stabbed", "planted3", "planted2", "plantedChords", "tightRandom",
                                              "violator"};
  return kinds;
}

InstanceFile generate(const GeneratorParams& p) {
  validate(p);
  Rng rng(p.seed);
  InstanceFile inst;
  inst.metadata["generator"] = p.kind;
  inst.metadata["seed"] = std::to_string(p.seed);
  inst.metadata["n"] = std::to_string(p.n);
  inst.metadata["lines"] = std::to_string(p.lines);
  inst.metadata["hypothesis"] = property_name(p);

  Families fams;
  const bool t3 = p.families == 1 && p.lines == 3 && p.kind != "tightRandom" && p.kind != "violator";
  if (p.kind == "stabbed" || p.kind == "violator") {
    const LineEq line = random_line(rng, 0.3);
    inst.metadata["planted_lines"] = fmt_line(line);
    fams = fill(p, rng, false, false, [&] {
      return Anchor{line_base(line) + uniform(rng, -0.8, 0.8) * line_dir(line), uniform(rng, 0.03, 0.15)};
    });
    if (p.kind == "violator") {
      const auto bad = violating_tuple(rng, p.lines == 3 ? 3 : 4);
      // Replace trailing bodies so every family keeps n members.
      std::vector<int> used(static_cast<std::size_t>(p.families), 0);
      std::string where;
      for (std::size_t j = 0; j < bad.size(); ++j) {
        const int f = static_cast<int>(j) % p.families;
        Family& fam = fams[static_cast<std::size_t>(f)];
        const std::size_t slot = fam.size() - 1 - static_cast<std::size_t>(used[static_cast<std::size_t>(f)]++);
        fam[slot] = bad[j];
        where += (where.empty() ? "" : ";") + std::to_string(f + 1) + ":" + std::to_string(slot);
      }
      inst.metadata["violation"] = where;
    }
  } else if (p.kind == "planted3" || p.kind == "planted2") {
    const int count = p.kind == "planted3" ? 3 : 2;
    std::vector<LineEq> lines;
    std::string text;
    for (int k = 0; k < count; ++k) {
      lines.push_back(random_line(rng, 0.3));
      text += (k ? ";" : "") + fmt_line(lines.back());
    }
    inst.metadata["planted_lines"] = text;
    fams = fill(p, rng, true, t3, [&] {
      const LineEq& l = lines[static_cast<std::size_t>(uniform_int(rng, 0, count - 1))];
      return Anchor{line_base(l) + uniform(rng, -0.7, 0.7) * line_dir(l), uniform(rng, 0.05, 0.25)};
    });
  } else if (p.kind == "plantedChords") {
    const ChordConfig cfg = chords_from_simplex(random_simplex_point(p.lines == 3 ? 6 : 4, rng));
    std::string hidden;
    for (double v : cfg.x.coords()) hidden += (hidden.empty() ? "" : ",") + fmt(v);
    inst.metadata["hidden_point"] = hidden;
    fams = fill(p, rng, true, t3, [&] {
      const Chord& c = cfg.chords[static_cast<std::size_t>(uniform_int(rng, 0, cfg.chord_count() - 1))];
      const double t = uniform(rng, 0.1, 0.9);
      return Anchor{(1.0 - t) * c.p + t * c.q, uniform(rng, 0.02, 0.12)};
    });
  } else {  // tightRandom
    fams = fill(p, rng, true, false, [&] {
      const Point c = 0.5 * std::sqrt(uniform01(rng)) * unit(kTwoPi * uniform01(rng));
      return Anchor{c, uniform(rng, 0.2, 0.7)};
    });
  }
  if (t3) inst.metadata["t3"] = "true";

  for (std::size_t f = 0; f < fams.size(); ++f) {
    FamilyRecord rec;
    rec.name = "F" + std::to_string(f + 1);
    for (const ConvexBody& b : fams[f]) {
      ShapeRecord s = polygon_record(b);
      if (b.is_point()) s.kind = ShapeRecord::Kind::Points;
      rec.shapes.push_back(std::move(s));
    }
    inst.families.push_back(std::move(rec));
  }
  if (!generator_self_check(inst)) {
    throw Error(ErrorCode::GeneratorExhausted, "generator '" + p.kind + "' failed its self-check");
  }
  return inst;
}

bool generator_self_check(const InstanceFile& instance) {
  const Families fams = to_families(instance);
  const auto meta = [&](const char* key) {
    auto it = instance.metadata.find(key);
    return it == instance.metadata.end() ? std::string() : it->second;
  };
  const std::string hyp = meta("hypothesis");
  bool holds;
  if (hyp == "colorful-tight") {
    holds = check_colorful_tight(expand_families(fams, 6)).holds;
  } else if (hyp == "colorful-t4") {
    holds = check_colorful_T4(expand_families(fams, 4)).holds;
  } else {
    return false;
  }
  if (meta("generator") == "violator") return !holds;
  if (!holds) return false;
  if (meta("t3") == "true" && !check_T_r(fams[0], 3, 1, true).holds) return false;
  if (meta("generator") == "stabbed") {
    Family all;
    for (const Family& f : fams) all.insert(all.end(), f.begin(), f.end());
    if (!common_transversal(all)) return false;
  }
  return true;
}

}  // namespace pierce
