#include "pierce/transversal.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "pierce/error.hpp"

namespace pierce {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::T3: return "T3";
    case Property::T4: return "T4";
    case Property::TightTriples: return "TightTriples";
    case Property::ColorfulTightTriples: return "ColorfulTightTriples";
    case Property::ColorfulT4: return "ColorfulT4";
  }
  return "Unknown";
}

namespace {

bool hits_all(std::span<const ConvexBody> bodies, const LineEq& line) {
  return std::all_of(bodies.begin(), bodies.end(),
                     [&](const ConvexBody& b) { return body_line_hit(b, line); });
}

// The line passes through vertex i of `body`; does the body stay on one
// closed side of it? Local test, valid for convex polygons.
bool supports_at(const ConvexBody& body, std::size_t i, const LineEq& line) {
  const std::size_t n = body.size();
  if (n <= 2) return true;
  const double prev = line.eval(body[(i + n - 1) % n]);
  const double next = line.eval(body[(i + 1) % n]);
  return (prev >= -kGeomEps && next >= -kGeomEps) || (prev <= kGeomEps && next <= kGeomEps);
}

void require_nonempty(std::span<const ConvexBody> bodies) {
  if (bodies.empty()) throw Error(ErrorCode::EmptyInput, "transversal of an empty collection");
}

template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<LineEq> common_transversal(std::span<const ConvexBody> bodies) {
  require_nonempty(bodies);

  // Edge lines, and a horizontal line through each point body.
  for (const ConvexBody& body : bodies) {
    if (body.is_point()) {
      const LineEq line = LineEq::with_direction(body[0], {1.0, 0.0});
      if (hits_all(bodies, line)) return line.canonical();
      continue;
    }
    const std::size_t n = body.size();
    const std::size_t edges = n == 2 ? 1 : n;
    for (std::size_t i = 0; i < edges; ++i) {
      const LineEq line = LineEq::through(body[i], body[(i + 1) % n]);
      if (hits_all(bodies, line)) return line.canonical();
    }
  }

  // Lines supporting two different bodies.
  for (std::size_t a = 0; a < bodies.size(); ++a) {
    for (std::size_t b = a + 1; b < bodies.size(); ++b) {
      const ConvexBody& A = bodies[a];
      const ConvexBody& B = bodies[b];
      for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = 0; j < B.size(); ++j) {
          if (distance(A[i], B[j]) <= kGeomEps) continue;
          const LineEq line = LineEq::through(A[i], B[j]);
          if (!supports_at(A, i, line) || !supports_at(B, j, line)) continue;
          if (hits_all(bodies, line)) return line.canonical();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<LineEq> common_transversal_all_pairs(std::span<const ConvexBody> bodies) {
  require_nonempty(bodies);
  std::vector<Point> verts;
  for (const ConvexBody& b : bodies) {
    for (const Point& p : b.vertices()) {
      if (std::none_of(verts.begin(), verts.end(),
                       [&](Point q) { return distance(p, q) <= kGeomEps; })) {
        verts.push_back(p);
      }
    }
  }
  if (verts.size() == 1) {
    const LineEq line = LineEq::with_direction(verts[0], {1.0, 0.0});
    return hits_all(bodies, line) ? std::optional(line.canonical()) : std::nullopt;
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const LineEq line = LineEq::through(verts[i], verts[j]);
      if (hits_all(bodies, line)) return line.canonical();
    }
  }
  return std::nullopt;
}

HypothesisReport check_T_r(std::span<const ConvexBody> family, int r, int family_index,
                           bool allow_large) {
  if (r != 3 && r != 4) {
    throw Error(ErrorCode::UnsupportedR, "T(r) is supported for r in {3, 4}, got " + std::to_string(r));
  }
  require_nonempty(family);
  if (family.size() > kMaxExhaustiveFamily && !allow_large) {
    throw Error(ErrorCode::TooLarge, "family of " + std::to_string(family.size()) +
                                         " sets exceeds the exhaustive-check cap");
  }
  HypothesisReport report;
  report.property = r == 3 ? Property::T3 : Property::T4;
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(r), family.size());
  std::vector<ConvexBody> subset;
  subset.reserve(k);
  for_each_combination(family.size(), k, [&](const std::vector<std::size_t>& idx) {
    subset.clear();
    for (std::size_t i : idx) subset.push_back(family[i]);
    if (common_transversal(subset)) return true;
    report.holds = false;
    for (std::size_t i : idx) report.witness.push_back({family_index, static_cast<int>(i)});
    return false;
  });
  return report;
}

bool tight_triple(const ConvexBody& a, const ConvexBody& b, const ConvexBody& c) {
  auto hull2 = [](const ConvexBody& x, const ConvexBody& y) {
    std::vector<Point> pts(x.vertices().begin(), x.vertices().end());
    pts.insert(pts.end(), y.vertices().begin(), y.vertices().end());
    return convex_hull(pts);
  };
  return bodies_intersect(hull2(a, b), hull2(a, c), hull2(b, c));
}

HypothesisReport check_tight_triples(std::span<const ConvexBody> family, int family_index,
                                     bool allow_large) {
  require_nonempty(family);
  if (family.size() > kMaxExhaustiveFamily && !allow_large) {
    throw Error(ErrorCode::TooLarge, "family exceeds the exhaustive-check cap");
  }
  HypothesisReport report;
  report.property = Property::TightTriples;
  if (family.size() < 3) return report;
  for_each_combination(family.size(), 3, [&](const std::vector<std::size_t>& idx) {
    if (tight_triple(family[idx[0]], family[idx[1]], family[idx[2]])) return true;
    report.holds = false;
    for (std::size_t i : idx) report.witness.push_back({family_index, static_cast<int>(i)});
    return false;
  });
  return report;
}

namespace {

// Bodies of value-identical families share identity, so replicated families
// reuse pairwise hulls and memoized verdicts.
struct BodyIds {
  std::vector<std::size_t> family_offset;  // per position

  explicit BodyIds(const Families& families) {
    std::vector<std::size_t> first_offset(families.size());
    std::size_t next = 0;
    for (std::size_t f = 0; f < families.size(); ++f) {
      std::size_t canonical = f;
      for (std::size_t g = 0; g < f; ++g) {
        if (families[g] == families[f]) {
          canonical = g;
          break;
        }
      }
      if (canonical == f) {
        first_offset[f] = next;
        next += families[f].size();
      } else {
        first_offset[f] = first_offset[canonical];
      }
      family_offset.push_back(first_offset[f]);
    }
    shared = false;
    for (std::size_t f = 0; f < families.size(); ++f) {
      for (std::size_t g = 0; g < f; ++g) {
        if (family_offset[f] == family_offset[g] && !families[f].empty()) shared = true;
      }
    }
  }

  std::size_t id(std::size_t position, std::size_t index) const {
    return family_offset[position] + index;
  }

  bool shared = false;
};

std::uint64_t pack(std::size_t a, std::size_t b, std::size_t c = 0, std::size_t d = 0) {
  return (static_cast<std::uint64_t>(a) << 48) | (static_cast<std::uint64_t>(b) << 32) |
         (static_cast<std::uint64_t>(c) << 16) | static_cast<std::uint64_t>(d);
}

}  // namespace

HypothesisReport check_colorful_tight(const Families& families) {
  if (families.size() != 6) {
    throw Error(ErrorCode::BadArity, "colorful tight-triple check needs exactly 6 families, got " +
                                         std::to_string(families.size()));
  }
  HypothesisReport report;
  report.property = Property::ColorfulTightTriples;
  const BodyIds ids(families);

  std::unordered_map<std::uint64_t, ConvexBody> pair_hulls;
  auto pair_hull = [&](std::size_t pa, std::size_t ia, std::size_t pb, std::size_t ib) -> const ConvexBody& {
    std::size_t ka = ids.id(pa, ia);
    std::size_t kb = ids.id(pb, ib);
    if (ka > kb) std::swap(ka, kb);
    const std::uint64_t key = pack(ka, kb);
    auto it = pair_hulls.find(key);
    if (it == pair_hulls.end()) {
      std::vector<Point> pts(families[pa][ia].vertices().begin(), families[pa][ia].vertices().end());
      pts.insert(pts.end(), families[pb][ib].vertices().begin(), families[pb][ib].vertices().end());
      it = pair_hulls.emplace(key, convex_hull(pts)).first;
    }
    return it->second;
  };
  std::unordered_map<std::uint64_t, bool> memo;

  for (std::size_t p1 = 0; p1 < 6; ++p1) {
    for (std::size_t p2 = p1 + 1; p2 < 6; ++p2) {
      for (std::size_t p3 = p2 + 1; p3 < 6; ++p3) {
        for (std::size_t a = 0; a < families[p1].size(); ++a) {
          for (std::size_t b = 0; b < families[p2].size(); ++b) {
            for (std::size_t c = 0; c < families[p3].size(); ++c) {
              std::array<std::size_t, 3> key = {ids.id(p1, a), ids.id(p2, b), ids.id(p3, c)};
              if (key[0] == key[1] || key[0] == key[2] || key[1] == key[2]) continue;
              bool tight = false;
              if (ids.shared) {
                std::sort(key.begin(), key.end());
                const std::uint64_t k = pack(key[0], key[1], key[2]);
                auto it = memo.find(k);
                if (it != memo.end()) {
                  tight = it->second;
                } else {
                  tight = bodies_intersect(pair_hull(p1, a, p2, b), pair_hull(p1, a, p3, c),
                                           pair_hull(p2, b, p3, c));
                  memo.emplace(k, tight);
                }
              } else {
                tight = bodies_intersect(pair_hull(p1, a, p2, b), pair_hull(p1, a, p3, c),
                                         pair_hull(p2, b, p3, c));
              }
              if (!tight) {
                report.holds = false;
                report.witness = {{static_cast<int>(p1 + 1), static_cast<int>(a)},
                                  {static_cast<int>(p2 + 1), static_cast<int>(b)},
                                  {static_cast<int>(p3 + 1), static_cast<int>(c)}};
                return report;
              }
            }
          }
        }
      }
    }
  }
  return report;
}

HypothesisReport check_colorful_T4(const Families& families) {
  if (families.size() != 4) {
    throw Error(ErrorCode::BadArity, "colorful T(4) check needs exactly 4 families, got " +
                                         std::to_string(families.size()));
  }
  HypothesisReport report;
  report.property = Property::ColorfulT4;
  const BodyIds ids(families);
  std::unordered_map<std::uint64_t, bool> memo;
  std::vector<ConvexBody> subset;

  const std::array<std::size_t, 4> sizes = {families[0].size(), families[1].size(),
                                            families[2].size(), families[3].size()};
  if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; })) return report;

  std::array<std::size_t, 4> pick = {0, 0, 0, 0};
  while (true) {
    std::array<std::size_t, 4> key;
    for (std::size_t p = 0; p < 4; ++p) key[p] = ids.id(p, pick[p]);
    std::sort(key.begin(), key.end());
    const std::uint64_t k = pack(key[0], key[1], key[2], key[3]);
    bool ok = false;
    auto it = ids.shared ? memo.find(k) : memo.end();
    if (it != memo.end()) {
      ok = it->second;
    } else {
      subset.clear();
      for (std::size_t p = 0; p < 4; ++p) {
        const std::size_t id = ids.id(p, pick[p]);
        bool dup = false;
        for (std::size_t q = 0; q < p; ++q) dup = dup || ids.id(q, pick[q]) == id;
        if (!dup) subset.push_back(families[p][pick[p]]);
      }
      ok = common_transversal(subset).has_value();
      if (ids.shared) memo.emplace(k, ok);
    }
    if (!ok) {
      report.holds = false;
      for (std::size_t p = 0; p < 4; ++p) {
        report.witness.push_back({static_cast<int>(p + 1), static_cast<int>(pick[p])});
      }
      return report;
    }
    std::size_t p = 4;
    while (p > 0) {
      --p;
      if (++pick[p] < sizes[p]) break;
      pick[p] = 0;
      if (p == 0) return report;
    }
  }
}

Families expand_families(const Families& families, std::size_t count) {
  if (families.empty()) throw Error(ErrorCode::EmptyInput, "no families to expand");
  if (families.size() > count) {
    throw Error(ErrorCode::BadArity, "cannot expand " + std::to_string(families.size()) +
                                         " families to " + std::to_string(count));
  }
  Families out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(families[i % families.size()]);
  return out;
}

}  // namespace pierce
