#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pierce/geometry.hpp"

namespace pierce {

enum class Property { T3, T4, TightTriples, ColorfulTightTriples, ColorfulT4 };

std::string_view to_string(Property p);

/// One set of an instance: 1-based family index, 0-based position in it.
struct SetRef {
  int family = 1;
  int index = 0;

  friend bool operator==(const SetRef&, const SetRef&) = default;
};

struct HypothesisReport {
  Property property = Property::T3;
  bool holds = true;
  std::vector<SetRef> witness;  // empty iff holds
};

inline constexpr std::size_t kMaxExhaustiveFamily = 80;

/// A line meeting every body, if one exists.
///
/// Candidates are lines supporting two bodies at a vertex each (common
/// tangents), lines through an edge of a body, and a line through each point
/// body. Any transversal can be translated until it supports one body and
/// then rotated about that contact until it supports another, so the
/// candidate set is complete under closed semantics. Throws EmptyInput.
std::optional<LineEq> common_transversal(std::span<const ConvexBody> bodies);

/// Same contract, enumerating the line through every pair of distinct
/// vertices of the union. Quadratic in the vertex count; used as a
/// cross-check.
std::optional<LineEq> common_transversal_all_pairs(std::span<const ConvexBody> bodies);

/// Property T(r) for r in {3, 4}: every min(r, |family|) members admit a
/// common transversal. The witness is the lexicographically first violating
/// subset. Families above kMaxExhaustiveFamily throw TooLarge unless
/// allow_large is set.
HypothesisReport check_T_r(std::span<const ConvexBody> family, int r, int family_index = 1,
                           bool allow_large = false);

/// conv(A u B), conv(A u C) and conv(B u C) share a point.
bool tight_triple(const ConvexBody& a, const ConvexBody& b, const ConvexBody& c);

/// Every triple of distinct members is tight.
HypothesisReport check_tight_triples(std::span<const ConvexBody> family, int family_index = 1,
                                     bool allow_large = false);

/// Colorful tight-triple condition over exactly six families: any three sets
/// drawn from three distinct family positions form a tight triple. Throws
/// BadArity otherwise.
HypothesisReport check_colorful_tight(const Families& families);

/// Colorful T(4) over exactly four families: one set from each family always
/// admits a common transversal. Throws BadArity otherwise.
HypothesisReport check_colorful_T4(const Families& families);

/// Repeat families cyclically to reach `count` positions (F1..Fm, F1, ...).
Families expand_families(const Families& families, std::size_t count);

}  // namespace pierce
