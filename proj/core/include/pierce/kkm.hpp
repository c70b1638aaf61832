#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace pierce {

/// Barycentric point of the (n-1)-simplex: n nonnegative coordinates summing
/// to one. Vertex e_j is the indicator of coordinate j.
class SimplexPoint {
 public:
  SimplexPoint() = default;
  /// Validates the invariants; throws Error(InvalidArgument).
  explicit SimplexPoint(std::vector<double> coords);

  static SimplexPoint vertex(int n, int j);
  static SimplexPoint barycenter(int n);
  /// Euclidean projection of an arbitrary vector onto the simplex.
  static SimplexPoint project(std::span<const double> v);

  int n() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  std::vector<double> coords_;
};

/// Lattice of the (n-1)-simplex with coordinates in multiples of 1/resolution.
struct KuhnGrid {
  int n = 6;
  int resolution = 8;

  std::uint64_t vertex_count() const;
};

/// Streams the lattice points of a grid in lexicographically decreasing order
/// of the integer compositions, e.g. (2,0,0), (1,1,0), (1,0,1), (0,2,0), ...
class GridEnumerator {
 public:
  explicit GridEnumerator(KuhnGrid grid);

  /// Writes the next point and returns true, or returns false when done.
  bool next(SimplexPoint& out);
  /// Integer composition of the point last returned by next().
  const std::vector<int>& composition() const { return counts_; }

 private:
  KuhnGrid grid_;
  std::vector<int> counts_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<SimplexPoint> enumerate_grid(const KuhnGrid& grid);

/// n covers of the simplex; cover i consists of the sets A_1^i .. A_n^i.
/// Indices are 0-based. Membership must be deterministic and safe to call
/// concurrently; covers are expected to report open-set (strict) membership.
struct CoverOracle {
  int n = 0;
  std::function<bool(int cover, int set, const SimplexPoint&)> membership;
  /// Optional signed depth of the point inside A_set^cover.
  std::function<double(int cover, int set, const SimplexPoint&)> margin;
};

struct KkmCheckResult {
  bool ok = true;
  int cover = -1;
  std::optional<SimplexPoint> vertex;
};

/// Grid-level KKM boundary condition: every lattice vertex lies, for every
/// cover, in one of the sets indexed by its positive coordinates.
KkmCheckResult check_kkm_condition(const CoverOracle& oracle, const KuhnGrid& grid);

/// n x n membership bitmap, row-major: bits[cover * n + set].
using MembershipMatrix = std::vector<std::uint8_t>;

MembershipMatrix membership_matrix(const CoverOracle& oracle, const SimplexPoint& x);

/// Perfect matching cover -> set in the bipartite membership graph, as a
/// permutation (result[cover] = set), via augmenting paths.
std::optional<std::vector<int>> perfect_matching(const MembershipMatrix& bits, int n);

/// Same question answered by trying all n! permutations in lexicographic order.
std::optional<std::vector<int>> permutation_brute_force(const MembershipMatrix& bits, int n);

struct ColorfulWitness {
  std::vector<int> permutation;  // cover i uses set permutation[i]
  SimplexPoint point;
  std::vector<double> margins;
  int resolution = 0;
};

inline constexpr int kKkmStartResolution = 8;
inline constexpr int kKkmDefaultMaxResolution = 64;

/// Scans grids at resolutions 8, 16, 32, ... up to max_resolution (the last
/// step is clamped to max_resolution) and returns the first lattice vertex
/// where the membership graph has a perfect matching. Throws
/// Error(KkmConditionViolated) if the starting grid fails the boundary
/// condition. nullopt means "not found up to max_resolution".
std::optional<ColorfulWitness> find_colorful_witness(const CoverOracle& oracle,
                                                     int max_resolution = kKkmDefaultMaxResolution);

/// Threshold cover A_j^i = {x : x_j > thresholds[i]}. It satisfies the
/// boundary condition whenever every threshold is below 1/n.
CoverOracle threshold_cover(int n, std::vector<double> thresholds);

}  // namespace pierce
