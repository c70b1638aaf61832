#include "pierce/kkm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pierce/error.hpp"

namespace pierce {

SimplexPoint::SimplexPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::InvalidArgument, "simplex point without coordinates");
  double sum = 0.0;
  for (double c : coords_) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw Error(ErrorCode::InvalidArgument, "simplex coordinate must be finite and nonnegative");
    }
    sum += c;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "simplex coordinates must sum to 1");
  }
}

SimplexPoint SimplexPoint::vertex(int n, int j) {
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  c.at(static_cast<std::size_t>(j)) = 1.0;
  return SimplexPoint(std::move(c));
}

SimplexPoint SimplexPoint::barycenter(int n) {
  return SimplexPoint(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

SimplexPoint SimplexPoint::project(std::span<const double> v) {
  // Sort-based Euclidean projection onto {x >= 0, sum x = 1}.
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cumulative += u[i];
    const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) theta = t;
  }
  std::vector<double> x(v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    x[i] = std::max(v[i] - theta, 0.0);
    sum += x[i];
  }
  for (double& c : x) c /= sum;
  return SimplexPoint(std::move(x));
}

std::uint64_t KuhnGrid::vertex_count() const {
  // binomial(k + n - 1, n - 1)
  std::uint64_t result = 1;
  const std::uint64_t top = static_cast<std::uint64_t>(resolution + n - 1);
  const std::uint64_t r = static_cast<std::uint64_t>(n - 1);
  for (std::uint64_t i = 1; i <= r; ++i) result = result * (top - r + i) / i;
  return result;
}

GridEnumerator::GridEnumerator(KuhnGrid grid) : grid_(grid) {
  if (grid.n < 1 || grid.resolution < 1) {
    throw Error(ErrorCode::InvalidArgument, "grid needs n >= 1 and resolution >= 1");
  }
  counts_.assign(static_cast<std::size_t>(grid.n), 0);
}

bool GridEnumerator::next(SimplexPoint& out) {
  if (done_) return false;
  const int n = grid_.n;
  if (!started_) {
    started_ = true;
    counts_[0] = grid_.resolution;
  } else {
    int i = n - 2;
    while (i >= 0 && counts_[static_cast<std::size_t>(i)] == 0) --i;
    if (i < 0) {
      done_ = true;
      return false;
    }
    int tail = 0;
    for (int j = i + 1; j < n; ++j) {
      tail += counts_[static_cast<std::size_t>(j)];
      counts_[static_cast<std::size_t>(j)] = 0;
    }
    --counts_[static_cast<std::size_t>(i)];
    counts_[static_cast<std::size_t>(i + 1)] = tail + 1;
  }
  std::vector<double> c(counts_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = static_cast<double>(counts_[j]) / grid_.resolution;
  out = SimplexPoint(std::move(c));
  return true;
}

std::vector<SimplexPoint> enumerate_grid(const KuhnGrid& grid) {
  std::vector<SimplexPoint> out;
  out.reserve(static_cast<std::size_t>(grid.vertex_count()));
  GridEnumerator it(grid);
  SimplexPoint p;
  while (it.next(p)) out.push_back(p);
  return out;
}

KkmCheckResult check_kkm_condition(const CoverOracle& oracle, const KuhnGrid& grid) {
  GridEnumerator it(grid);
  SimplexPoint v;
  while (it.next(v)) {
    for (int i = 0; i < oracle.n; ++i) {
      bool covered = false;
      for (int j = 0; j < oracle.n && !covered; ++j) {
        covered = v[j] > 0.0 && oracle.membership(i, j, v);
      }
      if (!covered) return {false, i, v};
    }
  }
  return {};
}

MembershipMatrix membership_matrix(const CoverOracle& oracle, const SimplexPoint& x) {
  const int n = oracle.n;
  MembershipMatrix bits(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(i * n + j)] = oracle.membership(i, j, x);
  }
  return bits;
}

namespace {

bool augment(const MembershipMatrix& bits, int n, int cover, std::vector<int>& owner,
             std::vector<char>& seen) {
  for (int j = 0; j < n; ++j) {
    if (!bits[static_cast<std::size_t>(cover * n + j)] || seen[static_cast<std::size_t>(j)]) continue;
    seen[static_cast<std::size_t>(j)] = 1;
    const int prev = owner[static_cast<std::size_t>(j)];
    if (prev < 0 || augment(bits, n, prev, owner, seen)) {
      owner[static_cast<std::size_t>(j)] = cover;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> perfect_matching(const MembershipMatrix& bits, int n) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);  // set -> cover
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    if (!augment(bits, n, i, owner, seen)) return std::nullopt;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)])] = j;
  return perm;
}

std::optional<std::vector<int>> permutation_brute_force(const MembershipMatrix& bits, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = bits[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])];
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

// Largest step h in {1/k, 1/2k, 1/4k} such that every one-step lattice move
// x + h (e_a - e_b) that stays in the simplex keeps membership.
double probe_margin(const CoverOracle& oracle, int cover, int set, const SimplexPoint& x, int k) {
  const int n = x.n();
  for (double h = 1.0 / k; h >= 0.25 / k; h *= 0.5) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (a == b || x[b] < h) continue;
        std::vector<double> c(x.coords().begin(), x.coords().end());
        c[static_cast<std::size_t>(a)] += h;
        c[static_cast<std::size_t>(b)] -= h;
        ok = oracle.membership(cover, set, SimplexPoint::project(c));
      }
    }
    if (ok) return h;
  }
  return 0.0;
}

}  // namespace

std::optional<ColorfulWitness> find_colorful_witness(const CoverOracle& oracle, int max_resolution) {
  if (oracle.n < 1 || max_resolution < 1) {
    throw Error(ErrorCode::InvalidArgument, "cover dimension and resolution must be positive");
  }
  std::vector<int> schedule;
  for (int k = kKkmStartResolution; k <= max_resolution; k *= 2) schedule.push_back(k);
  if (schedule.empty() || schedule.back() != max_resolution) schedule.push_back(max_resolution);

  const KkmCheckResult pre = check_kkm_condition(oracle, {oracle.n, schedule.front()});
  if (!pre.ok) {
    throw Error(ErrorCode::KkmConditionViolated,
                "cover " + std::to_string(pre.cover) + " misses a lattice vertex at resolution " +
                    std::to_string(schedule.front()));
  }

  for (int k : schedule) {
    GridEnumerator it({oracle.n, k});
    SimplexPoint v;
    while (it.next(v)) {
      const MembershipMatrix bits = membership_matrix(oracle, v);
      auto perm = perfect_matching(bits, oracle.n);
      if (!perm) continue;
      ColorfulWitness w;
      w.permutation = std::move(*perm);
      w.point = v;
      w.resolution = k;
      for (int i = 0; i < oracle.n; ++i) {
        const int j = w.permutation[static_cast<std::size_t>(i)];
        w.margins.push_back(oracle.margin ? oracle.margin(i, j, v) : probe_margin(oracle, i, j, v, k));
      }
      return w;
    }
  }
  return std::nullopt;
}

CoverOracle threshold_cover(int n, std::vector<double> thresholds) {
  if (static_cast<int>(thresholds.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "one threshold per cover is required");
  }
  CoverOracle oracle;
  oracle.n = n;
  oracle.membership = [thresholds](int cover, int set, const SimplexPoint& x) {
    return x[set] > thresholds[static_cast<std::size_t>(cover)];
  };
  oracle.margin = [thresholds](int cover, int set, const SimplexPoint& x) {
    return x[set] - thresholds[static_cast<std::size_t>(cover)];
  };
  return oracle;
}

}  // namespace pierce
