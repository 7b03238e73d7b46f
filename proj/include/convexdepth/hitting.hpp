#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convexdepth/rational.hpp"

namespace cdepth {

// Ground set [N] with m index subsets, 1-based elements.
struct HittingInstance {
  int ground_size = 0;
  std::vector<std::vector<int>> subsets;

  HittingInstance() = default;
  HittingInstance(int n, std::vector<std::vector<int>> ss);

  int m() const { return static_cast<int>(subsets.size()); }
};

struct HittingResult {
  int min_size = 0;
  std::vector<int> witness;  // 1-based, sorted
};

// Exact minimum hitting set via branch and bound (branch on a smallest unhit
// set, bound by a greedy disjoint-set count).
HittingResult min_hitting_set(const HittingInstance& inst);

// Exhaustive reference search, N <= 20. Kept independent of the branch and
// bound path so the two can cross-check each other.
HittingResult min_hitting_set_exhaustive(const HittingInstance& inst);

// (has hitting set of size <= k, min_i |A_i| / N as exact rational).
std::pair<bool, Rational> instance_beta_ratio(const HittingInstance& inst, int k);

// Sup of min_i|A_i|/N over all instances with ground size <= maxN admitting
// no k-hitting-set, by exhaustive enumeration of subset multisets.
// Returns 0 when no such instance exists. Guard: maxN * m <= 26.
Rational beta_exhaustive_small(int m, int k, int maxN);

// Companion check: every enumerated instance whose smallest subset exceeds
// threshold * N admits a hitting set of size <= k.
bool beta_above_threshold_hittable(int m, int k, int maxN, const Rational& threshold);

// All (n-k)-subsets of [n]; admits no k-hitting-set.
HittingInstance complement_instance(int n, int k);

struct BlemishParams {
  int m = 0;
  int k = 0;
  int ell = 0;
  double beta = 0;
};

// Strict inequality m(1-(1-beta)^(k-ell)) > m-ell-1 (floating point); use
// blemish_margin to inspect closeness to the boundary.
bool blemish_feasible(const BlemishParams& p);
double blemish_margin(const BlemishParams& p);

// argmin over ell in [0, k-1] of beta*(ell) = 1 - ((ell+1)/m)^(1/(k-ell)),
// the infimal beta making the inequality hold; upper-bounds beta_{m,k}.
std::pair<int, double> blemish_optimize(int m, int k);

struct BoundsRow {
  int d = 0;
  int k = 0;
  std::optional<Rational> alpha_exact;  // known at k = 1, d, d+1
  double alpha_rado_lb = 0;             // (d+1)^(-1/k)
  std::string rado_correction;          // symbolic finite-n factor
  double alpha_blemish_lb = 0;          // 1 - blemish_optimize(d+1, k)
  std::optional<Rational> beta_exact;   // 1 - alpha_exact where known
  double beta_blemish_ub = 0;
};

std::vector<BoundsRow> bounds_table(int dmax);

}  // namespace cdepth
