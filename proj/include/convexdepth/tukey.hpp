#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "convexdepth/geometry.hpp"

namespace cdepth {

struct PointSet {
  int dim = 0;
  std::vector<Vec> points;

  PointSet() = default;
  PointSet(int d, std::vector<Vec> pts);

  int size() const { return static_cast<int>(points.size()); }
};

// Exact 2D Tukey depth: min over closed halfplanes containing p of the number
// of points inside, by the same event-angle sweep as the family depth.
int tukey_depth_2d(const PointSet& s, const Vec& p, double tol = kDefaultTol);

// Point maximizing Tukey depth over the candidate arrangement; the returned
// depth is at least ceil(n/3).
std::pair<Vec, int> rado_centerpoint_2d(const PointSet& s);

// Max of tukey_depth_2d(S, p) over `samples` random representative sets
// (one Dirichlet-uniform convex combination per polytope); lower-bounds the
// supremum over all representative sets.
int representative_supremum_2d(const Family& f, const Vec& p, int samples, std::uint64_t seed);

// Centerpoint construction over one representative point per k-subset
// intersection: returns the Rado point of that set together with its exact
// family depth. Requires the family to be k-intersecting.
std::pair<Vec, int> bbound_point(const Family& f, int k);

}  // namespace cdepth
