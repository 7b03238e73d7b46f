#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "convexdepth/geometry.hpp"

namespace cdepth {

// Per-direction projection extents of a family: mins[i], maxs[i] bracket
// <u, F_i>. The one-sided counts f+(x) = #{i : maxs[i] >= x} and
// f-(x) = #{i : mins[i] <= x} drive all plank computations.
struct SupportProfile {
  Vec direction;
  std::vector<double> mins;
  std::vector<double> maxs;
};

SupportProfile support_profile(const Family& f, const Vec& u);

// #{i : halfspace intersects F_i}.
int halfspace_hit_count(const Family& f, const Halfspace& h);

// Hit count of {x : <u,x> >= <u,p>}; upper-bounds the depth of p.
int depth_upper_at(const Family& f, const Vec& p, const Vec& u);

enum class DepthMethod { Exact2D, SampledUpper };

struct DepthCertificate {
  int value = 0;
  Vec witness_direction;  // the halfspace through the query point in this
                          // direction intersects exactly `value` sets
  DepthMethod method = DepthMethod::Exact2D;
};

// Exact 2D depth by rotating sweep: the hit count changes only at directions
// perpendicular to (v - p) for vertices v, so evaluating every event angle
// and every arc midpoint covers the whole circle.
DepthCertificate depth_exact_2d(const Family& f, const Vec& p);

// Deterministic quasi-uniform unit directions (golden-angle in 2D, spiral in
// 3D, seeded gaussian otherwise).
std::vector<Vec> sample_directions(int dim, int count, std::uint64_t seed);

// Min of depth_upper_at over sampled directions; certifies depth <= value.
DepthCertificate depth_sampled_upper(const Family& f, const Vec& p, int directions,
                                     std::uint64_t seed);

// Slab {v : <u,v> in [lo, hi]}, possibly empty.
struct Plank {
  Vec direction;
  bool empty = true;
  double lo = 0;
  double hi = 0;

  bool contains(const Vec& p, double tol = kDefaultTol) const;
};

// Level-r plank in direction u: lo = r-th smallest projection min,
// hi = r-th largest projection max; empty when lo > hi.
Plank compute_plank(const Family& f, const Vec& u, int r);

struct CenterRegionApprox {
  int r = 0;
  std::vector<Vec> outer_polygon;    // superset of the r-center
  std::vector<Vec> certified_points; // verified depth >= r
  bool empty_flag = false;
};

// Outer approximation of the r-center: intersection of the 2*angular_steps
// halfplanes bounding planks sampled over [0, pi).
CenterRegionApprox center_region_2d(const Family& f, int r, int angular_steps);

// Max depth over the candidate arrangement (vertices, vertex-pair line
// intersections, vertex-triple centroids) together with a maximizer.
std::pair<int, Vec> max_depth_2d(const Family& f);

struct SimplexWitness {
  std::vector<Halfspace> halfspaces;  // empty common intersection (LP-verified)
  std::vector<int> contain_counts;    // each > n - r
};

// Either a point of depth >= r, or d+1 = 3 halfspaces with empty intersection
// each containing more than n - r sets. Throws std::runtime_error when no
// witness is found at the configured direction resolution.
std::variant<Vec, SimplexWitness> simplex_witness_2d(const Family& f, int r,
                                                     int resolution = 360);

// Min over lines through p of the number of sets the line meets.
int min_transversal_count_2d(const Family& f, const Vec& p);

struct HolmsenResult {
  bool deep_enough = false;  // max depth >= n/2
  Vec point;
  int depth = 0;
};

// Checks conv(A u B) n conv(B u C) n conv(C u A) != {} for all triples, then
// reports the maximizing point and whether its depth reaches n/2.
HolmsenResult holmsen_depth_check(const Family& f);

// Convex polygon clip against {x : <u,x> >= c}; helper shared with the SVG
// emitter and the region construction.
std::vector<Vec> clip_halfplane(const std::vector<Vec>& poly, const Vec& u, double c,
                                double tol = kDefaultTol);
Vec polygon_centroid(const std::vector<Vec>& poly);
bool point_in_convex_polygon(const std::vector<Vec>& poly, const Vec& p, double tol = 1e-7);

}  // namespace cdepth
