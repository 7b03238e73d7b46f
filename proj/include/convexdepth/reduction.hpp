#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "convexdepth/geometry.hpp"
#include "convexdepth/hitting.hpp"
#include "convexdepth/rational.hpp"

namespace cdepth {

// Geometric family built from a hitting instance with m = d+1 subsets: ground
// element x maps to the simplex face spanned by the corners whose index is
// NOT in I_x = {i : x in A_i}.
struct ReductionElement {
  int element = 0;          // 1-based ground element
  std::vector<int> I;       // 1-based subset indices containing the element
  Polytope face;
};

struct ReductionFamily {
  int d = 0;
  std::vector<QVec> simplex;  // d+1 affinely independent corners, exact
  std::vector<ReductionElement> elements;

  Family to_family(double tol = kDefaultTol) const;
};

// Standard simplex (origin plus unit axis points) recentered at its
// barycenter. Throws when some element lies in every subset (such an element
// alone is a 1-hitting-set).
ReductionFamily hitting_to_family(const HittingInstance& inst, int d);

// True iff every k-subset of elements has intersecting faces, decided
// combinatorially (union of I_x covers [d+1]?) and cross-validated on sampled
// subsets by exact LP. Throws on combinatorial/geometric disagreement.
bool verify_intersection_pattern(const ReductionFamily& rf, int k, int geometric_samples = 20,
                                 std::uint64_t seed = 42);

// Inverse direction: witness halfspaces of a depth-deficient family define
// A_i = {j : F_j contained in H_i}. Requires max depth < r.
HittingInstance shallow_family_to_instance_2d(const Family& f, int r);

struct RoundtripReport {
  int n = 0;  // ground size = family size
  int k = 0;
  Rational min_ratio;       // min_i |A_i| / N
  bool k_intersecting = false;
  int max_depth = 0;
  Vec maximizer;
  Rational depth_ratio;     // max_depth / n
  Rational bound;           // 1 - min_ratio
  bool bound_holds = false; // depth_ratio <= bound, exact
};

// Full pipeline on a no-k-hitting-set instance with m = 3: build the planar
// family, check the intersection pattern, and verify
// max_depth / n <= 1 - min_i|A_i|/N as an exact rational comparison.
RoundtripReport equivalence_roundtrip_2d(const HittingInstance& inst, int k);

}  // namespace cdepth
