#pragma once

#include <optional>
#include <vector>

#include "convexdepth/geometry.hpp"
#include "convexdepth/rational.hpp"

namespace cdepth {

// Exact rational simplex (Bland's rule) over the equality form
//   min c.x   s.t.  A x = b,  x >= 0.
// Intended for the small feasibility systems of this library; throws
// std::runtime_error if the iteration cap is hit (LP failure, distinct from
// an infeasible outcome).
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  QVec x;  // structural variable values when status != Infeasible
};

LpOutcome lp_minimize_eq(const QMat& A, const QVec& b, const QVec& c);
LpOutcome lp_feasible_eq(const QMat& A, const QVec& b);

// Common point of conv(vertices_i) over all polytopes, decided exactly via
// convex-combination feasibility. Returns the witness point when nonempty.
std::optional<QVec> polytopes_common_point(const std::vector<Polytope>& ps);
bool polytopes_intersect(const std::vector<Polytope>& ps);

// Exact membership p in conv(vertices).
bool point_in_polytope(const Polytope& p, const Vec& x);
bool point_in_polytope(const Polytope& p, const QVec& x);

// Every k-subset of the family has a common point (exhaustive over C(n,k)).
bool is_k_intersecting(const Family& f, int k);

// Exact feasibility of the intersection of closed halfspaces.
bool halfspaces_feasible(const std::vector<Halfspace>& hs);

// Farkas route: indices J (|J| <= d+1) such that the halfspaces
// {<u_j, x> >= c_j : j in J} have provably empty intersection, when the whole
// collection is infeasible; nullopt when the collection has a common point.
std::optional<std::vector<int>> farkas_empty_subfamily(const std::vector<QVec>& normals,
                                                       const QVec& offsets);

// argmax of w.y over the common points of `ps`; nullopt when the intersection
// is empty. Used to pick deterministic representative points.
std::optional<QVec> maximize_over_intersection(const std::vector<Polytope>& ps, const QVec& w);

}  // namespace cdepth
