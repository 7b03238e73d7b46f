#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "convexdepth/rational.hpp"

namespace cdepth {

using Vec = std::vector<double>;

inline constexpr double kDefaultTol = 1e-9;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale(double t, const Vec& a);
// u / ||u||; throws on (near-)zero input.
Vec unit(const Vec& u);
bool finite(const Vec& a);

// Bounded convex set given by its vertex list; the represented set is the
// convex hull. Vertices may repeat; no hull computation is ever performed.
// Coordinates are carried both as doubles (fast paths) and exact rationals
// (LP feasibility), converted exactly in either direction.
struct Polytope {
  std::vector<Vec> vertices;
  std::vector<QVec> exact;

  Polytope() = default;
  explicit Polytope(std::vector<Vec> vs);
  explicit Polytope(std::vector<QVec> vs);

  int dim() const { return vertices.empty() ? 0 : static_cast<int>(vertices[0].size()); }
  std::size_t size() const { return vertices.size(); }
};

// Closed halfspace {x : <normal, x> >= offset}. The constructor rescales so
// the normal is unit length (same point set).
struct Halfspace {
  Vec normal;
  double offset = 0;

  Halfspace() = default;
  Halfspace(Vec n, double c);
};

// h_P(u) = max_{v in P} <u, v>. Exact over the vertex list; u need not be unit.
double support(const Polytope& p, const Vec& u);
// min_{v in P} <u, v>.
double support_min(const Polytope& p, const Vec& u);

// Closed test: support(P, n) >= offset - tol.
bool halfspace_intersects(const Halfspace& h, const Polytope& p, double tol = kDefaultTol);
// All of P on the inner side: support_min(P, n) >= offset - tol.
bool halfspace_contains(const Halfspace& h, const Polytope& p, double tol = kDefaultTol);

// Ordered family of same-dimension polytopes. `tol` is the geometric
// tolerance used by every closed-inequality test on this family.
struct Family {
  int dim = 0;
  std::vector<Polytope> sets;
  double tol = kDefaultTol;

  Family() = default;
  Family(int d, std::vector<Polytope> ss, double tolerance = kDefaultTol);

  int size() const { return static_cast<int>(sets.size()); }
};

// Axis-aligned bounding box over all vertices of the family.
void bounding_box(const Family& f, Vec& lo, Vec& hi);

}  // namespace cdepth
