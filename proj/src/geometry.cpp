#include "convexdepth/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cdepth {

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec scale(double t, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

Vec unit(const Vec& u) {
  double n = norm(u);
  if (!(n > 1e-12)) throw std::invalid_argument("unit: zero direction");
  return scale(1.0 / n, u);
}

bool finite(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](double x) { return std::isfinite(x); });
}

Polytope::Polytope(std::vector<Vec> vs) : vertices(std::move(vs)) {
  if (vertices.empty()) throw std::invalid_argument("polytope: requires at least one vertex");
  std::size_t d = vertices[0].size();
  if (d == 0) throw std::invalid_argument("polytope: zero-dimensional vertex");
  exact.reserve(vertices.size());
  for (const Vec& v : vertices) {
    if (v.size() != d) throw std::invalid_argument("polytope: mixed vertex dimensions");
    if (!finite(v)) throw std::invalid_argument("polytope: non-finite coordinate");
    QVec q(d);
    for (std::size_t i = 0; i < d; ++i) q[i] = rat_from_double(v[i]);
    exact.push_back(std::move(q));
  }
}

Polytope::Polytope(std::vector<QVec> vs) : exact(std::move(vs)) {
  if (exact.empty()) throw std::invalid_argument("polytope: requires at least one vertex");
  std::size_t d = exact[0].size();
  if (d == 0) throw std::invalid_argument("polytope: zero-dimensional vertex");
  vertices.reserve(exact.size());
  for (const QVec& q : exact) {
    if (q.size() != d) throw std::invalid_argument("polytope: mixed vertex dimensions");
    Vec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = rat_to_double(q[i]);
    vertices.push_back(std::move(v));
  }
}

Halfspace::Halfspace(Vec n, double c) : normal(std::move(n)), offset(c) {
  if (!finite(normal) || !std::isfinite(offset))
    throw std::invalid_argument("halfspace: non-finite data");
  double len = norm(normal);
  if (!(len > 1e-12)) throw std::invalid_argument("halfspace: zero normal");
  // Rescaling by a positive factor leaves the represented set unchanged;
  // skip it when the input is already unit so exact callers keep their data.
  if (std::abs(len - 1.0) > 1e-12) {
    normal = scale(1.0 / len, normal);
    offset /= len;
  }
}

double support(const Polytope& p, const Vec& u) {
  if (static_cast<int>(u.size()) != p.dim())
    throw std::invalid_argument("support: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec& v : p.vertices) best = std::max(best, dot(u, v));
  return best;
}

double support_min(const Polytope& p, const Vec& u) {
  if (static_cast<int>(u.size()) != p.dim())
    throw std::invalid_argument("support: dimension mismatch");
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& v : p.vertices) best = std::min(best, dot(u, v));
  return best;
}

bool halfspace_intersects(const Halfspace& h, const Polytope& p, double tol) {
  return support(p, h.normal) >= h.offset - tol;
}

bool halfspace_contains(const Halfspace& h, const Polytope& p, double tol) {
  return support_min(p, h.normal) >= h.offset - tol;
}

Family::Family(int d, std::vector<Polytope> ss, double tolerance)
    : dim(d), sets(std::move(ss)), tol(tolerance) {
  if (dim < 1) throw std::invalid_argument("family: dimension must be positive");
  if (sets.empty()) throw std::invalid_argument("family: requires at least one set");
  for (const Polytope& p : sets)
    if (p.dim() != dim) throw std::invalid_argument("family: member dimension mismatch");
}

void bounding_box(const Family& f, Vec& lo, Vec& hi) {
  lo.assign(f.dim, std::numeric_limits<double>::infinity());
  hi.assign(f.dim, -std::numeric_limits<double>::infinity());
  for (const Polytope& p : f.sets)
    for (const Vec& v : p.vertices)
      for (int i = 0; i < f.dim; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
}

}  // namespace cdepth
