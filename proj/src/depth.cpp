#include "convexdepth/depth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "convexdepth/lp.hpp"
#include "convexdepth/util.hpp"

namespace cdepth {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

std::vector<double> sorted_unique_angles(std::vector<double> angles) {
  for (double& a : angles) a = wrap_angle(a);
  std::sort(angles.begin(), angles.end());
  std::vector<double> out;
  for (double a : angles)
    if (out.empty() || a - out.back() > 1e-12) out.push_back(a);
  // first and last may coincide across the wrap
  if (out.size() > 1 && (out.front() + kTwoPi) - out.back() <= 1e-12) out.pop_back();
  return out;
}

// Event angles plus one midpoint per arc. The hit count is upper
// semicontinuous in the direction, so arc minima are reached at midpoints;
// the events themselves guard degenerate coincidences.
std::vector<double> sweep_eval_angles(const std::vector<double>& events) {
  if (events.empty()) return {0.0};
  std::vector<double> out = events;
  for (std::size_t i = 0; i < events.size(); ++i) {
    double a = events[i];
    double b = (i + 1 < events.size()) ? events[i + 1] : events[0] + kTwoPi;
    out.push_back(wrap_angle(0.5 * (a + b)));
  }
  return out;
}

// Directions where the membership of some vertex in the halfplane through p
// can flip: perpendiculars to (v - p).
std::vector<double> event_angles_about(const Family& f, const Vec& p) {
  std::vector<double> events;
  for (const Polytope& s : f.sets)
    for (const Vec& v : s.vertices) {
      double dx = v[0] - p[0], dy = v[1] - p[1];
      if (std::abs(dx) < 1e-15 && std::abs(dy) < 1e-15) continue;
      double base = std::atan2(dy, dx);
      events.push_back(base + kTwoPi / 4);
      events.push_back(base - kTwoPi / 4);
    }
  return sorted_unique_angles(std::move(events));
}

int hit_count_direction(const Family& f, const Vec& p, double cs, double sn) {
  int cnt = 0;
  for (const Polytope& s : f.sets) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec& v : s.vertices)
      best = std::max(best, cs * (v[0] - p[0]) + sn * (v[1] - p[1]));
    if (best >= -f.tol) ++cnt;
  }
  return cnt;
}

void require_2d(const Family& f, const char* what) {
  if (f.dim != 2) throw std::invalid_argument(std::string(what) + ": requires dimension 2");
}

std::int64_t quantize(double x) { return std::llround(x * 1e9); }

}  // namespace

SupportProfile support_profile(const Family& f, const Vec& u) {
  if (static_cast<int>(u.size()) != f.dim)
    throw std::invalid_argument("support_profile: dimension mismatch");
  SupportProfile prof;
  prof.direction = u;
  prof.mins.reserve(f.sets.size());
  prof.maxs.reserve(f.sets.size());
  for (const Polytope& s : f.sets) {
    prof.mins.push_back(support_min(s, u));
    prof.maxs.push_back(support(s, u));
  }
  return prof;
}

int halfspace_hit_count(const Family& f, const Halfspace& h) {
  if (static_cast<int>(h.normal.size()) != f.dim)
    throw std::invalid_argument("halfspace_hit_count: dimension mismatch");
  int cnt = 0;
  for (const Polytope& s : f.sets)
    if (halfspace_intersects(h, s, f.tol)) ++cnt;
  return cnt;
}

int depth_upper_at(const Family& f, const Vec& p, const Vec& u) {
  if (static_cast<int>(p.size()) != f.dim || static_cast<int>(u.size()) != f.dim)
    throw std::invalid_argument("depth_upper_at: dimension mismatch");
  double len = norm(u);
  if (!(len > 1e-12)) throw std::invalid_argument("depth_upper_at: zero direction");
  int cnt = 0;
  for (const Polytope& s : f.sets) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec& v : s.vertices) best = std::max(best, dot(u, sub(v, p)));
    if (best >= -f.tol * len) ++cnt;
  }
  return cnt;
}

DepthCertificate depth_exact_2d(const Family& f, const Vec& p) {
  require_2d(f, "depth_exact_2d");
  if (p.size() != 2) throw std::invalid_argument("depth_exact_2d: point dimension mismatch");
  std::vector<double> angles = sweep_eval_angles(event_angles_about(f, p));
  DepthCertificate cert;
  cert.method = DepthMethod::Exact2D;
  cert.value = f.size() + 1;
  for (double th : angles) {
    double cs = std::cos(th), sn = std::sin(th);
    int cnt = hit_count_direction(f, p, cs, sn);
    if (cnt < cert.value) {
      cert.value = cnt;
      cert.witness_direction = {cs, sn};
    }
  }
  return cert;
}

std::vector<Vec> sample_directions(int dim, int count, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("sample_directions: bad dimension");
  if (count < 1) throw std::invalid_argument("sample_directions: need at least one direction");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<Vec> dirs;
  dirs.reserve(count);
  const double golden = 0.61803398874989484820;
  if (dim == 1) {
    for (int j = 0; j < count; ++j) dirs.push_back({j % 2 == 0 ? 1.0 : -1.0});
  } else if (dim == 2) {
    double offset = uni(rng);
    for (int j = 0; j < count; ++j) {
      double t = std::fmod(offset + golden * j, 1.0);
      dirs.push_back({std::cos(kTwoPi * t), std::sin(kTwoPi * t)});
    }
  } else if (dim == 3) {
    double offset = uni(rng);
    for (int j = 0; j < count; ++j) {
      double z = 1.0 - 2.0 * (j + 0.5) / count;
      double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = kTwoPi * std::fmod(offset + golden * j, 1.0);
      dirs.push_back({rad * std::cos(phi), rad * std::sin(phi), z});
    }
  } else {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(dirs.size()) < count) {
      Vec v(dim);
      for (double& x : v) x = gauss(rng);
      double len = norm(v);
      if (len < 1e-9) continue;
      dirs.push_back(scale(1.0 / len, v));
    }
  }
  return dirs;
}

DepthCertificate depth_sampled_upper(const Family& f, const Vec& p, int directions,
                                     std::uint64_t seed) {
  if (static_cast<int>(p.size()) != f.dim)
    throw std::invalid_argument("depth_sampled_upper: dimension mismatch");
  std::vector<Vec> dirs = sample_directions(f.dim, directions, seed);
  DepthCertificate cert;
  cert.method = DepthMethod::SampledUpper;
  cert.value = f.size() + 1;
  for (const Vec& u : dirs) {
    int cnt = 0;
    for (const Polytope& s : f.sets) {
      double best = -std::numeric_limits<double>::infinity();
      for (const Vec& v : s.vertices) best = std::max(best, dot(u, sub(v, p)));
      if (best >= -f.tol) ++cnt;
    }
    if (cnt < cert.value) {
      cert.value = cnt;
      cert.witness_direction = u;
    }
  }
  return cert;
}

bool Plank::contains(const Vec& p, double tol) const {
  if (empty) return false;
  double t = dot(direction, p);
  return t >= lo - tol && t <= hi + tol;
}

Plank compute_plank(const Family& f, const Vec& u, int r) {
  const int n = f.size();
  if (r < 1 || r > n) throw std::invalid_argument("compute_plank: r out of range");
  Vec dir = unit(u);
  SupportProfile prof = support_profile(f, dir);
  std::vector<double> mins = prof.mins, maxs = prof.maxs;
  std::nth_element(mins.begin(), mins.begin() + (r - 1), mins.end());
  double a = mins[r - 1];  // r-th smallest projection min
  std::nth_element(maxs.begin(), maxs.begin() + (r - 1), maxs.end(), std::greater<>());
  double b = maxs[r - 1];  // r-th largest projection max
  Plank plank;
  plank.direction = dir;
  if (a > b) return plank;  // empty
  plank.empty = false;
  plank.lo = a;
  plank.hi = b;
  return plank;
}

std::vector<Vec> clip_halfplane(const std::vector<Vec>& poly, const Vec& u, double c,
                                double tol) {
  if (poly.empty()) return {};
  if (poly.size() == 1) return dot(u, poly[0]) >= c - tol ? poly : std::vector<Vec>{};
  std::vector<Vec> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& a = poly[i];
    const Vec& b = poly[(i + 1) % n];
    double da = dot(u, a) - c;
    double db = dot(u, b) - c;
    bool ina = da >= -tol, inb = db >= -tol;
    if (ina) out.push_back(a);
    if (ina != inb && std::abs(db - da) > 1e-15) {
      double t = da / (da - db);
      out.push_back(add(a, scale(t, sub(b, a))));
    }
  }
  // drop consecutive duplicates produced by tangential clips
  std::vector<Vec> dedup;
  for (const Vec& v : out) {
    if (!dedup.empty() && norm(sub(v, dedup.back())) < 1e-12) continue;
    dedup.push_back(v);
  }
  while (dedup.size() > 1 && norm(sub(dedup.front(), dedup.back())) < 1e-12) dedup.pop_back();
  return dedup;
}

Vec polygon_centroid(const std::vector<Vec>& poly) {
  if (poly.empty()) throw std::invalid_argument("polygon_centroid: empty polygon");
  double area2 = 0, cx = 0, cy = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& a = poly[i];
    const Vec& b = poly[(i + 1) % n];
    double w = a[0] * b[1] - b[0] * a[1];
    area2 += w;
    cx += (a[0] + b[0]) * w;
    cy += (a[1] + b[1]) * w;
  }
  if (std::abs(area2) < 1e-12) {
    Vec mean(2, 0.0);
    for (const Vec& v : poly) mean = add(mean, v);
    return scale(1.0 / static_cast<double>(n), mean);
  }
  return {cx / (3 * area2), cy / (3 * area2)};
}

bool point_in_convex_polygon(const std::vector<Vec>& poly, const Vec& p, double tol) {
  if (poly.empty()) return false;
  if (poly.size() == 1) return norm(sub(p, poly[0])) <= tol;
  if (poly.size() == 2) {
    // distance to the segment
    Vec d = sub(poly[1], poly[0]);
    double len2 = dot(d, d);
    double t = len2 < 1e-18 ? 0.0 : std::clamp(dot(sub(p, poly[0]), d) / len2, 0.0, 1.0);
    return norm(sub(p, add(poly[0], scale(t, d)))) <= tol;
  }
  double orient = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& a = poly[i];
    const Vec& b = poly[(i + 1) % n];
    orient += (b[0] - a[0]) * (b[1] + a[1]);
  }
  double sign = orient < 0 ? 1.0 : -1.0;  // CCW has negative doubled "area" here
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& a = poly[i];
    const Vec& b = poly[(i + 1) % n];
    double cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
    if (sign * cross < -tol * std::max(1.0, norm(sub(b, a)))) return false;
  }
  return true;
}

CenterRegionApprox center_region_2d(const Family& f, int r, int angular_steps) {
  require_2d(f, "center_region_2d");
  if (r < 1 || r > f.size()) throw std::invalid_argument("center_region_2d: r out of range");
  if (angular_steps < 3) throw std::invalid_argument("center_region_2d: need >= 3 steps");

  CenterRegionApprox region;
  region.r = r;

  Vec lo, hi;
  bounding_box(f, lo, hi);
  double pad = 1.0 + 0.1 * (std::abs(hi[0] - lo[0]) + std::abs(hi[1] - lo[1]));
  std::vector<Vec> poly = {{lo[0] - pad, lo[1] - pad},
                           {hi[0] + pad, lo[1] - pad},
                           {hi[0] + pad, hi[1] + pad},
                           {lo[0] - pad, hi[1] + pad}};

  for (int j = 0; j < angular_steps && !poly.empty(); ++j) {
    double th = (kTwoPi / 2) * j / angular_steps;  // planks repeat at angle pi
    Vec u = {std::cos(th), std::sin(th)};
    Plank plank = compute_plank(f, u, r);
    if (plank.empty) {
      poly.clear();
      break;
    }
    poly = clip_halfplane(poly, plank.direction, plank.lo, f.tol);
    if (poly.empty()) break;
    poly = clip_halfplane(poly, scale(-1.0, plank.direction), -plank.hi, f.tol);
  }

  region.outer_polygon = poly;
  region.empty_flag = poly.empty();
  if (region.empty_flag) return region;

  std::vector<Vec> candidates;
  candidates.push_back(polygon_centroid(poly));
  candidates.insert(candidates.end(), poly.begin(), poly.end());
  for (const Vec& q : candidates)
    if (depth_exact_2d(f, q).value >= r) region.certified_points.push_back(q);
  return region;
}

std::pair<int, Vec> max_depth_2d(const Family& f) {
  require_2d(f, "max_depth_2d");

  // Distinct vertices of the union.
  std::vector<Vec> verts;
  {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const Polytope& s : f.sets)
      for (const Vec& v : s.vertices)
        if (seen.insert({quantize(v[0]), quantize(v[1])}).second) verts.push_back(v);
  }

  Vec lo, hi;
  bounding_box(f, lo, hi);
  double margin = 1e-6 + 1e-9 * (std::abs(hi[0]) + std::abs(hi[1]));
  auto in_box = [&](const Vec& p) {
    return p[0] >= lo[0] - margin && p[0] <= hi[0] + margin && p[1] >= lo[1] - margin &&
           p[1] <= hi[1] + margin;
  };

  // Candidates: vertices, intersections of vertex-pair lines, and centroids
  // of vertex triples. Extreme points of every depth super-level set lie on
  // lines through two vertices, so the first two groups reach them; the
  // centroids add interior representatives.
  std::vector<Vec> candidates;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  auto push = [&](const Vec& p) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || !in_box(p)) return;
    if (seen.insert({quantize(p[0]), quantize(p[1])}).second) candidates.push_back(p);
  };
  for (const Vec& v : verts) push(v);

  struct Line {
    Vec a, d;  // point + direction
  };
  std::vector<Line> lines;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      lines.push_back({verts[i], sub(verts[j], verts[i])});

  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      double det = lines[i].d[0] * lines[j].d[1] - lines[i].d[1] * lines[j].d[0];
      if (std::abs(det) < 1e-12) continue;
      Vec delta = sub(lines[j].a, lines[i].a);
      double t = (delta[0] * lines[j].d[1] - delta[1] * lines[j].d[0]) / det;
      push(add(lines[i].a, scale(t, lines[i].d)));
    }

  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      for (std::size_t k = j + 1; k < verts.size(); ++k)
        push(scale(1.0 / 3.0, add(verts[i], add(verts[j], verts[k]))));

  if (candidates.empty()) candidates.push_back(verts.front());

  std::vector<int> depth(candidates.size(), 0);
  parallel_for(candidates.size(),
               [&](std::size_t i) { depth[i] = depth_exact_2d(f, candidates[i]).value; });

  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (depth[i] > depth[best]) best = i;
  return {depth[best], candidates[best]};
}

int min_transversal_count_2d(const Family& f, const Vec& p) {
  require_2d(f, "min_transversal_count_2d");
  if (p.size() != 2)
    throw std::invalid_argument("min_transversal_count_2d: point dimension mismatch");
  std::vector<double> angles = sweep_eval_angles(event_angles_about(f, p));
  int best = f.size() + 1;
  for (double th : angles) {
    double cs = std::cos(th), sn = std::sin(th);
    int cnt = 0;
    for (const Polytope& s : f.sets) {
      double mn = std::numeric_limits<double>::infinity();
      double mx = -mn;
      for (const Vec& v : s.vertices) {
        double t = cs * (v[0] - p[0]) + sn * (v[1] - p[1]);
        mn = std::min(mn, t);
        mx = std::max(mx, t);
      }
      if (mn <= f.tol && mx >= -f.tol) ++cnt;
    }
    best = std::min(best, cnt);
  }
  return best;
}

namespace {

// Candidate directions for the witness search: perpendiculars to vertex
// differences (where plank order statistics change) plus a uniform sweep.
std::vector<double> witness_direction_angles(const Family& f, int resolution) {
  std::vector<Vec> verts;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const Polytope& s : f.sets)
    for (const Vec& v : s.vertices)
      if (seen.insert({quantize(v[0]), quantize(v[1])}).second) verts.push_back(v);
  std::vector<double> angles;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      double dx = verts[j][0] - verts[i][0], dy = verts[j][1] - verts[i][1];
      if (std::abs(dx) < 1e-15 && std::abs(dy) < 1e-15) continue;
      double base = std::atan2(dy, dx);
      angles.push_back(base + kTwoPi / 4);
      angles.push_back(base - kTwoPi / 4);
    }
  for (int j = 0; j < resolution; ++j) angles.push_back(kTwoPi * j / resolution);
  return sorted_unique_angles(std::move(angles));
}

struct WitnessDirection {
  Vec u;            // unit, double
  QVec u_exact;     // the same values, exact
  Rational offset;  // inner bound of the level-r plank minus the inflation
};

// Round a rational up to the nearest double so the represented halfspace
// shrinks: emptiness certificates survive the conversion.
double double_ceil(const Rational& q) {
  double d = rat_to_double(q);
  if (rat_from_double(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

}  // namespace

std::variant<Vec, SimplexWitness> simplex_witness_2d(const Family& f, int r, int resolution) {
  require_2d(f, "simplex_witness_2d");
  const int n = f.size();
  if (r < 1 || r > n) throw std::invalid_argument("simplex_witness_2d: r out of range");

  auto [maxd, maximizer] = max_depth_2d(f);
  if (maxd >= r) return maximizer;

  const Rational inflation(1, 1000000);  // eps' pushing the bound off degeneracy
  std::vector<double> angles = witness_direction_angles(f, resolution);

  std::vector<WitnessDirection> pool;
  pool.reserve(angles.size());
  for (double th : angles) {
    WitnessDirection wd;
    wd.u = {std::cos(th), std::sin(th)};
    wd.u_exact = {rat_from_double(wd.u[0]), rat_from_double(wd.u[1])};
    // r-th smallest projection minimum, exactly
    QVec mins;
    mins.reserve(n);
    for (const Polytope& s : f.sets) {
      Rational mn = dot(wd.u_exact, s.exact[0]);
      for (std::size_t v = 1; v < s.exact.size(); ++v)
        mn = std::min(mn, dot(wd.u_exact, s.exact[v]));
      mins.push_back(mn);
    }
    std::nth_element(mins.begin(), mins.begin() + (r - 1), mins.end());
    wd.offset = mins[r - 1] - inflation;
    pool.push_back(std::move(wd));
  }

  auto contain_count = [&](const Halfspace& h) {
    int cnt = 0;
    for (const Polytope& s : f.sets)
      if (halfspace_contains(h, s, f.tol)) ++cnt;
    return cnt;
  };

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<QVec> normals;
    QVec offsets;
    for (const WitnessDirection& wd : pool) {
      normals.push_back(wd.u_exact);
      offsets.push_back(wd.offset);
    }
    auto certificate = farkas_empty_subfamily(normals, offsets);
    if (!certificate)
      throw std::runtime_error("simplex_witness_2d: witness not found at resolution " +
                               std::to_string(resolution));

    std::vector<int> picked = *certificate;
    // Pad antipodal-pair certificates up to d+1 = 3 halfspaces.
    for (std::size_t j = 0; picked.size() < 3 && j < pool.size(); ++j)
      if (std::find(picked.begin(), picked.end(), static_cast<int>(j)) == picked.end()) {
        Halfspace h(pool[j].u, double_ceil(pool[j].offset));
        if (contain_count(h) > n - r) picked.push_back(static_cast<int>(j));
      }
    if (picked.size() != 3)
      throw std::runtime_error("simplex_witness_2d: could not assemble three halfspaces");
    std::sort(picked.begin(), picked.end());

    SimplexWitness witness;
    bool counts_ok = true;
    int bad_index = -1;
    for (int j : picked) {
      Halfspace h(pool[j].u, double_ceil(pool[j].offset));
      int cc = contain_count(h);
      if (cc <= n - r) {
        counts_ok = false;
        bad_index = j;
        break;
      }
      witness.halfspaces.push_back(h);
      witness.contain_counts.push_back(cc);
    }
    if (!counts_ok) {
      // Near-tied order statistics at this direction; retry without it.
      pool.erase(pool.begin() + bad_index);
      if (pool.size() < 3) break;
      continue;
    }
    if (halfspaces_feasible(witness.halfspaces))
      throw std::runtime_error("simplex_witness_2d: certificate failed LP verification");
    return witness;
  }
  throw std::runtime_error("simplex_witness_2d: witness not found at resolution " +
                           std::to_string(resolution));
}

HolmsenResult holmsen_depth_check(const Family& f) {
  require_2d(f, "holmsen_depth_check");
  const int n = f.size();
  if (n < 3) throw std::invalid_argument("holmsen_depth_check: needs at least three sets");

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto hull_union = [&](int a, int b) {
          std::vector<QVec> vs = f.sets[a].exact;
          vs.insert(vs.end(), f.sets[b].exact.begin(), f.sets[b].exact.end());
          return Polytope(std::move(vs));
        };
        std::vector<Polytope> triple = {hull_union(i, j), hull_union(j, k), hull_union(k, i)};
        if (!polytopes_intersect(triple))
          throw std::invalid_argument("holmsen_depth_check: triple condition violated (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + ")");
      }

  auto [depth, point] = max_depth_2d(f);
  HolmsenResult res;
  res.depth = depth;
  res.point = point;
  res.deep_enough = 2 * depth >= n;
  return res;
}

}  // namespace cdepth
