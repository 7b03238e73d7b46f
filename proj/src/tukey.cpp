#include "convexdepth/tukey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "convexdepth/depth.hpp"
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

std::int64_t quantize(double x) { return std::llround(x * 1e9); }

}  // namespace

PointSet::PointSet(int d, std::vector<Vec> pts) : dim(d), points(std::move(pts)) {
  if (dim < 1) throw std::invalid_argument("pointset: dimension must be positive");
  if (points.empty()) throw std::invalid_argument("pointset: requires at least one point");
  for (const Vec& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("pointset: point dimension mismatch");
}

int tukey_depth_2d(const PointSet& s, const Vec& p, double tol) {
  if (s.dim != 2) throw std::invalid_argument("tukey_depth_2d: requires dimension 2");
  if (p.size() != 2) throw std::invalid_argument("tukey_depth_2d: point dimension mismatch");

  std::vector<double> events;
  for (const Vec& q : s.points) {
    double dx = q[0] - p[0], dy = q[1] - p[1];
    if (std::abs(dx) < 1e-15 && std::abs(dy) < 1e-15) continue;
    double base = std::atan2(dy, dx);
    events.push_back(wrap_angle(base + kTwoPi / 4));
    events.push_back(wrap_angle(base - kTwoPi / 4));
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               events.end());
  if (events.size() > 1 && (events.front() + kTwoPi) - events.back() <= 1e-12)
    events.pop_back();

  std::vector<double> angles = events;
  for (std::size_t i = 0; i < events.size(); ++i) {
    double a = events[i];
    double b = (i + 1 < events.size()) ? events[i + 1] : events[0] + kTwoPi;
    angles.push_back(wrap_angle(0.5 * (a + b)));
  }
  if (angles.empty()) angles.push_back(0.0);

  int best = s.size() + 1;
  for (double th : angles) {
    double cs = std::cos(th), sn = std::sin(th);
    int cnt = 0;
    for (const Vec& q : s.points)
      if (cs * (q[0] - p[0]) + sn * (q[1] - p[1]) >= -tol) ++cnt;
    best = std::min(best, cnt);
  }
  return best;
}

std::pair<Vec, int> rado_centerpoint_2d(const PointSet& s) {
  if (s.dim != 2) throw std::invalid_argument("rado_centerpoint_2d: requires dimension 2");

  std::vector<Vec> pts;
  {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const Vec& q : s.points)
      if (seen.insert({quantize(q[0]), quantize(q[1])}).second) pts.push_back(q);
  }

  Vec lo = {pts[0][0], pts[0][1]}, hi = lo;
  for (const Vec& q : pts) {
    lo[0] = std::min(lo[0], q[0]);
    lo[1] = std::min(lo[1], q[1]);
    hi[0] = std::max(hi[0], q[0]);
    hi[1] = std::max(hi[1], q[1]);
  }
  double margin = 1e-6;
  auto in_box = [&](const Vec& p) {
    return p[0] >= lo[0] - margin && p[0] <= hi[0] + margin && p[1] >= lo[1] - margin &&
           p[1] <= hi[1] + margin;
  };

  // Same candidate arrangement as the family maximizer: data points, pairwise
  // intersections of point-pair lines, and triple centroids.
  std::vector<Vec> candidates;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  auto push = [&](const Vec& p) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || !in_box(p)) return;
    if (seen.insert({quantize(p[0]), quantize(p[1])}).second) candidates.push_back(p);
  };
  for (const Vec& q : pts) push(q);

  struct Line {
    Vec a, d;
  };
  std::vector<Line> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) lines.push_back({pts[i], sub(pts[j], pts[i])});
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      double det = lines[i].d[0] * lines[j].d[1] - lines[i].d[1] * lines[j].d[0];
      if (std::abs(det) < 1e-12) continue;
      Vec delta = sub(lines[j].a, lines[i].a);
      double t = (delta[0] * lines[j].d[1] - delta[1] * lines[j].d[0]) / det;
      push(add(lines[i].a, scale(t, lines[i].d)));
    }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        push(scale(1.0 / 3.0, add(pts[i], add(pts[j], pts[k]))));

  std::vector<int> depth(candidates.size(), 0);
  parallel_for(candidates.size(),
               [&](std::size_t i) { depth[i] = tukey_depth_2d(s, candidates[i]); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (depth[i] > depth[best]) best = i;
  return {candidates[best], depth[best]};
}

int representative_supremum_2d(const Family& f, const Vec& p, int samples, std::uint64_t seed) {
  if (f.dim != 2) throw std::invalid_argument("representative_supremum_2d: requires dimension 2");
  if (samples < 1) throw std::invalid_argument("representative_supremum_2d: samples >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(std::numeric_limits<double>::min(), 1.0);

  int best = 0;
  std::vector<Vec> reps(f.sets.size(), Vec(2));
  for (int it = 0; it < samples; ++it) {
    for (std::size_t i = 0; i < f.sets.size(); ++i) {
      const Polytope& s = f.sets[i];
      // Dirichlet(1,...,1): exponential weights, normalized.
      double total = 0;
      Vec pt(2, 0.0);
      std::vector<double> w(s.vertices.size());
      for (double& x : w) {
        x = -std::log(uni(rng));
        total += x;
      }
      for (std::size_t v = 0; v < s.vertices.size(); ++v) {
        pt[0] += w[v] / total * s.vertices[v][0];
        pt[1] += w[v] / total * s.vertices[v][1];
      }
      reps[i] = pt;
    }
    best = std::max(best, tukey_depth_2d(PointSet(2, reps), p, f.tol));
    if (best == f.size()) break;  // cannot improve further
  }
  return best;
}

std::pair<Vec, int> bbound_point(const Family& f, int k) {
  if (f.dim != 2) throw std::invalid_argument("bbound_point: requires dimension 2");
  const int n = f.size();
  if (k < 1 || k > 3 || k > n) throw std::invalid_argument("bbound_point: k out of range");

  // One representative point per k-subset intersection: average of the
  // +-x / +-y extreme points of the feasible region, found by exact LP.
  const std::vector<QVec> objectives = {
      {Rational(1), Rational(0)},
      {Rational(-1), Rational(0)},
      {Rational(0), Rational(1)},
      {Rational(0), Rational(-1)},
  };

  std::vector<Vec> reps;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<Polytope> subset;
    for (int i : idx) subset.push_back(f.sets[i]);
    QVec sum(2, Rational(0));
    for (const QVec& w : objectives) {
      auto opt = maximize_over_intersection(subset, w);
      if (!opt) {
        std::string names;
        for (int i : idx) names += (names.empty() ? "" : ",") + std::to_string(i + 1);
        throw std::invalid_argument("bbound_point: not k-intersecting (subset {" + names + "})");
      }
      sum[0] += (*opt)[0];
      sum[1] += (*opt)[1];
    }
    reps.push_back({rat_to_double(sum[0] / 4), rat_to_double(sum[1] / 4)});

    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }

  auto [point, tdepth] = rado_centerpoint_2d(PointSet(2, reps));
  (void)tdepth;
  int r = depth_exact_2d(f, point).value;
  return {point, r};
}

}  // namespace cdepth
