#include <doctest.h>

#include <cmath>
#include <random>
#include <variant>

#include "convexdepth/depth.hpp"
#include "convexdepth/lp.hpp"
#include "convexdepth/scenarios.hpp"
#include "convexdepth/util.hpp"
#include "test_support.hpp"

using namespace cdepth;
using testsupport::box;
using testsupport::segment;

namespace {

// far-apart short horizontal segments in a triangle-ish placement: no point
// of depth 2 exists (verified by max_depth below)
Family far_segment_family() {
  return Family(2, {segment(0, 0, 1, 0), segment(4, 1, 5, 1), segment(2, 8, 3, 8)});
}

}  // namespace

TEST_CASE("center region of the triangle-edge family") {
  Family tri = triangle_edge_family();

  CenterRegionApprox r2 = center_region_2d(tri, 2, 360);
  CHECK_FALSE(r2.empty_flag);
  REQUIRE(r2.outer_polygon.size() >= 3);
  CHECK(point_in_convex_polygon(r2.outer_polygon, {1.0 / 3, 1.0 / 3}));
  // the polygon centroid is certified at depth 2
  REQUIRE_FALSE(r2.certified_points.empty());
  Vec centroid = polygon_centroid(r2.outer_polygon);
  CHECK(depth_exact_2d(tri, centroid).value >= 2);
  for (const Vec& q : r2.certified_points) {
    CHECK(point_in_convex_polygon(r2.outer_polygon, q));
    CHECK(depth_exact_2d(tri, q).value >= 2);
  }

  CenterRegionApprox r3 = center_region_2d(tri, 3, 360);
  CHECK(r3.empty_flag);
  CHECK(r3.certified_points.empty());
}

TEST_CASE("center region of a single square contains the square") {
  Family square = testsupport::unit_square_family();
  CenterRegionApprox region = center_region_2d(square, 1, 90);
  CHECK_FALSE(region.empty_flag);
  for (const Vec& corner : {Vec{0, 0}, Vec{1, 0}, Vec{1, 1}, Vec{0, 1}})
    CHECK(point_in_convex_polygon(region.outer_polygon, corner, 1e-6));
  bool center_certified = false;
  for (const Vec& q : region.certified_points)
    if (norm(sub(q, {0.5, 0.5})) < 1e-6) center_certified = true;
  CHECK(center_certified);
  CHECK_THROWS_AS(center_region_2d(square, 2, 90), std::invalid_argument);
  CHECK_THROWS_AS(center_region_2d(square, 1, 2), std::invalid_argument);
}

TEST_CASE("max depth maximizers") {
  Family tri = triangle_edge_family();
  auto [tri_depth, tri_point] = max_depth_2d(tri);
  CHECK(tri_depth == 2);
  CHECK(depth_exact_2d(tri, tri_point).value == 2);

  Family square = testsupport::unit_square_family();
  auto [sq_depth, sq_point] = max_depth_2d(square);
  CHECK(sq_depth == 1);
  CHECK(point_in_polytope(square.sets[0], sq_point));

  Family fam = build_figure1_family();
  auto [fig_depth, fig_point] = max_depth_2d(fam);
  CHECK(fig_depth == 2);
  // the depth-2 region of this family is the single center point
  CHECK(norm(sub(fig_point, figure1_center())) < 1e-6);

  CHECK(max_depth_2d(far_segment_family()).first == 1);
}

TEST_CASE("max depth dominates a grid oracle") {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 6; ++it) {
    Family f = testsupport::random_family(rng, 2, 2, 5, 1.5, 4);
    auto [best, arg] = max_depth_2d(f);
    CHECK(depth_exact_2d(f, arg).value == best);
    Vec lo, hi;
    bounding_box(f, lo, hi);
    for (int i = 0; i <= 24; ++i)
      for (int j = 0; j <= 24; ++j) {
        Vec p = {lo[0] + (hi[0] - lo[0]) * i / 24.0, lo[1] + (hi[1] - lo[1]) * j / 24.0};
        CHECK(depth_exact_2d(f, p).value <= best);
      }
  }
}

TEST_CASE("region polygon is an outer approximation of deep points") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> coord(-1.6, 1.6);
  for (int it = 0; it < 10; ++it) {
    Family f = testsupport::random_family(rng, 2, 2, 6, 1.5, 4);
    auto [best, arg] = max_depth_2d(f);
    if (best < 1) continue;
    CenterRegionApprox region = center_region_2d(f, best, 180);
    REQUIRE_FALSE(region.empty_flag);
    CHECK(point_in_convex_polygon(region.outer_polygon, arg, 1e-6));
    // points with depth >= best must lie inside the sampled outer polygon
    for (int q = 0; q < 20; ++q) {
      Vec p = {coord(rng), coord(rng)};
      if (depth_exact_2d(f, p).value >= best)
        CHECK(point_in_convex_polygon(region.outer_polygon, p, 1e-6));
    }
  }
}

TEST_CASE("plank membership separates deep and shallow points") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> coord(-1.6, 1.6);
  for (int it = 0; it < 10; ++it) {
    Family f = testsupport::random_family(rng, 2, 2, 6, 1.5, 4);
    auto [best, arg] = max_depth_2d(f);
    if (best < 1) continue;
    int r = 1 + static_cast<int>(rng() % best);
    std::vector<Plank> planks;
    for (int j = 0; j < 720; ++j) {
      double th = 3.14159265358979323846 * j / 720.0;
      planks.push_back(compute_plank(f, {std::cos(th), std::sin(th)}, r));
    }
    for (int q = 0; q < 25; ++q) {
      Vec p = q == 0 ? arg : Vec{coord(rng), coord(rng)};
      bool in_all = true;
      for (const Plank& plank : planks)
        if (!plank.contains(p, f.tol)) {
          in_all = false;
          break;
        }
      int depth = depth_exact_2d(f, p).value;
      if (depth >= r) CHECK(in_all);       // deep points lie in every plank
      if (!in_all) CHECK(depth < r);       // outside some plank: shallow
    }
  }
}

TEST_CASE("depth super-level sets are convex along segments") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> coord(-1.6, 1.6);
  for (int it = 0; it < 15; ++it) {
    Family f = testsupport::random_family(rng, 2, 2, 6, 1.5, 4);
    Vec p = {coord(rng), coord(rng)};
    Vec q = {coord(rng), coord(rng)};
    int r = std::min(depth_exact_2d(f, p).value, depth_exact_2d(f, q).value);
    if (r == 0) continue;
    for (int s = 0; s <= 10; ++s) {
      Vec mid = add(scale(s / 10.0, p), scale(1.0 - s / 10.0, q));
      CHECK(depth_exact_2d(f, mid).value >= r);
    }
  }
}

TEST_CASE("simplex witness: deep point branch") {
  Family tri = triangle_edge_family();
  auto result = simplex_witness_2d(tri, 2);
  REQUIRE(std::holds_alternative<Vec>(result));
  CHECK(depth_exact_2d(tri, std::get<Vec>(result)).value >= 2);
}

TEST_CASE("simplex witness: empty-intersection branch at r = n") {
  Family tri = triangle_edge_family();
  auto result = simplex_witness_2d(tri, 3);
  REQUIRE(std::holds_alternative<SimplexWitness>(result));
  const SimplexWitness& w = std::get<SimplexWitness>(result);
  REQUIRE(w.halfspaces.size() == 3);
  CHECK_FALSE(halfspaces_feasible(w.halfspaces));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(w.contain_counts[i] > 0);  // n - r = 0
    int recount = 0;
    for (const Polytope& s : tri.sets)
      if (halfspace_contains(w.halfspaces[i], s, tri.tol)) ++recount;
    CHECK(recount == w.contain_counts[i]);
  }
}

TEST_CASE("simplex witness on disjoint far segments at r = 2") {
  Family far = far_segment_family();
  auto result = simplex_witness_2d(far, 2);
  REQUIRE(std::holds_alternative<SimplexWitness>(result));
  const SimplexWitness& w = std::get<SimplexWitness>(result);
  REQUIRE(w.halfspaces.size() == 3);
  CHECK_FALSE(halfspaces_feasible(w.halfspaces));
  for (int count : w.contain_counts) CHECK(count >= 2);  // > n - r = 1
}

TEST_CASE("transversal sweep matches dense direction sampling") {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (int it = 0; it < 15; ++it) {
    Family f = testsupport::random_family(rng, 2, 2, 6, 1.5, 5);
    Vec p = {coord(rng), coord(rng)};
    int swept = min_transversal_count_2d(f, p);
    int sampled = f.size();
    for (int j = 0; j < 20000; ++j) {
      double th = 3.14159265358979323846 * j / 20000.0;
      double cs = std::cos(th), sn = std::sin(th);
      int cnt = 0;
      for (const Polytope& s : f.sets) {
        double mn = 1e300, mx = -1e300;
        for (const Vec& v : s.vertices) {
          double t = cs * (v[0] - p[0]) + sn * (v[1] - p[1]);
          mn = std::min(mn, t);
          mx = std::max(mx, t);
        }
        if (mn <= f.tol && mx >= -f.tol) ++cnt;
      }
      sampled = std::min(sampled, cnt);
    }
    CHECK(swept <= sampled);
    CHECK(swept == sampled);
  }
}

TEST_CASE("region shrinks as the angular resolution grows") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 8; ++it) {
    Family f = testsupport::random_family(rng, 2, 2, 5, 1.5, 4);
    auto [best, arg] = max_depth_2d(f);
    CenterRegionApprox coarse = center_region_2d(f, best, 24);
    CenterRegionApprox fine = center_region_2d(f, best, 360);
    REQUIRE_FALSE(coarse.empty_flag);
    REQUIRE_FALSE(fine.empty_flag);
    // every vertex of the finer region lies inside the coarse one
    for (const Vec& v : fine.outer_polygon)
      CHECK(point_in_convex_polygon(coarse.outer_polygon, v, 1e-6));
    CHECK(point_in_convex_polygon(fine.outer_polygon, arg, 1e-6));
  }
}

TEST_CASE("witness fuzz on small shallow families") {
  std::mt19937_64 rng(103);
  int done = 0;
  while (done < 50) {
    Family f = testsupport::random_family(rng, 2, 3, 4, 2.0, 3);
    auto [maxd, arg] = max_depth_2d(f);
    if (maxd >= f.size()) continue;
    ++done;
    auto result = simplex_witness_2d(f, maxd + 1);
    REQUIRE(std::holds_alternative<SimplexWitness>(result));
    const SimplexWitness& w = std::get<SimplexWitness>(result);
    CHECK_FALSE(halfspaces_feasible(w.halfspaces));
    for (std::size_t i = 0; i < w.halfspaces.size(); ++i)
      CHECK(w.contain_counts[i] > f.size() - (maxd + 1));
  }
}

TEST_CASE("results are thread-count independent") {
  std::mt19937_64 rng(79);
  Family f = testsupport::random_family(rng, 2, 3, 6, 1.5, 4);
  set_thread_budget(1);
  auto serial = max_depth_2d(f);
  set_thread_budget(8);
  auto parallel = max_depth_2d(f);
  set_thread_budget(0);  // back to hardware default
  CHECK(serial.first == parallel.first);
  CHECK(serial.second == parallel.second);
}

TEST_CASE("holmsen check") {
  Family tri = triangle_edge_family();
  HolmsenResult res = holmsen_depth_check(tri);
  CHECK(res.deep_enough);  // depth 2 >= 3/2
  CHECK(res.depth == 2);

  // two crossing segment pairs
  Family cross(2, {segment(-1, -1, 1, 1), segment(-1, 1, 1, -1), segment(-1.2, -0.8, 0.8, 1.2),
                   segment(-0.8, 1.2, 1.2, -0.8)});
  HolmsenResult res4 = holmsen_depth_check(cross);
  CHECK(res4.depth >= 2);
  CHECK(res4.deep_enough);

  // three far-apart squares violate the triple condition
  Family apart(2, {box(0, 0, 1, 1), box(10, 0, 11, 1), box(5, 10, 6, 11)});
  CHECK_THROWS_WITH_AS(holmsen_depth_check(apart),
                       "holmsen_depth_check: triple condition violated (1,2,3)",
                       std::invalid_argument);
}
