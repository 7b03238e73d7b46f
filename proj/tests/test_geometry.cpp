#include <doctest.h>

#include <cmath>
#include <random>

#include "convexdepth/geometry.hpp"
#include "convexdepth/scenarios.hpp"
#include "test_support.hpp"

using namespace cdepth;
using testsupport::box;
using testsupport::segment;

TEST_CASE("support over the vertex list") {
  Polytope square = box(0, 0, 1, 1);
  CHECK(support(square, {1, 0}) == doctest::Approx(1.0));
  CHECK(support(square, {0, 0}) == 0.0);

  Polytope tri(std::vector<Vec>{{0, 0}, {3, 0}, {1.5, 2.598}});
  CHECK(support(tri, {0, 1}) == doctest::Approx(2.598));

  CHECK_THROWS_AS(support(square, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("support is positively homogeneous and subadditive") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-3, 3);
  std::uniform_real_distribution<double> lambda(0.1, 10);
  for (int it = 0; it < 200; ++it) {
    Polytope p = testsupport::random_polytope(rng, 2, 2.0);
    Vec u = {coord(rng), coord(rng)};
    Vec w = {coord(rng), coord(rng)};
    double t = lambda(rng);
    CHECK(support(p, scale(t, u)) == doctest::Approx(t * support(p, u)).epsilon(1e-9));
    CHECK(support(p, add(u, w)) <= support(p, u) + support(p, w) + 1e-9);
  }
}

TEST_CASE("halfspace intersection is a closed test") {
  Polytope square = box(0, 0, 1, 1);
  CHECK(halfspace_intersects(Halfspace({1, 0}, 1.0), square));   // tangent counts
  CHECK_FALSE(halfspace_intersects(Halfspace({1, 0}, 1.5), square));

  // bottom segment of the trimmed-triangle family lies on y = 0
  Polytope bottom = segment(1, 0, 2, 0);
  CHECK_FALSE(halfspace_intersects(Halfspace({0, 1}, 0.8), bottom));
  CHECK(halfspace_intersects(Halfspace({0, -1}, -0.1), bottom));
}

TEST_CASE("halfspace containment") {
  Polytope square = box(0, 0, 1, 1);
  CHECK(halfspace_contains(Halfspace({1, 0}, 0.0), square));
  CHECK_FALSE(halfspace_contains(Halfspace({1, 0}, 0.5), square));
  CHECK(halfspace_intersects(Halfspace({1, 0}, 0.5), square));

  Polytope bottom = segment(1, 0, 2, 0);
  CHECK(halfspace_contains(Halfspace({0, -1}, -0.1), bottom));
}

TEST_CASE("containment implies intersection") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-2, 2);
  for (int it = 0; it < 300; ++it) {
    Polytope p = testsupport::random_polytope(rng, 2, 2.0);
    Vec u = {coord(rng), coord(rng)};
    if (norm(u) < 1e-6) continue;
    Halfspace h(u, coord(rng));
    if (halfspace_contains(h, p)) CHECK(halfspace_intersects(h, p));
  }
}

TEST_CASE("halfspace constructor normalizes and validates") {
  Halfspace h({3, 4}, 10);
  CHECK(norm(h.normal) == doctest::Approx(1.0));
  CHECK(h.offset == doctest::Approx(2.0));
  CHECK_THROWS_AS(Halfspace({0, 0}, 1), std::invalid_argument);
}

TEST_CASE("family and polytope validation") {
  CHECK_THROWS_AS(Polytope(std::vector<Vec>{}), std::invalid_argument);
  CHECK_THROWS_AS(Polytope(std::vector<Vec>{{0, 0}, {1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Family(2, {box(0, 0, 1, 1), Polytope(std::vector<Vec>{{0.0, 0.0, 0.0}})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Family(2, {}), std::invalid_argument);
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Polytope(std::vector<Vec>{{inf, 0}}), std::invalid_argument);
}

TEST_CASE("figure1 family coordinates") {
  Family fam = build_figure1_family();
  REQUIRE(fam.size() == 3);
  CHECK(fam.sets[0].vertices[0] == Vec{1.0, 0.0});
  CHECK(fam.sets[0].vertices[1] == Vec{2.0, 0.0});
  Vec o = figure1_center();
  CHECK(o[0] == doctest::Approx(1.5));
  CHECK(o[1] == doctest::Approx(0.8660254038).epsilon(1e-9));
  // segments all have unit length
  for (const Polytope& s : fam.sets)
    CHECK(norm(sub(s.vertices[1], s.vertices[0])) == doctest::Approx(1.0));
}
