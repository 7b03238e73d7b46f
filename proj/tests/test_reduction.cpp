#include <doctest.h>

#include <random>

#include "convexdepth/depth.hpp"
#include "convexdepth/lp.hpp"
#include "convexdepth/reduction.hpp"
#include "convexdepth/scenarios.hpp"
#include "test_support.hpp"

using namespace cdepth;
using testsupport::segment;

namespace {

// conv of the simplex corners other than j (1-based), for checking faces
Polytope corner_complement(const ReductionFamily& rf, int skip) {
  std::vector<QVec> verts;
  for (int j = 1; j <= rf.d + 1; ++j)
    if (j != skip) verts.push_back(rf.simplex[j - 1]);
  return Polytope(std::move(verts));
}

}  // namespace

TEST_CASE("simplex-face construction from disjoint singletons") {
  HittingInstance inst(3, {{1}, {2}, {3}});
  ReductionFamily rf = hitting_to_family(inst, 2);
  REQUIRE(rf.elements.size() == 3);
  // element x lies only in A_x, so its face is the edge skipping corner x
  for (int x = 0; x < 3; ++x) {
    CHECK(rf.elements[x].I == std::vector<int>{x + 1});
    CHECK(rf.elements[x].face.size() == 2);
  }
  // barycenter at the origin
  QVec sum(2, Rational(0));
  for (const QVec& c : rf.simplex) {
    sum[0] += c[0];
    sum[1] += c[1];
  }
  CHECK(sum[0] == 0);
  CHECK(sum[1] == 0);
}

TEST_CASE("face index arithmetic on a chain instance") {
  HittingInstance inst(4, {{1, 2}, {2, 3}, {3, 4}});
  ReductionFamily rf = hitting_to_family(inst, 2);
  CHECK(rf.elements[0].I == std::vector<int>{1});
  CHECK(rf.elements[1].I == std::vector<int>{1, 2});
  CHECK(rf.elements[2].I == std::vector<int>{2, 3});
  CHECK(rf.elements[3].I == std::vector<int>{3});
  // element 2 keeps only corner 3
  CHECK(rf.elements[1].face.size() == 1);
  CHECK(rf.elements[1].face.exact[0] == rf.simplex[2]);
  // element 1 keeps corners 2 and 3
  CHECK(rf.elements[0].face.size() == 2);
}

TEST_CASE("element outside every subset maps to the whole simplex") {
  HittingInstance inst(3, {{1}, {2}, {1}});
  ReductionFamily rf = hitting_to_family(inst, 2);
  CHECK(rf.elements[2].I.empty());
  CHECK(rf.elements[2].face.size() == 3);
}

TEST_CASE("element hitting every subset is rejected") {
  HittingInstance inst(2, {{1}, {1, 2}, {1}});
  CHECK_THROWS_AS(hitting_to_family(inst, 2), std::invalid_argument);
  CHECK_THROWS_AS(hitting_to_family(HittingInstance(2, {{1}, {2}}), 2), std::invalid_argument);
}

TEST_CASE("faces equal the intersection of corner complements") {
  HittingInstance inst(4, {{1, 2}, {2, 3}, {3, 4}});
  ReductionFamily rf = hitting_to_family(inst, 2);
  for (const ReductionElement& e : rf.elements) {
    // every face vertex lies in C_i for each i in I_x
    for (const QVec& v : e.face.exact)
      for (int i : e.I) CHECK(point_in_polytope(corner_complement(rf, i), v));
    // the skipped corners do not: P_i is outside C_i
    for (int i : e.I) CHECK_FALSE(point_in_polytope(corner_complement(rf, i), rf.simplex[i - 1]));
    // an LP point of the intersection lies in the face
    if (!e.I.empty()) {
      std::vector<Polytope> cs;
      for (int i : e.I) cs.push_back(corner_complement(rf, i));
      auto w = polytopes_common_point(cs);
      REQUIRE(w.has_value());
      CHECK(point_in_polytope(e.face, *w));
    }
  }
}

TEST_CASE("intersection pattern equivalence") {
  HittingInstance inst(3, {{1}, {2}, {3}});
  ReductionFamily rf = hitting_to_family(inst, 2);
  CHECK(verify_intersection_pattern(rf, 1));
  CHECK(verify_intersection_pattern(rf, 2));
  CHECK_FALSE(verify_intersection_pattern(rf, 3));
}

TEST_CASE("shallow family extraction") {
  Family far(2, {segment(0, 0, 1, 0), segment(4, 1, 5, 1), segment(2, 8, 3, 8)});
  HittingInstance inst = shallow_family_to_instance_2d(far, 2);
  CHECK(inst.ground_size == 3);
  REQUIRE(inst.m() == 3);
  for (const auto& a : inst.subsets) CHECK(a.size() >= 2);  // > n - r = 1

  // hitting indices name polytopes with empty common intersection
  HittingResult hs = min_hitting_set(inst);
  CHECK(hs.min_size <= 2);
  std::vector<Polytope> hit_sets;
  for (int e : hs.witness) hit_sets.push_back(far.sets[e - 1]);
  CHECK_FALSE(polytopes_intersect(hit_sets));

  // depth-2 point exists for the triangle edges: precondition violation
  CHECK_THROWS_AS(shallow_family_to_instance_2d(triangle_edge_family(), 2),
                  std::invalid_argument);
}

TEST_CASE("shallow extraction at r = n on the triangle edges") {
  Family tri = triangle_edge_family();
  HittingInstance inst = shallow_family_to_instance_2d(tri, 3);
  for (const auto& a : inst.subsets) CHECK(a.size() >= 1);
  HittingResult hs = min_hitting_set(inst);
  CHECK(hs.min_size <= 3);
  std::vector<Polytope> hit_sets;
  for (int e : hs.witness) hit_sets.push_back(tri.sets[e - 1]);
  CHECK_FALSE(polytopes_intersect(hit_sets));
}

TEST_CASE("equivalence roundtrip on disjoint singletons") {
  HittingInstance inst(3, {{1}, {2}, {3}});
  RoundtripReport rep = equivalence_roundtrip_2d(inst, 2);
  CHECK(rep.k_intersecting);
  CHECK(rep.max_depth == 2);
  CHECK(rep.min_ratio == Rational(1, 3));
  CHECK(rep.depth_ratio == Rational(2, 3));
  CHECK(rep.bound == Rational(2, 3));  // exact equality 2/3 = 1 - 1/3
  CHECK(rep.bound_holds);
}

TEST_CASE("equivalence roundtrip on disjoint pairs") {
  HittingInstance inst(6, {{1, 2}, {3, 4}, {5, 6}});
  RoundtripReport rep = equivalence_roundtrip_2d(inst, 2);
  CHECK(rep.k_intersecting);
  CHECK(rep.max_depth == 4);  // duplicated incident edges at a corner
  CHECK(rep.depth_ratio == Rational(2, 3));
  CHECK(rep.bound == Rational(2, 3));
  CHECK(rep.bound_holds);
}

TEST_CASE("3D simplex-face family: sampled depth converges at the barycenter") {
  // tetrahedron faces from disjoint singletons; every halfspace through the
  // barycenter holds a corner and therefore meets its three incident faces
  HittingInstance inst(4, {{1}, {2}, {3}, {4}});
  Family faces = hitting_to_family(inst, 3).to_family();
  Vec barycenter = {0.0, 0.0, 0.0};
  DepthCertificate fast = depth_sampled_upper(faces, barycenter, 10000, 42);
  DepthCertificate dense = depth_sampled_upper(faces, barycenter, 1000000, 43);
  CHECK(fast.value == dense.value);
  CHECK(fast.value == 3);
  CHECK(fast.method == DepthMethod::SampledUpper);
  // the certificate direction reproduces its own value
  CHECK(depth_upper_at(faces, barycenter, fast.witness_direction) == fast.value);
}

TEST_CASE("roundtrip guards") {
  // complement-flavored instance has a 2-hitting-set
  HittingInstance comp(3, {{2, 3}, {1, 3}, {1, 2}});
  CHECK_THROWS_AS(equivalence_roundtrip_2d(comp, 2), std::invalid_argument);
  CHECK_THROWS_AS(equivalence_roundtrip_2d(HittingInstance(2, {{1}, {2}}), 1),
                  std::invalid_argument);
}
