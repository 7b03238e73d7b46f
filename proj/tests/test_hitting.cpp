#include <doctest.h>

#include <random>

#include "convexdepth/hitting.hpp"

using namespace cdepth;

TEST_CASE("minimum hitting sets") {
  // three disjoint singletons need all three elements
  HittingInstance singles(3, {{1}, {2}, {3}});
  HittingResult res = min_hitting_set(singles);
  CHECK(res.min_size == 3);
  CHECK(res.witness == std::vector<int>{1, 2, 3});

  HittingInstance dup(2, {{1}, {1}});
  CHECK(min_hitting_set(dup).min_size == 1);

  // all 4-subsets of [6]
  HittingInstance comp = complement_instance(6, 2);
  CHECK(comp.m() == 15);
  CHECK(min_hitting_set(comp).min_size == 3);
  CHECK(min_hitting_set_exhaustive(comp).min_size == 3);
}

TEST_CASE("hitting witness hits every subset") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> ncount(2, 12);
  std::uniform_int_distribution<int> mcount(1, 8);
  for (int it = 0; it < 500; ++it) {
    int n = ncount(rng);
    int m = mcount(rng);
    std::vector<std::vector<int>> subsets;
    for (int i = 0; i < m; ++i) {
      std::vector<int> a;
      for (int e = 1; e <= n; ++e)
        if (rng() % 3 == 0) a.push_back(e);
      if (a.empty()) a.push_back(1 + static_cast<int>(rng() % n));
      subsets.push_back(a);
    }
    HittingInstance inst(n, subsets);
    HittingResult bb = min_hitting_set(inst);
    HittingResult ex = min_hitting_set_exhaustive(inst);
    CHECK(bb.min_size == ex.min_size);
    for (const auto& a : inst.subsets) {
      bool hit = false;
      for (int e : bb.witness)
        if (std::find(a.begin(), a.end(), e) != a.end()) hit = true;
      CHECK(hit);
    }
  }
}

TEST_CASE("instance beta ratios") {
  HittingInstance singles(3, {{1}, {2}, {3}});
  auto [hit2, ratio] = instance_beta_ratio(singles, 2);
  CHECK_FALSE(hit2);
  CHECK(ratio == Rational(1, 3));

  HittingInstance comp = complement_instance(6, 2);
  auto [hit, r] = instance_beta_ratio(comp, 2);
  CHECK_FALSE(hit);
  CHECK(r == Rational(2, 3));

  HittingInstance full(4, {{1, 2, 3, 4}});
  auto [hf, rf] = instance_beta_ratio(full, 1);
  CHECK(hf);
  CHECK(rf == Rational(1));
}

TEST_CASE("exhaustive beta thresholds") {
  CHECK(beta_exhaustive_small(3, 2, 4) == Rational(1, 3));
  CHECK(beta_exhaustive_small(2, 1, 4) == Rational(1, 2));
  // a single nonempty subset always has a 1-element hitting set: empty sup
  CHECK(beta_exhaustive_small(1, 1, 3) == Rational(0));
  CHECK_THROWS_AS(beta_exhaustive_small(5, 2, 8), std::invalid_argument);
}

TEST_CASE("instances above the k+1 threshold are always hittable") {
  CHECK(beta_above_threshold_hittable(2, 1, 6, Rational(1, 2)));
  CHECK(beta_above_threshold_hittable(3, 2, 6, Rational(1, 3)));
  CHECK(beta_above_threshold_hittable(4, 3, 5, Rational(1, 4)));
  // sanity: below the threshold there are non-hittable instances
  CHECK_FALSE(beta_above_threshold_hittable(3, 2, 6, Rational(1, 4)));
}

TEST_CASE("complement instances admit no k-hitting-set") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      HittingInstance inst = complement_instance(n, k);
      CHECK(min_hitting_set(inst).min_size == k + 1);
      for (const auto& a : inst.subsets) CHECK(static_cast<int>(a.size()) == n - k);
    }
  CHECK(complement_instance(3, 1).m() == 3);
  CHECK(complement_instance(4, 3).m() == 4);
  for (const auto& a : complement_instance(4, 3).subsets)
    CHECK(a.size() == 1);
  CHECK_THROWS_AS(complement_instance(3, 3), std::invalid_argument);
}

TEST_CASE("blemish feasibility") {
  // m = 2k sampling bound at k = 10
  double beta10 = 1.0 - std::pow(15.0, -0.1);
  CHECK(blemish_feasible({20, 10, 4, beta10}));

  // beta = 0 never helps for m >= 2
  CHECK_FALSE(blemish_feasible({5, 3, 0, 0.0}));

  // boundary case: 20 * 0.5 = 10 is not strictly larger than 10
  CHECK_FALSE(blemish_feasible({20, 10, 9, 0.5}));
  CHECK(blemish_margin({20, 10, 9, 0.5}) == doctest::Approx(0.0));

  CHECK_THROWS_AS(blemish_feasible({5, 3, 4, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(blemish_feasible({5, 3, 1, 1.0}), std::invalid_argument);

  // ell = k: nothing sampled, the inequality degenerates to 0 > m-k-1
  CHECK(blemish_feasible({3, 3, 3, 0.2}));        // 0 > -1
  CHECK_FALSE(blemish_feasible({5, 3, 3, 0.2}));  // 0 > 1 fails
}

TEST_CASE("blemish feasibility flips once along beta") {
  for (auto [m, k, ell] : {std::tuple{8, 4, 1}, {20, 10, 4}, {12, 5, 2}}) {
    int flips = 0;
    bool prev = blemish_feasible({m, k, ell, 0.0});
    for (int i = 1; i <= 100; ++i) {
      bool now = blemish_feasible({m, k, ell, i / 101.0});
      if (now != prev) ++flips;
      CHECK(!(prev && !now));  // once true, stays true
      prev = now;
    }
    CHECK(flips <= 1);
  }
}

TEST_CASE("blemish optimizer") {
  auto [ell42, val42] = blemish_optimize(4, 2);
  CHECK(val42 == doctest::Approx(0.5));
  CHECK((ell42 == 0 || ell42 == 1));  // both attain 0.5

  auto [ellkk, valkk] = blemish_optimize(3, 3);
  CHECK(ellkk == 2);
  CHECK(valkk == doctest::Approx(0.0));

  // never worse than the fixed-ell recipe at ell = ceil(0.37 k)
  for (int k = 3; k <= 30; ++k) {
    double target = 1.0 - std::pow(15.0, -1.0 / k);
    CHECK(blemish_optimize(2 * k, k).second <= target + 1e-12);
  }
}

TEST_CASE("blemish optimum is nonincreasing in k") {
  for (int m = 2; m <= 12; ++m) {
    double prev = 1.0;
    for (int k = 1; k <= m; ++k) {
      double val = blemish_optimize(m, k).second;
      CHECK(val <= prev + 1e-12);
      prev = val;
    }
  }
}

TEST_CASE("bounds table") {
  std::vector<BoundsRow> rows = bounds_table(4);
  auto find = [&](int d, int k) -> const BoundsRow& {
    for (const BoundsRow& r : rows)
      if (r.d == d && r.k == k) return r;
    throw std::runtime_error("row missing");
  };

  CHECK(*find(2, 1).alpha_exact == Rational(1, 3));
  CHECK(*find(2, 2).alpha_exact == Rational(2, 3));
  CHECK(*find(2, 3).alpha_exact == Rational(1));
  CHECK(*find(3, 3).alpha_exact == Rational(3, 4));
  CHECK(find(3, 2).alpha_blemish_lb == doctest::Approx(0.5));

  for (const BoundsRow& r : rows) {
    if (r.alpha_exact && r.beta_exact) CHECK(*r.alpha_exact + *r.beta_exact == Rational(1));
    CHECK(r.alpha_rado_lb > 0);
    CHECK(r.alpha_rado_lb <= 1.0);
  }
  // blemish column nonincreasing in k within fixed d
  for (int d = 1; d <= 4; ++d) {
    double prev = 1.0;
    for (int k = 1; k <= d + 1; ++k) {
      CHECK(find(d, k).beta_blemish_ub <= prev + 1e-12);
      prev = find(d, k).beta_blemish_ub;
    }
  }
}
