#include "convexdepth/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "convexdepth/depth.hpp"
#include "convexdepth/lp.hpp"

namespace cdepth {

namespace {

// Standard simplex corners (origin plus the unit axis points) shifted so the
// barycenter sits at the origin. Exact rational coordinates.
std::vector<QVec> centered_simplex(int d) {
  std::vector<QVec> corners(d + 1, QVec(d, Rational(0)));
  for (int j = 0; j < d; ++j) corners[j][j] = 1;  // corners[d] stays the origin
  QVec bary(d, Rational(0));
  for (const QVec& c : corners)
    for (int t = 0; t < d; ++t) bary[t] += c[t];
  for (int t = 0; t < d; ++t) bary[t] /= (d + 1);
  for (QVec& c : corners)
    for (int t = 0; t < d; ++t) {
      c[t] -= bary[t];
      c[t].canonicalize();
    }
  return corners;
}

}  // namespace

Family ReductionFamily::to_family(double tol) const {
  std::vector<Polytope> sets;
  sets.reserve(elements.size());
  for (const ReductionElement& e : elements) sets.push_back(e.face);
  return Family(d, std::move(sets), tol);
}

ReductionFamily hitting_to_family(const HittingInstance& inst, int d) {
  if (d < 1) throw std::invalid_argument("hitting_to_family: dimension must be positive");
  if (inst.m() != d + 1)
    throw std::invalid_argument("hitting_to_family: requires exactly d+1 subsets");

  ReductionFamily rf;
  rf.d = d;
  rf.simplex = centered_simplex(d);

  for (int x = 1; x <= inst.ground_size; ++x) {
    ReductionElement elem;
    elem.element = x;
    for (int i = 0; i < inst.m(); ++i)
      if (std::binary_search(inst.subsets[i].begin(), inst.subsets[i].end(), x))
        elem.I.push_back(i + 1);
    if (static_cast<int>(elem.I.size()) == d + 1)
      throw std::invalid_argument("hitting_to_family: element " + std::to_string(x) +
                                  " hits all subsets (a 1-element hitting set)");
    // Face spanned by the corners whose index is not in I_x; I_x empty gives
    // the whole simplex.
    std::vector<QVec> verts;
    for (int j = 1; j <= d + 1; ++j)
      if (std::find(elem.I.begin(), elem.I.end(), j) == elem.I.end())
        verts.push_back(rf.simplex[j - 1]);
    elem.face = Polytope(std::move(verts));
    rf.elements.push_back(std::move(elem));
  }
  return rf;
}

bool verify_intersection_pattern(const ReductionFamily& rf, int k, int geometric_samples,
                                 std::uint64_t seed) {
  const int n = static_cast<int>(rf.elements.size());
  if (k < 1 || k > n) throw std::invalid_argument("verify_intersection_pattern: k out of range");

  auto union_covers = [&](const std::vector<int>& subset) {
    std::vector<bool> hit(rf.d + 2, false);
    for (int x : subset)
      for (int i : rf.elements[x].I) hit[i] = true;
    for (int i = 1; i <= rf.d + 1; ++i)
      if (!hit[i]) return false;
    return true;
  };

  bool all_intersecting = true;
  std::vector<std::vector<int>> subsets;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    subsets.push_back(idx);
    if (union_covers(idx)) all_intersecting = false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }

  // Cross-validate a sample geometrically: the faces intersect exactly when
  // the I_x sets fail to cover [d+1].
  std::mt19937_64 rng(seed);
  std::shuffle(subsets.begin(), subsets.end(), rng);
  std::size_t checks = std::min<std::size_t>(subsets.size(), geometric_samples);
  for (std::size_t c = 0; c < checks; ++c) {
    std::vector<Polytope> faces;
    for (int x : subsets[c]) faces.push_back(rf.elements[x].face);
    bool geometric = polytopes_intersect(faces);
    bool combinatorial = !union_covers(subsets[c]);
    if (geometric != combinatorial)
      throw std::runtime_error("verify_intersection_pattern: combinatorial/geometric disagreement");
  }
  return all_intersecting;
}

HittingInstance shallow_family_to_instance_2d(const Family& f, int r) {
  if (f.dim != 2) throw std::invalid_argument("shallow_family_to_instance_2d: requires dim 2");
  const int n = f.size();
  if (r < 1 || r > n) throw std::invalid_argument("shallow_family_to_instance_2d: r out of range");

  auto result = simplex_witness_2d(f, r);
  if (std::holds_alternative<Vec>(result))
    throw std::invalid_argument(
        "shallow_family_to_instance_2d: family has a point of depth >= r");

  const SimplexWitness& w = std::get<SimplexWitness>(result);
  std::vector<std::vector<int>> subsets;
  for (const Halfspace& h : w.halfspaces) {
    std::vector<int> a;
    for (int j = 0; j < n; ++j)
      if (halfspace_contains(h, f.sets[j], f.tol)) a.push_back(j + 1);
    subsets.push_back(std::move(a));
  }
  return HittingInstance(n, std::move(subsets));
}

RoundtripReport equivalence_roundtrip_2d(const HittingInstance& inst, int k) {
  if (inst.m() != 3) throw std::invalid_argument("equivalence_roundtrip_2d: requires m = 3");
  if (k < 1 || k > 3) throw std::invalid_argument("equivalence_roundtrip_2d: k out of range");
  if (min_hitting_set(inst).min_size <= k)
    throw std::invalid_argument("equivalence_roundtrip_2d: instance has a k-hitting-set");

  RoundtripReport rep;
  rep.k = k;
  rep.n = inst.ground_size;

  std::size_t min_size = inst.subsets[0].size();
  for (const auto& a : inst.subsets) min_size = std::min(min_size, a.size());
  rep.min_ratio = Rational(static_cast<long>(min_size), inst.ground_size);
  rep.min_ratio.canonicalize();

  ReductionFamily rf = hitting_to_family(inst, 2);
  rep.k_intersecting = verify_intersection_pattern(rf, k);
  if (!rep.k_intersecting)
    throw std::runtime_error("equivalence_roundtrip_2d: constructed family is not k-intersecting");

  Family family = rf.to_family();
  auto [depth, point] = max_depth_2d(family);
  rep.max_depth = depth;
  rep.maximizer = point;
  rep.depth_ratio = Rational(depth, rep.n);
  rep.depth_ratio.canonicalize();
  rep.bound = Rational(1) - rep.min_ratio;
  rep.bound.canonicalize();
  rep.bound_holds = rep.depth_ratio <= rep.bound;
  return rep;
}

}  // namespace cdepth
