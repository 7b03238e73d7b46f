#include "convexdepth/hitting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace cdepth {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> to_masks(const HittingInstance& inst) {
  std::vector<Mask> masks;
  masks.reserve(inst.subsets.size());
  for (const auto& a : inst.subsets) {
    Mask m = 0;
    for (int e : a) m |= Mask{1} << (e - 1);
    masks.push_back(m);
  }
  return masks;
}

std::vector<int> mask_to_elements(Mask m) {
  std::vector<int> out;
  for (int e = 0; m; ++e, m >>= 1)
    if (m & 1) out.push_back(e + 1);
  return out;
}

// Count of pairwise-disjoint unhit sets: each needs its own new element.
int disjoint_lower_bound(const std::vector<Mask>& unhit) {
  Mask used = 0;
  int lb = 0;
  for (Mask m : unhit)
    if ((m & used) == 0) {
      ++lb;
      used |= m;
    }
  return lb;
}

struct Searcher {
  const std::vector<Mask>& sets;
  int best_size;
  Mask best_witness = 0;

  void dfs(Mask chosen, int count) {
    if (count >= best_size) return;
    std::vector<Mask> unhit;
    for (Mask m : sets)
      if ((m & chosen) == 0) unhit.push_back(m);
    if (unhit.empty()) {
      best_size = count;
      best_witness = chosen;
      return;
    }
    if (count + disjoint_lower_bound(unhit) >= best_size) return;
    Mask branch = *std::min_element(unhit.begin(), unhit.end(), [](Mask a, Mask b) {
      return std::popcount(a) < std::popcount(b);
    });
    for (Mask m = branch; m;) {
      Mask bit = m & (~m + 1);
      dfs(chosen | bit, count + 1);
      m ^= bit;
    }
  }
};

bool has_hitting_set_le(const std::vector<Mask>& sets, Mask chosen, int budget) {
  Mask first_unhit = 0;
  for (Mask m : sets)
    if ((m & chosen) == 0) {
      first_unhit = m;
      break;
    }
  if (first_unhit == 0) return true;
  if (budget == 0) return false;
  for (Mask m = first_unhit; m;) {
    Mask bit = m & (~m + 1);
    if (has_hitting_set_le(sets, chosen | bit, budget - 1)) return true;
    m ^= bit;
  }
  return false;
}

}  // namespace

HittingInstance::HittingInstance(int n, std::vector<std::vector<int>> ss)
    : ground_size(n), subsets(std::move(ss)) {
  if (ground_size < 1) throw std::invalid_argument("hitting: ground set must be nonempty");
  if (ground_size > 63) throw std::invalid_argument("hitting: ground set larger than 63");
  if (subsets.empty()) throw std::invalid_argument("hitting: needs at least one subset");
  for (auto& a : subsets) {
    if (a.empty()) throw std::invalid_argument("hitting: empty subset");
    for (int e : a)
      if (e < 1 || e > ground_size)
        throw std::invalid_argument("hitting: element " + std::to_string(e) + " out of range");
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

HittingResult min_hitting_set(const HittingInstance& inst) {
  std::vector<Mask> masks = to_masks(inst);

  // Greedy start: repeatedly take the most covering element.
  Mask greedy = 0;
  {
    std::vector<Mask> left = masks;
    while (!left.empty()) {
      int best_elem = 0, best_cover = -1;
      for (int e = 0; e < inst.ground_size; ++e) {
        Mask bit = Mask{1} << e;
        int cover = 0;
        for (Mask m : left)
          if (m & bit) ++cover;
        if (cover > best_cover) {
          best_cover = cover;
          best_elem = e;
        }
      }
      greedy |= Mask{1} << best_elem;
      std::erase_if(left, [&](Mask m) { return (m & greedy) != 0; });
    }
  }

  Searcher s{masks, std::popcount(greedy), greedy};
  s.dfs(0, 0);
  return {s.best_size, mask_to_elements(s.best_witness)};
}

HittingResult min_hitting_set_exhaustive(const HittingInstance& inst) {
  if (inst.ground_size > 20)
    throw std::invalid_argument("min_hitting_set_exhaustive: ground set larger than 20");
  std::vector<Mask> masks = to_masks(inst);
  int best_size = inst.ground_size + 1;
  Mask best = 0;
  const Mask full = (Mask{1} << inst.ground_size);
  for (Mask y = 0; y < full; ++y) {
    if (std::popcount(y) >= best_size) continue;
    bool hits_all = true;
    for (Mask m : masks)
      if ((m & y) == 0) {
        hits_all = false;
        break;
      }
    if (hits_all) {
      best_size = std::popcount(y);
      best = y;
    }
  }
  return {best_size, mask_to_elements(best)};
}

std::pair<bool, Rational> instance_beta_ratio(const HittingInstance& inst, int k) {
  if (k < 1 || k > inst.m()) throw std::invalid_argument("instance_beta_ratio: k out of range");
  std::size_t min_size = inst.subsets[0].size();
  for (const auto& a : inst.subsets) min_size = std::min(min_size, a.size());
  Rational ratio(static_cast<long>(min_size), inst.ground_size);
  ratio.canonicalize();
  bool hittable = min_hitting_set(inst).min_size <= k;
  return {hittable, ratio};
}

namespace {

// Enumerates multisets of m nonempty subsets over [N]; sup of min|A_i|/N over
// instances with no k-hitting-set. `check_above` also verifies that every
// instance strictly above `threshold` is hittable.
struct BetaScan {
  int k = 0;
  int N = 0;
  Rational sup = 0;
  bool check_above = false;
  Rational threshold = 0;
  bool above_all_hittable = true;

  void scan(int m) {
    std::vector<Mask> masks(m);
    rec(masks, 0, 1);
  }

  void rec(std::vector<Mask>& masks, int pos, Mask from) {
    if (pos == static_cast<int>(masks.size())) {
      visit(masks);
      return;
    }
    const Mask full = Mask{1} << N;
    for (Mask m = from; m < full; ++m) {
      masks[pos] = m;
      rec(masks, pos + 1, m);  // nondecreasing: multisets only
    }
  }

  void visit(const std::vector<Mask>& masks) {
    int min_size = N + 1;
    for (Mask m : masks) min_size = std::min(min_size, std::popcount(m));
    bool hittable = has_hitting_set_le(masks, 0, k);
    if (!hittable) {
      Rational ratio(min_size, N);
      ratio.canonicalize();
      if (ratio > sup) sup = ratio;
      if (check_above && ratio > threshold) above_all_hittable = false;
    }
  }
};

void beta_guard(int m, int k, int maxN) {
  if (m < 1 || k < 1 || k > m) throw std::invalid_argument("beta: bad m/k");
  if (maxN < 1) throw std::invalid_argument("beta: maxN must be positive");
  // (2^maxN)^m enumerable: keep within ~1e8 tuples.
  if (maxN * m > 26) throw std::invalid_argument("beta: search space too large");
}

}  // namespace

Rational beta_exhaustive_small(int m, int k, int maxN) {
  beta_guard(m, k, maxN);
  Rational sup = 0;
  for (int N = 1; N <= maxN; ++N) {
    BetaScan scan{k, N};
    scan.scan(m);
    if (scan.sup > sup) sup = scan.sup;
  }
  return sup;
}

bool beta_above_threshold_hittable(int m, int k, int maxN, const Rational& threshold) {
  beta_guard(m, k, maxN);
  for (int N = 1; N <= maxN; ++N) {
    BetaScan scan{k, N};
    scan.check_above = true;
    scan.threshold = threshold;
    scan.scan(m);
    if (!scan.above_all_hittable) return false;
  }
  return true;
}

HittingInstance complement_instance(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("complement_instance: requires 1 <= k < n");
  if (n > 63) throw std::invalid_argument("complement_instance: n larger than 63");
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  for (;;) {
    std::vector<int> comp;
    comp.reserve(n - k);
    std::size_t pi = 0;
    for (int e = 1; e <= n; ++e) {
      if (pi < pick.size() && pick[pi] == e) {
        ++pi;
        continue;
      }
      comp.push_back(e);
    }
    subsets.push_back(std::move(comp));
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return HittingInstance(n, std::move(subsets));
}

double blemish_margin(const BlemishParams& p) {
  if (p.m < 1 || p.k < 1 || p.k > p.m || p.ell < 0 || p.ell > p.k)
    throw std::invalid_argument("blemish: invalid parameters");
  if (!(p.beta >= 0.0 && p.beta < 1.0))
    throw std::invalid_argument("blemish: beta must be in [0,1)");
  // (1-beta)^0 = 1 covers ell = k: the inequality degenerates to 0 > m-ell-1.
  double lhs = p.m * (1.0 - std::pow(1.0 - p.beta, p.k - p.ell));
  double rhs = static_cast<double>(p.m - p.ell - 1);
  return lhs - rhs;
}

bool blemish_feasible(const BlemishParams& p) { return blemish_margin(p) > 0.0; }

std::pair<int, double> blemish_optimize(int m, int k) {
  if (m < 1 || k < 1 || k > m) throw std::invalid_argument("blemish_optimize: bad m/k");
  int best_ell = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int ell = 0; ell < k; ++ell) {
    double val;
    if (ell + 1 >= m) {
      val = 0.0;  // the inequality holds for every beta
    } else {
      val = 1.0 - std::pow(static_cast<double>(ell + 1) / m, 1.0 / (k - ell));
      val = std::max(val, 0.0);
    }
    if (val < best_val) {
      best_val = val;
      best_ell = ell;
    }
  }
  return {best_ell, best_val};
}

std::vector<BoundsRow> bounds_table(int dmax) {
  if (dmax < 1) throw std::invalid_argument("bounds_table: dmax must be positive");
  std::vector<BoundsRow> rows;
  for (int d = 1; d <= dmax; ++d) {
    for (int k = 1; k <= d + 1; ++k) {
      BoundsRow row;
      row.d = d;
      row.k = k;
      if (k == 1) row.alpha_exact = Rational(1, d + 1);
      if (k == d) row.alpha_exact = Rational(d, d + 1);
      if (k == d + 1) row.alpha_exact = Rational(1);
      if (row.alpha_exact) {
        row.beta_exact = Rational(1) - *row.alpha_exact;
        row.beta_exact->canonicalize();
        row.alpha_exact->canonicalize();
      }
      row.alpha_rado_lb = std::pow(static_cast<double>(d + 1), -1.0 / k);
      row.rado_correction = "*(1-(k-1)/n)";
      row.beta_blemish_ub = blemish_optimize(d + 1, k).second;
      row.alpha_blemish_lb = 1.0 - row.beta_blemish_ub;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace cdepth
