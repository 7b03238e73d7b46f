#include "convexdepth/lp.hpp"

#include <algorithm>
#include <numeric>

namespace cdepth {

namespace {

// Dense rational tableau. Columns [0, n) are structural, [n, n+m) artificial.
// Bland's rule everywhere, so termination is guaranteed without any epsilon.
class Simplex {
 public:
  Simplex(const QMat& A, const QVec& b) : m_(A.size()), n_(A.empty() ? 0 : A[0].size()) {
    rows_.assign(m_, QVec(n_ + m_, 0));
    rhs_.assign(m_, 0);
    basis_.assign(m_, 0);
    allowed_.assign(n_ + m_, true);
    for (std::size_t i = 0; i < m_; ++i) {
      if (A[i].size() != n_) throw std::invalid_argument("lp: ragged constraint matrix");
      bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
      rhs_[i] = flip ? Rational(-b[i]) : b[i];
      rows_[i][n_ + i] = 1;
      basis_[i] = static_cast<int>(n_ + i);
    }
  }

  // Minimize the sum of artificials; true when it reaches zero.
  bool phase1() {
    cost_.assign(n_ + m_, 0);
    cost_rhs_ = 0;
    // Price the artificial objective out against the artificial basis.
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cost_[j] -= rows_[i][j];
      cost_rhs_ -= rhs_[i];
    }
    iterate();
    if (cost_rhs_ != 0) return false;  // minimum of the artificial sum is -cost_rhs_
    drive_out_artificials();
    for (std::size_t j = n_; j < n_ + m_; ++j) allowed_[j] = false;
    return true;
  }

  // Requires a feasible basis (after phase1). Minimizes c over structurals.
  LpStatus phase2(const QVec& c) {
    cost_.assign(n_ + m_, 0);
    cost_rhs_ = 0;
    for (std::size_t j = 0; j < n_ && j < c.size(); ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      int bj = basis_[i];
      if (cost_[bj] == 0) continue;
      Rational f = cost_[bj];
      for (std::size_t j = 0; j < n_ + m_; ++j) cost_[j] -= f * rows_[i][j];
      cost_rhs_ -= f * rhs_[i];
    }
    return iterate();
  }

  Rational objective() const { return -cost_rhs_; }

  QVec solution() const {
    QVec x(n_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < static_cast<int>(n_)) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  LpStatus iterate() {
    const long cap = 200000;
    for (long it = 0; it < cap; ++it) {
      int enter = -1;
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (allowed_[j] && cost_[j] < 0) {
          enter = static_cast<int>(j);
          break;
        }
      if (enter < 0) return LpStatus::Optimal;

      int leave = -1;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave]))
          leave = static_cast<int>(i), best_ratio = ratio;
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
    throw std::runtime_error("lp: iteration cap exceeded");
  }

  void pivot(int r, int jc) {
    Rational piv = rows_[r][jc];
    for (auto& v : rows_[r]) v /= piv;
    rhs_[r] /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (static_cast<int>(i) == r || rows_[i][jc] == 0) continue;
      Rational f = rows_[i][jc];
      for (std::size_t j = 0; j < n_ + m_; ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (cost_[jc] != 0) {
      Rational f = cost_[jc];
      for (std::size_t j = 0; j < n_ + m_; ++j) cost_[j] -= f * rows_[r][j];
      cost_rhs_ -= f * rhs_[r];
    }
    basis_[r] = jc;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < static_cast<int>(n_)) continue;
      int jc = -1;
      for (std::size_t j = 0; j < n_; ++j)
        if (rows_[i][j] != 0) {
          jc = static_cast<int>(j);
          break;
        }
      // All-zero structural row: redundant constraint, the artificial stays
      // basic at value zero and never re-enters the pricing.
      if (jc >= 0) pivot(static_cast<int>(i), jc);
    }
  }

  std::size_t m_, n_;
  QMat rows_;
  QVec rhs_;
  QVec cost_;
  Rational cost_rhs_ = 0;
  std::vector<int> basis_;
  std::vector<char> allowed_;
};

void check_common_dimension(const std::vector<Polytope>& ps) {
  if (ps.empty()) throw std::invalid_argument("intersection: empty polytope list");
  int d = ps[0].dim();
  for (const Polytope& p : ps)
    if (p.dim() != d) throw std::invalid_argument("intersection: dimension mismatch");
}

// Convex-combination system for a common point of all polytopes:
// variables are one weight per vertex per polytope; rows force the block-1
// combination to equal every other block's combination, plus one
// normalization row per block.
struct IntersectionSystem {
  QMat A;
  QVec b;
  std::vector<std::size_t> block_start;
  std::size_t cols = 0;
};

IntersectionSystem build_intersection_system(const std::vector<Polytope>& ps) {
  check_common_dimension(ps);
  const std::size_t d = ps[0].exact[0].size();
  const std::size_t n = ps.size();

  IntersectionSystem sys;
  sys.block_start.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sys.block_start[i] = sys.cols;
    sys.cols += ps[i].exact.size();
  }

  const std::size_t rows = d * (n - 1) + n;
  sys.A.assign(rows, QVec(sys.cols, 0));
  sys.b.assign(rows, 0);

  std::size_t r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t t = 0; t < d; ++t, ++r) {
      for (std::size_t j = 0; j < ps[0].exact.size(); ++j)
        sys.A[r][sys.block_start[0] + j] = ps[0].exact[j][t];
      for (std::size_t j = 0; j < ps[i].exact.size(); ++j)
        sys.A[r][sys.block_start[i] + j] = -ps[i].exact[j][t];
    }
  }
  for (std::size_t i = 0; i < n; ++i, ++r) {
    for (std::size_t j = 0; j < ps[i].exact.size(); ++j) sys.A[r][sys.block_start[i] + j] = 1;
    sys.b[r] = 1;
  }
  return sys;
}

QVec combination_point(const std::vector<Polytope>& ps, const IntersectionSystem& sys,
                       const QVec& lambda) {
  const std::size_t d = ps[0].exact[0].size();
  QVec y(d, 0);
  for (std::size_t j = 0; j < ps[0].exact.size(); ++j)
    for (std::size_t t = 0; t < d; ++t) y[t] += lambda[sys.block_start[0] + j] * ps[0].exact[j][t];
  return y;
}

}  // namespace

LpOutcome lp_minimize_eq(const QMat& A, const QVec& b, const QVec& c) {
  if (A.size() != b.size()) throw std::invalid_argument("lp: |A| != |b|");
  Simplex s(A, b);
  LpOutcome out;
  if (!s.phase1()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  out.status = s.phase2(c);
  out.objective = s.objective();
  out.x = s.solution();
  return out;
}

LpOutcome lp_feasible_eq(const QMat& A, const QVec& b) {
  QVec c(A.empty() ? 0 : A[0].size(), 0);
  return lp_minimize_eq(A, b, c);
}

std::optional<QVec> polytopes_common_point(const std::vector<Polytope>& ps) {
  IntersectionSystem sys = build_intersection_system(ps);
  LpOutcome out = lp_feasible_eq(sys.A, sys.b);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  return combination_point(ps, sys, out.x);
}

bool polytopes_intersect(const std::vector<Polytope>& ps) {
  return polytopes_common_point(ps).has_value();
}

bool point_in_polytope(const Polytope& p, const QVec& x) {
  if (x.size() != p.exact[0].size())
    throw std::invalid_argument("membership: dimension mismatch");
  const std::size_t d = x.size();
  const std::size_t nv = p.exact.size();
  QMat A(d + 1, QVec(nv, 0));
  QVec b(d + 1, 0);
  for (std::size_t t = 0; t < d; ++t) {
    for (std::size_t j = 0; j < nv; ++j) A[t][j] = p.exact[j][t];
    b[t] = x[t];
  }
  for (std::size_t j = 0; j < nv; ++j) A[d][j] = 1;
  b[d] = 1;
  return lp_feasible_eq(A, b).status != LpStatus::Infeasible;
}

bool point_in_polytope(const Polytope& p, const Vec& x) {
  QVec q(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) q[i] = rat_from_double(x[i]);
  return point_in_polytope(p, q);
}

bool is_k_intersecting(const Family& f, int k) {
  const int n = f.size();
  if (k < 1 || k > n) throw std::invalid_argument("is_k_intersecting: k out of range");
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<Polytope> subset;
    subset.reserve(k);
    for (int i : idx) subset.push_back(f.sets[i]);
    if (!polytopes_intersect(subset)) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

bool halfspaces_feasible(const std::vector<Halfspace>& hs) {
  if (hs.empty()) return true;
  const std::size_t d = hs[0].normal.size();
  const std::size_t m = hs.size();
  // x = xp - xm with xp, xm >= 0; one surplus variable per halfspace.
  QMat A(m, QVec(2 * d + m, 0));
  QVec b(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (hs[i].normal.size() != d)
      throw std::invalid_argument("halfspaces_feasible: dimension mismatch");
    for (std::size_t t = 0; t < d; ++t) {
      Rational u = rat_from_double(hs[i].normal[t]);
      A[i][t] = u;
      A[i][d + t] = -u;
    }
    A[i][2 * d + i] = -1;
    b[i] = rat_from_double(hs[i].offset);
  }
  return lp_feasible_eq(A, b).status != LpStatus::Infeasible;
}

std::optional<std::vector<int>> farkas_empty_subfamily(const std::vector<QVec>& normals,
                                                       const QVec& offsets) {
  if (normals.size() != offsets.size())
    throw std::invalid_argument("farkas: size mismatch");
  if (normals.empty()) return std::nullopt;
  const std::size_t d = normals[0].size();
  const std::size_t m = normals.size();
  // lambda >= 0 with sum lambda_j u_j = 0 and sum lambda_j c_j = 1 certifies
  // that the halfspaces {<u_j, x> >= c_j} have no common point.
  QMat A(d + 1, QVec(m, 0));
  QVec b(d + 1, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (normals[j].size() != d) throw std::invalid_argument("farkas: dimension mismatch");
    for (std::size_t t = 0; t < d; ++t) A[t][j] = normals[j][t];
    A[d][j] = offsets[j];
  }
  b[d] = 1;
  LpOutcome out = lp_feasible_eq(A, b);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  std::vector<int> support;
  for (std::size_t j = 0; j < m; ++j)
    if (out.x[j] > 0) support.push_back(static_cast<int>(j));
  return support;
}

std::optional<QVec> maximize_over_intersection(const std::vector<Polytope>& ps, const QVec& w) {
  IntersectionSystem sys = build_intersection_system(ps);
  const std::size_t d = ps[0].exact[0].size();
  if (w.size() != d) throw std::invalid_argument("maximize: objective dimension mismatch");
  // Objective through the block-1 combination; minimize the negation.
  QVec c(sys.cols, 0);
  for (std::size_t j = 0; j < ps[0].exact.size(); ++j) {
    Rational val = 0;
    for (std::size_t t = 0; t < d; ++t) val += w[t] * ps[0].exact[j][t];
    c[sys.block_start[0] + j] = -val;
  }
  LpOutcome out = lp_minimize_eq(sys.A, sys.b, c);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  if (out.status == LpStatus::Unbounded)
    throw std::runtime_error("lp: unbounded over a bounded intersection");
  return combination_point(ps, sys, out.x);
}

}  // namespace cdepth
