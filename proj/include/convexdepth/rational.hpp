#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdepth {

// Exact rational scalar. Every finite double converts exactly; "p/q" strings
// parse exactly, so geometric predicates downstream of these values are exact.
using Rational = mpq_class;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline Rational rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

// Accepts "p", "-p/q" (base 10). Throws on malformed input or zero denominator.
inline Rational rat_from_string(const std::string& s) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline double rat_to_double(const Rational& q) { return q.get_d(); }

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

// True when the double mirror of q round-trips back to q exactly.
inline bool rat_fits_double(const Rational& q) {
  double d = q.get_d();
  if (!std::isfinite(d)) return false;
  return rat_from_double(d) == q;
}

inline Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rational dot: dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cdepth
