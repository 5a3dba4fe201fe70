#pragma once

#include <string>
#include <vector>

#include "darboux/audit.hpp"
#include "darboux/rational.hpp"
#include "darboux/real.hpp"

namespace darboux {

inline std::string enclosure_str(const Enclosure& e) {
  return "[" + format_rational(e.lo) + ", " + format_rational(e.hi) + "]";
}

/// Translation action of the rationals on sample reals: each translate is an
/// order embedding on the samples, translates compose additively, and the
/// translate of zero by r is r.
inline AuditReport audit_translation_group(const std::vector<Rational>& shifts,
                                           const std::vector<Real>& samples, const Rational& eps,
                                           RefineBudget budget = {}) {
  AuditReport report{"translation", 0, {}};
  std::vector<Enclosure> base;
  for (const Real& x : samples) base.push_back(x.refine(eps, budget));
  for (const Rational& r : shifts) {
    Real br = Real::from_rational(r);
    std::string tag = "beta(" + format_rational(r) + ")";
    for (std::size_t i = 0; i < samples.size(); ++i)
      for (std::size_t j = 0; j < samples.size(); ++j) {
        if (!(base[i].hi < base[j].lo)) continue;
        Enclosure a = add(br, samples[i]).refine(eps, budget);
        Enclosure b = add(br, samples[j]).refine(eps, budget);
        report.expect(a.hi < b.lo, tag + " preserves order", std::to_string(i) + "<" + std::to_string(j),
                      enclosure_str(a), enclosure_str(b));
      }
    for (const Rational& s : shifts) {
      Real bs = Real::from_rational(s);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        Enclosure lhs = add(br, add(bs, samples[i])).refine(eps, budget);
        Enclosure rhs = add(Real::from_rational(r + s), samples[i]).refine(eps, budget);
        bool ok = lhs.overlaps(rhs) && lhs.width() <= eps && rhs.width() <= eps;
        if (samples[i].exact()) ok = ok && lhs.lo == rhs.lo && lhs.hi == rhs.hi;
        report.expect(ok, tag + ".beta(" + format_rational(s) + ") = beta(r+s)", std::to_string(i),
                      enclosure_str(lhs), enclosure_str(rhs));
      }
    }
    auto at_zero = add(br, Real::from_rational(Rational(0))).exact();
    report.expect(at_zero && *at_zero == r, "ev_0." + tag + " = r", format_rational(r),
                  at_zero ? format_rational(*at_zero) : "inexact", format_rational(r));
  }
  return report;
}

namespace detail {

inline void expect_same_real(AuditReport& report, const std::string& check, const Real& lhs,
                             const Real& rhs, const Rational& eps, RefineBudget budget) {
  auto el = lhs.exact(), er = rhs.exact();
  if (el && er) {
    report.expect(*el == *er, check, "exact", format_rational(*el), format_rational(*er));
    return;
  }
  Enclosure prev_l, prev_r;
  Rational e = eps;
  for (int round = 0; round < 2; ++round, e /= 2) {
    Enclosure a = lhs.refine(e, budget);
    Enclosure b = rhs.refine(e, budget);
    bool ok = a.overlaps(b) && a.width() <= e && b.width() <= e;
    if (round == 1) ok = ok && a.within(prev_l) && b.within(prev_r);
    report.expect(ok, check, "eps=" + format_rational(e), enclosure_str(a), enclosure_str(b));
    prev_l = a;
    prev_r = b;
  }
}

}  // namespace detail

/// Commutativity and associativity of sum and product, and distributivity,
/// on three positive reals. Inexact sides must have overlapping enclosures
/// of width at most eps, and again at eps/2 nested inside the first.
inline AuditReport audit_semifield(const Real& x, const Real& y, const Real& z, const Rational& eps,
                                   RefineBudget budget = {}) {
  AuditReport report{"semifield", 0, {}};
  auto mul = [&](const Real& a, const Real& b) { return mul_positive(a, b, budget); };
  auto same = [&](const std::string& check, const Real& a, const Real& b) {
    detail::expect_same_real(report, check, a, b, eps, budget);
  };
  same("x+y = y+x", add(x, y), add(y, x));
  same("(x+y)+z = x+(y+z)", add(add(x, y), z), add(x, add(y, z)));
  same("xy = yx", mul(x, y), mul(y, x));
  same("(xy)z = x(yz)", mul(mul(x, y), z), mul(x, mul(y, z)));
  same("x(y+z) = xy+xz", mul(x, add(y, z)), add(mul(x, y), mul(x, z)));
  same("x*1 = x", mul(x, Real::from_rational(Rational(1))), x);
  same("x+0 = x", add(x, Real::from_rational(Rational(0))), x);
  return report;
}

}  // namespace darboux
