#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "darboux/analysis/function.hpp"
#include "darboux/analysis/integral.hpp"
#include "darboux/audit.hpp"
#include "darboux/error.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// A pair of lower and upper extensions evaluated on functions, with the
/// hypotheses under which the linearity relations are expected.
struct Functional {
  std::string name;
  std::function<Extended(const RealFunction&)> lex;
  std::function<Extended(const RealFunction&)> uex;
  std::vector<std::string> hypotheses;
};

/// Lower and upper Darboux sums over a fixed partition.
inline Functional darboux_functional(const Partition& p) {
  return {"darboux-sums",
          [p](const RealFunction& f) { return darboux_sums(f, p).lower; },
          [p](const RealFunction& f) { return darboux_sums(f, p).upper; },
          {"encompassing domain: bounded functions", "linear subspace: bounded functions",
           "linear: step functions subordinate to the partition"}};
}

/// Infimum and supremum over the closed stage [lo, hi].
inline Functional stage_functional(const Rational& lo, const Rational& hi) {
  return {"stage[" + format_rational(lo) + "," + format_rational(hi) + "]",
          [lo, hi](const RealFunction& f) { return f.range_closed(lo, hi).inf; },
          [lo, hi](const RealFunction& f) { return f.range_closed(lo, hi).sup; },
          {"encompassing domain: bounded functions", "linear subspace: bounded functions",
           "linear: functions constant on the stage"}};
}

/// Checks, for nonnegative a1, a2:
///   uex(a1 f1 + a2 f2) <= a1 uex(f1) + a2 uex(f2),
///   a1 lex(f1) + a2 lex(f2) <= lex(a1 f1 + a2 f2),
///   -lex(f) = uex(-f) for f1, f2 and the combination,
/// and additivity of the common value when f1 and f2 are Darboux members.
inline AuditReport linearity_audit(const Functional& F, const RealFunction& f1, const RealFunction& f2,
                                   const Rational& a1, const Rational& a2) {
  if (a1 < 0 || a2 < 0) fail(ErrorCode::hypothesis_violated, "scalars must be nonnegative");
  AuditReport report{"linearity:" + F.name, 0, {}};
  RealFunction g = combine(a1, f1, a2, f2);
  Extended u1 = F.uex(f1), u2 = F.uex(f2), ug = F.uex(g);
  Extended l1 = F.lex(f1), l2 = F.lex(f2), lg = F.lex(g);
  Extended rhs_u = u1.scaled(a1) + u2.scaled(a2);
  Extended lhs_l = l1.scaled(a1) + l2.scaled(a2);
  std::string tag = g.name();
  report.expect(ug <= rhs_u, "uex subadditive", tag, ug.str(), rhs_u.str());
  report.expect(lhs_l <= lg, "lex superadditive", tag, lhs_l.str(), lg.str());
  for (const RealFunction* f : std::initializer_list<const RealFunction*>{&f1, &f2, &g}) {
    Extended lhs = -F.lex(*f);
    Extended rhs = F.uex(negated(*f));
    report.expect(lhs == rhs, "-lex(f) = uex(-f)", f->name(), lhs.str(), rhs.str());
  }
  if (l1 == u1 && l2 == u2) {
    report.expect(lg == ug, "combination is a Darboux member", tag, lg.str(), ug.str());
    report.expect(ug == rhs_u, "ex additive", tag, ug.str(), rhs_u.str());
  }
  return report;
}

}  // namespace darboux
