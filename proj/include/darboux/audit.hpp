#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "darboux/error.hpp"
#include "darboux/extension.hpp"
#include "darboux/function_space.hpp"
#include "darboux/poset.hpp"

namespace darboux {

/// One failed check: which relation, at which element, and both sides.
struct Witness {
  std::string check;
  std::string element;
  std::string lhs;
  std::string rhs;
};

struct AuditReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<Witness> failures;

  bool passed() const { return failures.empty(); }

  void expect(bool ok, std::string check, std::string element, std::string lhs, std::string rhs) {
    ++checks;
    if (!ok) failures.push_back({std::move(check), std::move(element), std::move(lhs), std::move(rhs)});
  }

  void merge(const AuditReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

namespace detail {

inline ExtensionPair require_extremizable(const PartialMap& psi, const char* what) {
  try {
    return extensions(psi);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_complete_lattice) throw;
  }
  auto r = check_extremizable_general(psi);
  if (r.status != Extremizability::extremizable)
    fail(ErrorCode::hypothesis_violated, std::string(what) + " is not extremizable");
  return *r.pair;
}

inline void compare_maps(AuditReport& report, const std::string& check, const MonotoneMap& lhs,
                         const MonotoneMap& rhs, bool equality) {
  const Poset& t = lhs.target;
  for (Element x = 0; x < lhs.assignment.size(); ++x) {
    bool ok = equality ? lhs(x) == rhs(x) : t.leq(lhs(x), rhs(x));
    report.expect(ok, check, lhs.source.name(x), t.name(lhs(x)), t.name(rhs(x)));
  }
}

}  // namespace detail

/// Composition inequalities for psi1 : O1 -> O2 and psi2 : O2 -> O3:
///   lex(psi2 psi1) <= lex psi2 . lex psi1 <= uex psi2 . uex psi1 <= uex(psi2 psi1),
/// ex psi1 maps Dar(psi2 psi1) & Dar(psi1) into Dar(psi2), and the Darboux
/// extensions compose there.
inline AuditReport audit_composition(const PartialMap& psi1, const PartialMap& psi2) {
  if (!(psi1.target() == psi2.source()))
    fail(ErrorCode::invalid_argument, "partial maps are not composable");
  if (!psi2.domain().is_subset_of(psi1.image()))
    fail(ErrorCode::hypothesis_violated, "domain of the second map is not inside the image of the first");
  PartialMap comp = compose(psi2, psi1);
  ExtensionPair e1 = detail::require_extremizable(psi1, "first map");
  ExtensionPair e2 = detail::require_extremizable(psi2, "second map");
  ExtensionPair e21 = detail::require_extremizable(comp, "composite");

  AuditReport report{"composition", 0, {}};
  MonotoneMap ll = compose(e2.lower, e1.lower);
  MonotoneMap uu = compose(e2.upper, e1.upper);
  detail::compare_maps(report, "lex(comp) <= lex2.lex1", e21.lower, ll, false);
  detail::compare_maps(report, "lex2.lex1 <= uex2.uex1", ll, uu, false);
  detail::compare_maps(report, "uex2.uex1 <= uex(comp)", uu, e21.upper, false);

  Subset d1 = darboux_set(e1);
  Subset d2 = darboux_set(e2);
  Subset both = darboux_set(e21) & d1;
  const Poset& o1 = psi1.source();
  const Poset& o2 = psi1.target();
  const Poset& o3 = psi2.target();
  for (Element x = both.find_first(); x != Subset::npos; x = both.find_next(x)) {
    Element y = e1.lower(x);
    report.expect(d2.test(y), "ex1 maps into Dar(psi2)", o1.name(x), o2.name(y), "Dar(psi2)");
    if (d2.test(y))
      report.expect(e2.lower(y) == e21.lower(x), "ex2.ex1 = ex(comp)", o1.name(x),
                    o3.name(e2.lower(y)), o3.name(e21.lower(x)));
  }
  return report;
}

/// Projections commute with both extensions for psi into P1 x P2 (encoded as
/// product(p1, p2)).
inline AuditReport audit_product(const PartialMap& psi, const Poset& p1, const Poset& p2) {
  if (!(psi.target() == product(p1, p2)))
    fail(ErrorCode::invalid_argument, "target is not the product of the given factors");
  const std::size_t m = p2.size();
  Assignment a1(psi.target().size()), a2(psi.target().size());
  for (Element k = 0; k < a1.size(); ++k) {
    a1[k] = k / m;
    a2[k] = k % m;
  }
  MonotoneMap pi1{psi.target(), p1, a1};
  MonotoneMap pi2{psi.target(), p2, a2};
  ExtensionPair e = extensions(psi);
  AuditReport report{"product", 0, {}};
  int i = 1;
  for (const MonotoneMap* pi : {&pi1, &pi2}) {
    ExtensionPair ei = extensions(compose(*pi, psi));
    std::string tag = "pi" + std::to_string(i++);
    detail::compare_maps(report, tag + ".lex = lex(" + tag + ".psi)", compose(*pi, e.lower),
                         ei.lower, true);
    detail::compare_maps(report, tag + ".uex = uex(" + tag + ".psi)", compose(*pi, e.upper),
                         ei.upper, true);
  }
  return report;
}

/// Evaluation at p commutes with both extensions for psi into OP(P, P').
inline AuditReport audit_evaluation(const PartialMap& psi, const FunctionSpace& space, Element p) {
  if (!(psi.target() == space.poset()))
    fail(ErrorCode::invalid_argument, "target is not the given function space");
  MonotoneMap ev = space.evaluation(p);
  ExtensionPair e = extensions(psi);
  ExtensionPair ep = extensions(compose(ev, psi));
  AuditReport report{"evaluation", 0, {}};
  std::string tag = "ev_" + space.domain().name(p);
  detail::compare_maps(report, tag + ".lex = lex(" + tag + ".psi)", compose(ev, e.lower), ep.lower,
                       true);
  detail::compare_maps(report, tag + ".uex = uex(" + tag + ".psi)", compose(ev, e.upper), ep.upper,
                       true);
  return report;
}

inline AuditReport audit_evaluation(const PartialMap& psi, const FunctionSpace& space) {
  AuditReport report{"evaluation", 0, {}};
  for (Element p = 0; p < space.domain().size(); ++p) report.merge(audit_evaluation(psi, space, p));
  return report;
}

}  // namespace darboux
