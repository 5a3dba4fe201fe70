#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "darboux/analysis/function.hpp"
#include "darboux/error.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// A descending chain of stages S_0 ⊇ S_1 ⊇ ... seen through the range of a
/// function on each stage. available is the number of stages that exist
/// (unbounded when empty). certified_gap, when set, is a lower bound on
/// sup - inf valid on every stage.
struct StageOracle {
  std::string name;
  std::function<Range(std::size_t)> range;
  std::optional<std::size_t> available;
  std::optional<Rational> certified_gap;
};

enum class Verdict { converged, divergent_gap, undetermined };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::converged: return "Converged";
    case Verdict::divergent_gap: return "DivergentGap";
    default: return "Undetermined";
  }
}

struct LimitResult {
  Verdict verdict = Verdict::undetermined;
  /// [max L_k, min U_k] over the stages examined.
  Range enclosure;
  /// The limit for Converged (possibly infinite), the gap for DivergentGap.
  std::optional<Extended> value;
  std::size_t stages_used = 0;
};

/// Stage-wise limit. Converged once the enclosure has width at most eps; the
/// reported limit is the preferred value when it lies in the enclosure, and
/// otherwise the simplest rational in it. Converged(+inf) when every stage is
/// unbounded above and the stage infima reach 1/eps (dually for -inf).
/// DivergentGap whenever the oracle certifies a positive gap.
inline LimitResult filter_limit(const StageOracle& f, const Rational& eps, std::size_t depth,
                                std::optional<Rational> preferred = std::nullopt) {
  if (eps <= 0) fail(ErrorCode::invalid_argument, "tolerance must be positive");
  if (f.available && depth >= *f.available)
    fail(ErrorCode::stage_unavailable, "only " + std::to_string(*f.available) +
                                           " stages available, depth " + std::to_string(depth) +
                                           " requested");
  LimitResult r;
  Extended lo = Extended::neg_inf(), hi = Extended::pos_inf();
  bool all_unbounded_above = true, all_unbounded_below = true;
  Rational bound = 1 / eps;
  for (std::size_t k = 0; k <= depth; ++k) {
    Range s = f.range(k);
    lo = max_of(lo, s.inf);
    hi = min_of(hi, s.sup);
    all_unbounded_above = all_unbounded_above && s.sup.is_pos_inf();
    all_unbounded_below = all_unbounded_below && s.inf.is_neg_inf();
    r.stages_used = k + 1;
    r.enclosure = {lo, hi};
    if (f.certified_gap && *f.certified_gap > 0) continue;
    if (lo.finite() && hi.finite() && hi.value() - lo.value() <= eps) {
      r.verdict = Verdict::converged;
      if (preferred && Extended(*preferred) >= lo && Extended(*preferred) <= hi)
        r.value = Extended(*preferred);
      else
        r.value = Extended(simplest_between(lo.value(), hi.value()));
      return r;
    }
    if (all_unbounded_above && lo >= Extended(bound)) {
      r.verdict = Verdict::converged;
      r.value = Extended::pos_inf();
      return r;
    }
    if (all_unbounded_below && hi <= Extended(Rational(-bound))) {
      r.verdict = Verdict::converged;
      r.value = Extended::neg_inf();
      return r;
    }
  }
  if (f.certified_gap && *f.certified_gap > 0) {
    r.verdict = Verdict::divergent_gap;
    r.value = Extended(*f.certified_gap);
  }
  return r;
}

// Sequences f : {1, 2, ...} -> Q with tail stages S_k = {n > k}.

struct Sequence {
  std::string name;
  /// inf and sup of f over {n > k}.
  std::function<Range(std::size_t)> tail_range;
  std::optional<Rational> certified_gap;
};

inline Sequence constant_sequence(const Rational& c) {
  return {"constant(" + format_rational(c) + ")", [c](std::size_t) { return point_range(c); }, {}};
}

/// prefix[0..N-1] are f(1..N), then c forever.
inline Sequence eventually_constant_sequence(std::vector<Rational> prefix, const Rational& c) {
  return {"eventually-constant",
          [prefix = std::move(prefix), c](std::size_t k) {
            Range r = point_range(c);
            for (std::size_t n = k + 1; n <= prefix.size(); ++n) r = r.hull(point_range(prefix[n - 1]));
            return r;
          },
          {}};
}

/// f(n) = 1/n.
inline Sequence reciprocal_sequence() {
  return {"reciprocal",
          [](std::size_t k) {
            return Range{Extended(Rational(0)), Extended(Rational(1, static_cast<unsigned long>(k + 1)))};
          },
          {}};
}

/// f(n) = (-1)^n.
inline Sequence alternating_sequence() {
  return {"alternating", [](std::size_t) { return Range{Extended(-1), Extended(1)}; }, Rational(2)};
}

/// f(n) = (n+1)/n.
inline Sequence ratio_sequence() {
  return {"ratio",
          [](std::size_t k) {
            Rational sup(static_cast<unsigned long>(k + 2), static_cast<unsigned long>(k + 1));
            return Range{Extended(1), Extended(sup)};
          },
          {}};
}

/// f(n) = n.
inline Sequence identity_sequence() {
  return {"identity",
          [](std::size_t k) {
            return Range{Extended(Rational(static_cast<unsigned long>(k + 1))), Extended::pos_inf()};
          },
          {}};
}

inline LimitResult sequence_limit(const Sequence& s, const Rational& eps, std::size_t depth) {
  return filter_limit({s.name, s.tail_range, std::nullopt, s.certified_gap}, eps, depth);
}

namespace detail {

inline Rational initial_radius(const RealFunction& f, const Rational& x0, Side side) {
  if (!f.contains(x0)) fail(ErrorCode::outside_domain, "point lies outside the domain");
  Rational left = x0 - f.lo(), right = f.hi() - x0;
  Rational r = side == Side::left ? left : side == Side::right ? right : min_of(left, right);
  if (r <= 0) fail(ErrorCode::outside_domain, "point is not interior on the requested side");
  return r;
}

}  // namespace detail

/// Limit over the closed stages [x0 - d_k, x0 + d_k], d_k = d_0 / 2^k. When
/// the value f(x0) is known and lies in the final enclosure it is the
/// reported limit.
inline LimitResult continuity_check(const RealFunction& f, const Rational& x0, const Rational& eps,
                                    std::size_t depth) {
  Rational d0 = detail::initial_radius(f, x0, Side::both);
  StageOracle st{"closed neighbourhoods",
                 [f, x0, d0](std::size_t k) {
                   Rational d = d0;
                   mpq_div_2exp(d.get_mpq_t(), d0.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
                   return f.range_closed(x0 - d, x0 + d);
                 },
                 std::nullopt, f.oscillation(x0, Side::both, true)};
  return filter_limit(st, eps, depth, f.at(x0));
}

/// Limit over punctured stages: [x0 - d, x0) and/or (x0, x0 + d].
inline LimitResult punctured_limit(const RealFunction& f, const Rational& x0, const Rational& eps,
                                   std::size_t depth, Side side = Side::both) {
  Rational d0 = detail::initial_radius(f, x0, side);
  StageOracle st{"punctured neighbourhoods",
                 [f, x0, d0, side](std::size_t k) {
                   Rational d = d0;
                   mpq_div_2exp(d.get_mpq_t(), d0.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
                   std::optional<Range> r;
                   if (side != Side::right) r = f.range(x0 - d, x0, true, false);
                   if (side != Side::left) {
                     Range rr = f.range(x0, x0 + d, false, true);
                     r = r ? r->hull(rr) : rr;
                   }
                   return *r;
                 },
                 std::nullopt, f.oscillation(x0, side, false)};
  return filter_limit(st, eps, depth);
}

}  // namespace darboux
