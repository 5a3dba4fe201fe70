#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "darboux/error.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Where a rational query sits relative to a real.
enum class Position { below, equal, above };

inline std::string_view to_string(Position p) {
  switch (p) {
    case Position::below: return "BELOW";
    case Position::equal: return "EQUAL";
    default: return "ABOVE";
  }
}

struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool overlaps(const Enclosure& o) const { return lo <= o.hi && o.lo <= hi; }
  bool within(const Enclosure& o) const { return o.lo <= lo && hi <= o.hi; }
};

struct RefineBudget {
  /// Bisection steps allowed per refinement, and refinement rounds allowed
  /// when a sign or position has to be decided.
  std::size_t max_depth = 256;
};

using LocateOracle = std::function<Position(const Rational&)>;

/// A real number as a Dedekind cut of the rationals: a locate oracle plus a
/// bracket, or an arithmetic combination of such. Immutable and cheap to
/// copy. The two infinities are distinguished values that cannot be refined.
class Real {
 public:
  Real() : Real(from_rational(Rational(0))) {}

  static Real from_rational(Rational q) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::exact;
    n->value = std::move(q);
    return Real(std::move(n));
  }

  static Real pos_inf() { return infinity(true); }
  static Real neg_inf() { return infinity(false); }

  /// A cut given by a locate oracle and a bracket lo <= x <= hi. The
  /// endpoints are checked against the oracle.
  static Real from_oracle(LocateOracle locate, Rational lo, Rational hi) {
    if (hi < lo) fail(ErrorCode::invalid_argument, "empty bracket");
    Position pl = locate(lo);
    Position ph = locate(hi);
    if (pl == Position::above || ph == Position::below)
      fail(ErrorCode::oracle_inconsistent, "bracket endpoints are on the wrong side of the cut");
    if (pl == Position::equal) return from_rational(lo);
    if (ph == Position::equal) return from_rational(hi);
    if (lo == hi) fail(ErrorCode::oracle_inconsistent, "degenerate bracket is not EQUAL");
    auto n = std::make_shared<Node>();
    n->kind = Kind::bisect;
    n->oracle = std::move(locate);
    n->value = std::move(lo);
    n->upper = std::move(hi);
    return Real(std::move(n));
  }

  bool is_infinite() const { return node_->kind == Kind::infinity; }
  bool is_pos_inf() const { return is_infinite() && node_->positive; }
  bool is_neg_inf() const { return is_infinite() && !node_->positive; }

  /// The value when it is known to be rational by construction.
  std::optional<Rational> exact() const {
    if (node_->kind == Kind::exact) return node_->value;
    return std::nullopt;
  }

  /// An enclosure of width at most eps. Deterministic: the enclosure for
  /// eps/2 lies inside the one for eps.
  Enclosure refine(const Rational& eps, RefineBudget budget = {}) const {
    if (eps <= 0) fail(ErrorCode::invalid_argument, "refinement tolerance must be positive");
    return refine_node(*node_, eps, budget);
  }

  /// Position of q relative to this real. Composite reals are refined until
  /// q falls outside the enclosure; a query equal to an irrational-looking
  /// composite may exhaust the budget.
  Position locate(const Rational& q, RefineBudget budget = {}) const {
    const Node& n = *node_;
    switch (n.kind) {
      case Kind::exact: return cmp_position(q, n.value);
      case Kind::infinity: return n.positive ? Position::below : Position::above;
      case Kind::bisect: return n.oracle(q);
      default: break;
    }
    Rational eps(1);
    for (std::size_t round = 0; round <= budget.max_depth; ++round, eps /= 2) {
      Enclosure e = refine_node(n, eps, budget);
      if (q < e.lo) return Position::below;
      if (q > e.hi) return Position::above;
      if (e.lo == e.hi) return Position::equal;
    }
    fail(ErrorCode::budget_exceeded, "could not locate " + format_rational(q) + " within budget");
  }

  /// -1, 0 or 1, certified by refinement; zero only when exact.
  int sign(RefineBudget budget = {}) const {
    if (is_infinite()) return node_->positive ? 1 : -1;
    if (auto v = exact()) return sgn(*v);
    Rational eps(1);
    try {
      for (std::size_t round = 0; round <= budget.max_depth; ++round, eps /= 2) {
        Enclosure e = refine_node(*node_, eps, budget);
        if (e.lo > 0) return 1;
        if (e.hi < 0) return -1;
        if (e.lo == e.hi) return 0;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::budget_exceeded) throw;
    }
    fail(ErrorCode::sign_undetermined, "sign could not be certified within budget");
  }

  friend Real add(const Real& x, const Real& y);
  friend Real negate(const Real& x);
  friend Real scale(const Real& x, const Rational& c);
  friend Real mul_positive(const Real& x, const Real& y, RefineBudget budget);

 private:
  enum class Kind { exact, infinity, bisect, sum, neg, scale, product };

  struct Node {
    Kind kind = Kind::exact;
    Rational value{0};  // exact value, bisect lower bracket, or scale factor
    Rational upper{0};  // bisect upper bracket
    bool positive = true;
    LocateOracle oracle;
    std::shared_ptr<const Node> a, b;
  };

  explicit Real(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Real infinity(bool positive) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::infinity;
    n->positive = positive;
    return Real(std::move(n));
  }

  static Real make(Kind k, std::shared_ptr<const Node> a, std::shared_ptr<const Node> b = nullptr,
                   Rational c = Rational(0)) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    n->value = std::move(c);
    return Real(std::move(n));
  }

  static Position cmp_position(const Rational& q, const Rational& v) {
    if (q < v) return Position::below;
    if (q > v) return Position::above;
    return Position::equal;
  }

  static Enclosure refine_node(const Node& n, const Rational& eps, const RefineBudget& budget) {
    switch (n.kind) {
      case Kind::exact: return {n.value, n.value};
      case Kind::infinity:
        fail(ErrorCode::not_refinable, "an infinite value has no rational enclosure");
      case Kind::bisect: {
        Rational lo = n.value, hi = n.upper;
        for (std::size_t depth = 0; hi - lo > eps; ++depth) {
          if (depth >= budget.max_depth)
            fail(ErrorCode::budget_exceeded, "bisection depth budget exhausted");
          Rational mid = (lo + hi) / 2;
          switch (n.oracle(mid)) {
            case Position::equal: return {mid, mid};
            case Position::below: lo = mid; break;
            case Position::above: hi = mid; break;
          }
        }
        return {lo, hi};
      }
      case Kind::sum: {
        if (n.a->kind == Kind::exact) {
          Enclosure e = refine_node(*n.b, eps, budget);
          return {n.a->value + e.lo, n.a->value + e.hi};
        }
        if (n.b->kind == Kind::exact) {
          Enclosure e = refine_node(*n.a, eps, budget);
          return {e.lo + n.b->value, e.hi + n.b->value};
        }
        Rational half = eps / 2;
        Enclosure ea = refine_node(*n.a, half, budget);
        Enclosure eb = refine_node(*n.b, half, budget);
        return {ea.lo + eb.lo, ea.hi + eb.hi};
      }
      case Kind::neg: {
        Enclosure e = refine_node(*n.a, eps, budget);
        return {-e.hi, -e.lo};
      }
      case Kind::scale: {
        const Rational& c = n.value;
        Enclosure e = refine_node(*n.a, eps / abs_of(c), budget);
        Rational l = c * e.lo, h = c * e.hi;
        return c > 0 ? Enclosure{l, h} : Enclosure{h, l};
      }
      case Kind::product: {
        // Children are refined on the dyadic grid 1, 1/2, 1/4, ... so that
        // smaller tolerances always continue the same refinement path.
        Rational delta(1);
        for (std::size_t k = 0; k <= budget.max_depth; ++k, delta /= 2) {
          Enclosure ea = refine_node(*n.a, delta, budget);
          Enclosure eb = refine_node(*n.b, delta, budget);
          Rational c[4] = {ea.lo * eb.lo, ea.lo * eb.hi, ea.hi * eb.lo, ea.hi * eb.hi};
          Rational lo = c[0], hi = c[0];
          for (const auto& v : c) {
            lo = min_of(lo, v);
            hi = max_of(hi, v);
          }
          if (hi - lo <= eps) return {lo, hi};
        }
        fail(ErrorCode::budget_exceeded, "product refinement budget exhausted");
      }
    }
    fail(ErrorCode::invalid_argument, "unknown real node");
  }

  std::shared_ptr<const Node> node_;
};

/// sqrt(q) for q > 0, exact when q is a rational square.
inline Real sqrt_cut(const Rational& q) {
  if (q <= 0) fail(ErrorCode::non_positive, "square root needs a positive rational");
  if (auto r = exact_sqrt(q)) return Real::from_rational(*r);
  auto [lo, hi] = sqrt_bounds(q, Integer(1));
  Rational target = q;
  return Real::from_oracle(
      [target](const Rational& r) {
        if (r < 0) return Position::below;
        Rational sq = r * r;
        if (sq < target) return Position::below;
        if (sq > target) return Position::above;
        return Position::equal;
      },
      lo, hi);
}

inline Real add(const Real& x, const Real& y) {
  if (x.is_infinite() || y.is_infinite()) {
    if (x.is_infinite() && y.is_infinite() && x.is_pos_inf() != y.is_pos_inf())
      fail(ErrorCode::undefined_operation, "(+inf) + (-inf)");
    return x.is_infinite() ? x : y;
  }
  auto ex = x.exact(), ey = y.exact();
  if (ex && ey) return Real::from_rational(*ex + *ey);
  if (ex && *ex == 0) return y;
  if (ey && *ey == 0) return x;
  return Real::make(Real::Kind::sum, x.node_, y.node_);
}

inline Real negate(const Real& x) {
  if (x.is_infinite()) return x.is_pos_inf() ? Real::neg_inf() : Real::pos_inf();
  if (auto v = x.exact()) return Real::from_rational(-*v);
  if (x.node_->kind == Real::Kind::neg) return Real(x.node_->a);
  return Real::make(Real::Kind::neg, x.node_);
}

inline Real subtract(const Real& x, const Real& y) { return add(x, negate(y)); }

/// c * x for a rational c.
inline Real scale(const Real& x, const Rational& c) {
  if (c == 0) return Real::from_rational(Rational(0));
  if (x.is_infinite()) return c > 0 ? x : negate(x);
  if (auto v = x.exact()) return Real::from_rational(*v * c);
  if (c == 1) return x;
  return Real::make(Real::Kind::scale, x.node_, nullptr, c);
}

/// Product of two positive reals. Positivity is certified first; a
/// non-positive operand raises NonPositive, an undecidable one
/// SignUndetermined.
inline Real mul_positive(const Real& x, const Real& y, RefineBudget budget = {}) {
  for (const Real* r : {&x, &y}) {
    if (r->is_infinite()) fail(ErrorCode::undefined_operation, "product with an infinite value");
    if (r->sign(budget) <= 0) fail(ErrorCode::non_positive, "operand is not positive");
  }
  if (auto v = x.exact()) return scale(y, *v);
  if (auto v = y.exact()) return scale(x, *v);
  return Real::make(Real::Kind::product, x.node_, y.node_);
}

/// Product of arbitrary reals by splitting on signs. An exact zero operand
/// gives an exact zero without looking at the other operand.
inline Real mul_signed(const Real& x, const Real& y, RefineBudget budget = {}) {
  if (auto v = x.exact(); v && *v == 0) return Real::from_rational(Rational(0));
  if (auto v = y.exact(); v && *v == 0) return Real::from_rational(Rational(0));
  if (x.is_infinite() || y.is_infinite())
    fail(ErrorCode::undefined_operation, "product with an infinite value");
  int sx = x.sign(budget), sy = y.sign(budget);
  if (sx == 0 || sy == 0) return Real::from_rational(Rational(0));
  Real ax = sx > 0 ? x : negate(x);
  Real ay = sy > 0 ? y : negate(y);
  Real p = mul_positive(ax, ay, budget);
  return sx * sy > 0 ? p : negate(p);
}

inline Real operator+(const Real& x, const Real& y) { return add(x, y); }
inline Real operator-(const Real& x, const Real& y) { return subtract(x, y); }
inline Real operator-(const Real& x) { return negate(x); }
inline Real operator*(const Real& x, const Real& y) { return mul_signed(x, y); }

}  // namespace darboux
