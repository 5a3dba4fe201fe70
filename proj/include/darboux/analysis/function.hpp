#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "darboux/error.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Exact infimum and supremum of a function over some set.
struct Range {
  Extended inf;
  Extended sup;

  Extended width() const { return sup - inf; }

  Range hull(const Range& o) const { return {min_of(inf, o.inf), max_of(sup, o.sup)}; }

  friend bool operator==(const Range&, const Range&) = default;
};

inline Range point_range(const Rational& v) { return {Extended(v), Extended(v)}; }

/// Which cluster values near a point count: from the left, from the right,
/// both, and whether the point itself is included.
enum class Side { left, right, both };

/// A real-valued function on a rational interval [a, b], known through the
/// exact range it takes on subintervals.
///
/// Symbolic functions are piecewise affine with an optional "rational bump":
/// on a piece the value is slope*x + intercept, plus bump at rational x. The
/// bump makes both values dense in every subinterval, which is how the
/// Dirichlet function is expressed. At a breakpoint the function takes the
/// value of the piece on its right (the last piece at b) unless overridden.
///
/// Opaque functions supply a range oracle directly; its bounds must hold on
/// the closed interval and shrink with the interval.
class RealFunction {
 public:
  struct Piece {
    Rational lo, hi;
    Rational slope{0}, intercept{0}, bump{0};

    Rational affine(const Rational& x) const { return slope * x + intercept; }
  };

  using RangeOracle = std::function<Range(const Rational&, const Rational&)>;
  using PointOracle = std::function<std::optional<Rational>(const Rational&)>;
  /// Range with the endpoint choices of range(lo, hi, include_lo, include_hi).
  using EndpointRangeOracle = std::function<Range(const Rational&, const Rational&, bool, bool)>;

  static RealFunction piecewise(std::string name, std::vector<Piece> pieces,
                                std::map<Rational, Rational> overrides = {}) {
    if (pieces.empty()) fail(ErrorCode::invalid_argument, "piecewise function needs a piece");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (!(pieces[i].lo < pieces[i].hi))
        fail(ErrorCode::invalid_argument, "piece endpoints must increase");
      if (i && pieces[i].lo != pieces[i - 1].hi)
        fail(ErrorCode::invalid_argument, "pieces must be contiguous");
    }
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->a = pieces.front().lo;
    d->b = pieces.back().hi;
    for (const auto& [x, v] : overrides)
      if (x < d->a || x > d->b) fail(ErrorCode::outside_domain, "point value outside the domain");
    d->pieces = std::move(pieces);
    d->overrides = std::move(overrides);
    return RealFunction(std::move(d));
  }

  static RealFunction opaque(std::string name, Rational a, Rational b, RangeOracle range,
                             PointOracle point, std::vector<Rational> hints = {}) {
    return make_opaque(std::move(name), std::move(a), std::move(b), std::move(range), nullptr,
                       std::move(point), std::move(hints));
  }

  /// As opaque, with a range oracle that honours open endpoints.
  static RealFunction opaque_endpoints(std::string name, Rational a, Rational b, EndpointRangeOracle range,
                                       PointOracle point, std::vector<Rational> hints = {}) {
    RangeOracle closed = [range](const Rational& lo, const Rational& hi) { return range(lo, hi, true, true); };
    return make_opaque(std::move(name), std::move(a), std::move(b), std::move(closed), std::move(range),
                       std::move(point), std::move(hints));
  }

  const std::string& name() const { return d_->name; }
  const Rational& lo() const { return d_->a; }
  const Rational& hi() const { return d_->b; }
  bool symbolic() const { return !d_->pieces.empty(); }
  const std::vector<Piece>& pieces() const { return d_->pieces; }
  const std::map<Rational, Rational>& overrides() const { return d_->overrides; }

  bool contains(const Rational& x) const { return d_->a <= x && x <= d_->b; }

  /// Value at a point, when known exactly.
  std::optional<Rational> at(const Rational& x) const {
    check_inside(x, x);
    if (!symbolic()) return d_->point ? d_->point(x) : std::nullopt;
    if (auto it = d_->overrides.find(x); it != d_->overrides.end()) return it->second;
    const Piece& p = piece_at(x);
    return p.affine(x) + p.bump;
  }

  /// Range over the interval from lo to hi with the chosen endpoints.
  Range range(const Rational& lo, const Rational& hi, bool include_lo, bool include_hi) const {
    check_inside(lo, hi);
    if (!symbolic()) {
      if (d_->endpoint_range) return d_->endpoint_range(lo, hi, include_lo, include_hi);
      return d_->range(lo, hi);
    }
    std::optional<Range> out;
    auto merge = [&](const Range& r) { out = out ? out->hull(r) : r; };
    if (lo < hi) {
      for (const Piece& p : d_->pieces) {
        if (!(p.lo < hi && lo < p.hi)) continue;
        Rational l = max_of(lo, p.lo), h = min_of(hi, p.hi);
        Rational v1 = p.affine(l), v2 = p.affine(h);
        Rational zero(0);
        merge({Extended(Rational(min_of(v1, v2) + min_of(zero, p.bump))),
               Extended(Rational(max_of(v1, v2) + max_of(zero, p.bump)))});
      }
      for (std::size_t i = 1; i < d_->pieces.size(); ++i) {
        const Rational& x = d_->pieces[i].lo;
        if (lo < x && x < hi) merge(point_range(*at(x)));
      }
      for (const auto& [x, v] : d_->overrides)
        if (lo < x && x < hi) merge(point_range(v));
    }
    if (include_lo || (lo == hi && include_hi)) merge(point_range(*at(lo)));
    if (include_hi) merge(point_range(*at(hi)));
    if (!out) fail(ErrorCode::invalid_argument, "range over an empty set");
    return *out;
  }

  Range range_open(const Rational& lo, const Rational& hi) const { return range(lo, hi, false, false); }
  Range range_closed(const Rational& lo, const Rational& hi) const { return range(lo, hi, true, true); }

  /// Points where the function may jump; partitions start from these.
  std::vector<Rational> breakpoints() const {
    std::vector<Rational> out;
    if (symbolic()) {
      for (std::size_t i = 1; i < d_->pieces.size(); ++i) out.push_back(d_->pieces[i].lo);
      for (const auto& [x, v] : d_->overrides)
        if (d_->a < x && x < d_->b) out.push_back(x);
    } else {
      for (const auto& x : d_->hints)
        if (d_->a < x && x < d_->b) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// A lower bound on U_P - L_P valid for every partition P: each piece
  /// contributes |bump| * length. Zero when nothing is certified.
  Rational integration_gap() const {
    Rational g(0);
    for (const Piece& p : d_->pieces) g += abs_of(p.bump) * (p.hi - p.lo);
    return g;
  }

  /// Spread of the cluster values at x0 on the given side(s), optionally
  /// with f(x0): every neighbourhood of that shape has at least this much
  /// oscillation. Only symbolic functions certify anything.
  std::optional<Rational> oscillation(const Rational& x0, Side side, bool include_point) const {
    check_inside(x0, x0);
    if (!symbolic()) return std::nullopt;
    std::vector<Rational> values;
    auto cluster = [&](const Piece& p) {
      values.push_back(p.affine(x0));
      values.push_back(p.affine(x0) + p.bump);
    };
    if (side != Side::right && x0 > d_->a)
      for (const Piece& p : d_->pieces)
        if (p.lo < x0 && x0 <= p.hi) cluster(p);
    if (side != Side::left && x0 < d_->b)
      for (const Piece& p : d_->pieces)
        if (p.lo <= x0 && x0 < p.hi) cluster(p);
    if (include_point) values.push_back(*at(x0));
    if (values.empty()) return std::nullopt;
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    return Rational(*mx - *mn);
  }

 private:
  struct Data {
    std::string name;
    Rational a, b;
    std::vector<Piece> pieces;
    std::map<Rational, Rational> overrides;
    RangeOracle range;
    EndpointRangeOracle endpoint_range;
    PointOracle point;
    std::vector<Rational> hints;
  };

  explicit RealFunction(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static RealFunction make_opaque(std::string name, Rational a, Rational b, RangeOracle range,
                                  EndpointRangeOracle endpoint_range, PointOracle point,
                                  std::vector<Rational> hints) {
    if (!(a < b)) fail(ErrorCode::invalid_argument, "domain must be a nondegenerate interval");
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->a = std::move(a);
    d->b = std::move(b);
    d->range = std::move(range);
    d->endpoint_range = std::move(endpoint_range);
    d->point = std::move(point);
    d->hints = std::move(hints);
    return RealFunction(std::move(d));
  }

  void check_inside(const Rational& lo, const Rational& hi) const {
    if (hi < lo) fail(ErrorCode::invalid_argument, "interval endpoints out of order");
    if (lo < d_->a || hi > d_->b)
      fail(ErrorCode::outside_domain, "interval [" + format_rational(lo) + ", " +
                                          format_rational(hi) + "] is outside the domain of " +
                                          d_->name);
  }

  const Piece& piece_at(const Rational& x) const {
    const auto& ps = d_->pieces;
    auto it = std::upper_bound(ps.begin(), ps.end(), x,
                               [](const Rational& v, const Piece& p) { return v < p.hi; });
    if (it == ps.end()) return ps.back();
    return *it;
  }

  std::shared_ptr<const Data> d_;
};

/// c1 * f1 + c2 * f2 on a common domain. Symbolic inputs stay symbolic and
/// exact; otherwise the range is the interval combination of the two ranges.
inline RealFunction combine(const Rational& c1, const RealFunction& f1, const Rational& c2,
                            const RealFunction& f2) {
  if (f1.lo() != f2.lo() || f1.hi() != f2.hi())
    fail(ErrorCode::invalid_argument, "functions have different domains");
  std::string name = format_rational(c1) + "*" + f1.name() + " + " + format_rational(c2) + "*" + f2.name();
  if (f1.symbolic() && f2.symbolic()) {
    std::vector<Rational> cuts{f1.lo(), f1.hi()};
    for (const auto* f : {&f1, &f2})
      for (const auto& p : f->pieces()) cuts.push_back(p.lo);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto piece_over = [](const RealFunction& f, const Rational& mid) {
      for (const auto& p : f.pieces())
        if (p.lo < mid && mid < p.hi) return p;
      return f.pieces().back();
    };
    std::vector<RealFunction::Piece> pieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      Rational mid = (cuts[i] + cuts[i + 1]) / 2;
      auto p1 = piece_over(f1, mid), p2 = piece_over(f2, mid);
      pieces.push_back({cuts[i], cuts[i + 1], c1 * p1.slope + c2 * p2.slope,
                        c1 * p1.intercept + c2 * p2.intercept, c1 * p1.bump + c2 * p2.bump});
    }
    std::map<Rational, Rational> overrides;
    for (const auto* f : {&f1, &f2})
      for (const auto& [x, v] : f->overrides()) overrides[x] = c1 * *f1.at(x) + c2 * *f2.at(x);
    return RealFunction::piecewise(std::move(name), std::move(pieces), std::move(overrides));
  }
  auto range = [=](const Rational& lo, const Rational& hi, bool include_lo, bool include_hi) {
    Range r1 = f1.range(lo, hi, include_lo, include_hi), r2 = f2.range(lo, hi, include_lo, include_hi);
    auto part = [](const Rational& c, const Range& r) {
      return c >= 0 ? Range{r.inf.scaled(c), r.sup.scaled(c)} : Range{r.sup.scaled(c), r.inf.scaled(c)};
    };
    Range a = part(c1, r1), b = part(c2, r2);
    return Range{a.inf + b.inf, a.sup + b.sup};
  };
  auto point = [=](const Rational& x) -> std::optional<Rational> {
    auto v1 = c1 == 0 ? std::optional<Rational>(0) : f1.at(x);
    auto v2 = c2 == 0 ? std::optional<Rational>(0) : f2.at(x);
    if (!v1 || !v2) return std::nullopt;
    return Rational(c1 * *v1 + c2 * *v2);
  };
  std::vector<Rational> hints = f1.breakpoints();
  for (const auto& x : f2.breakpoints()) hints.push_back(x);
  return RealFunction::opaque_endpoints(std::move(name), f1.lo(), f1.hi(), range, point, std::move(hints));
}

inline RealFunction negated(const RealFunction& f) {
  return combine(Rational(-1), f, Rational(0), f);
}

// Built-in family.

inline RealFunction affine_function(const Rational& p, const Rational& q, const Rational& a,
                                    const Rational& b) {
  return RealFunction::piecewise("affine(" + format_rational(p) + "," + format_rational(q) + ")",
                                 {{a, b, p, q, Rational(0)}});
}

inline RealFunction identity_function(const Rational& a, const Rational& b) {
  return RealFunction::piecewise("identity", {{a, b, Rational(1), Rational(0), Rational(0)}});
}

inline RealFunction constant_function(const Rational& c, const Rational& a, const Rational& b) {
  return RealFunction::piecewise("constant(" + format_rational(c) + ")",
                                 {{a, b, Rational(0), c, Rational(0)}});
}

/// 1 at rationals, 0 elsewhere.
inline RealFunction dirichlet_function(const Rational& a, const Rational& b) {
  return RealFunction::piecewise("dirichlet", {{a, b, Rational(0), Rational(0), Rational(1)}});
}

/// Step function from breaks b0 < b1 < ... < bn and one value per open piece.
/// Point values default to the piece on the right; overrides may set them.
inline RealFunction step_function(const std::vector<Rational>& breaks, const std::vector<Rational>& values,
                                  std::map<Rational, Rational> overrides = {}) {
  if (breaks.size() < 2 || values.size() + 1 != breaks.size())
    fail(ErrorCode::invalid_argument, "step function needs n+1 breaks and n values");
  std::vector<RealFunction::Piece> pieces;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    pieces.push_back({breaks[i], breaks[i + 1], Rational(0), values[i], Rational(0)});
  return RealFunction::piecewise("step", std::move(pieces), std::move(overrides));
}

/// Piecewise-linear interpolation of monotone sample points.
inline RealFunction monotone_table(const std::vector<std::pair<Rational, Rational>>& points) {
  if (points.size() < 2) fail(ErrorCode::invalid_argument, "monotone table needs two points");
  bool up = true, down = true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].first < points[i].first))
      fail(ErrorCode::invalid_argument, "table abscissae must increase");
    if (points[i].second < points[i - 1].second) up = false;
    if (points[i].second > points[i - 1].second) down = false;
  }
  if (!up && !down) fail(ErrorCode::not_monotone, "table values are not monotone");
  std::vector<RealFunction::Piece> pieces;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto& [x0, y0] = points[i - 1];
    const auto& [x1, y1] = points[i];
    Rational slope = (y1 - y0) / (x1 - x0);
    pieces.push_back({x0, x1, slope, y0 - slope * x0, Rational(0)});
  }
  return RealFunction::piecewise("monotone-table", std::move(pieces));
}

/// sqrt on [a, b] with a >= 0. Ranges are outer rational bounds on the
/// dyadic grid 1/N with N the least power of two such that N * (hi - lo) >= 1.
inline RealFunction sqrt_function(const Rational& a, const Rational& b) {
  if (a < 0) fail(ErrorCode::outside_domain, "sqrt needs a nonnegative domain");
  auto range = [](const Rational& lo, const Rational& hi) {
    Integer n(1);
    if (lo == hi) {
      n <<= 64;
    } else {
      while (Rational(n) * (hi - lo) < 1) n <<= 1;
    }
    auto lo_b = sqrt_bounds(lo, n).first;
    auto hi_b = sqrt_bounds(hi, n).second;
    return Range{Extended(lo_b), Extended(hi_b)};
  };
  auto point = [](const Rational& x) { return exact_sqrt(x); };
  return RealFunction::opaque("sqrt", a, b, range, point);
}

}  // namespace darboux
