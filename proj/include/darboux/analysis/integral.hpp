#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "darboux/analysis/function.hpp"
#include "darboux/error.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Strictly increasing breakpoints a = p0 < p1 < ... < pn = b; the pieces
/// are the open intervals between neighbours.
class Partition {
 public:
  explicit Partition(std::vector<Rational> points) : points_(std::move(points)) {
    if (points_.size() < 2) fail(ErrorCode::invalid_argument, "partition needs two points");
    for (std::size_t i = 1; i < points_.size(); ++i)
      if (!(points_[i - 1] < points_[i]))
        fail(ErrorCode::invalid_argument, "partition points must increase strictly");
  }

  static Partition uniform(const Rational& a, const Rational& b, std::size_t n) {
    if (n == 0) fail(ErrorCode::invalid_argument, "partition needs a piece");
    std::vector<Rational> pts;
    pts.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      Rational t(static_cast<unsigned long>(i), static_cast<unsigned long>(n));
      t.canonicalize();
      pts.push_back(a + (b - a) * t);
    }
    return Partition(std::move(pts));
  }

  const std::vector<Rational>& points() const { return points_; }
  std::size_t pieces() const { return points_.size() - 1; }
  const Rational& lo() const { return points_.front(); }
  const Rational& hi() const { return points_.back(); }

  /// True when every point of this partition is a point of finer.
  bool refined_by(const Partition& finer) const {
    return std::includes(finer.points_.begin(), finer.points_.end(), points_.begin(), points_.end());
  }

  Partition merged(const Partition& other) const {
    std::vector<Rational> pts;
    std::set_union(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                   std::back_inserter(pts));
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return Partition(std::move(pts));
  }

 private:
  std::vector<Rational> points_;
};

struct StepFunction {
  std::vector<Rational> breaks;
  std::vector<Rational> values;

  StepFunction(std::vector<Rational> b, std::vector<Rational> v) : breaks(std::move(b)), values(std::move(v)) {
    Partition check(breaks);
    if (values.size() + 1 != breaks.size())
      fail(ErrorCode::invalid_argument, "step function needs one value per piece");
  }

  RealFunction as_function() const { return step_function(breaks, values); }
};

/// Sum of length * value over the pieces.
inline Rational step_integral(const StepFunction& s) {
  Rational total(0);
  for (std::size_t i = 0; i < s.values.size(); ++i) total += (s.breaks[i + 1] - s.breaks[i]) * s.values[i];
  return total;
}

struct DarbouxSums {
  Extended lower;
  Extended upper;
};

/// L_P and U_P: length-weighted sums of the infima and suprema over the open
/// pieces of P.
inline DarbouxSums darboux_sums(const RealFunction& f, const Partition& p) {
  if (p.lo() != f.lo() || p.hi() != f.hi())
    fail(ErrorCode::invalid_argument, "partition does not cover the domain");
  DarbouxSums s{Extended(0), Extended(0)};
  const auto& pts = p.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Range r = f.range_open(pts[i], pts[i + 1]);
    Rational len = pts[i + 1] - pts[i];
    s.lower = s.lower + r.inf.scaled(len);
    s.upper = s.upper + r.sup.scaled(len);
  }
  return s;
}

enum class IntegralVerdict { integrable, gap_certified, undetermined };

inline std::string_view to_string(IntegralVerdict v) {
  switch (v) {
    case IntegralVerdict::integrable: return "Integrable";
    case IntegralVerdict::gap_certified: return "GapCertified";
    default: return "Undetermined";
  }
}

enum class Strategy { uniform, adaptive };

struct IntegralResult {
  IntegralVerdict verdict = IntegralVerdict::undetermined;
  /// Best lower sum (max seen) and best upper sum (min seen).
  Extended lower;
  Extended upper;
  /// (lower + upper) / 2 for Integrable, the certified gap for GapCertified.
  std::optional<Rational> value;
  std::size_t rounds = 0;
  std::size_t pieces = 0;
};

namespace detail {

inline std::vector<Rational> initial_points(const RealFunction& f) {
  std::vector<Rational> pts{f.lo()};
  for (const auto& x : f.breakpoints()) pts.push_back(x);
  pts.push_back(f.hi());
  return pts;
}

inline bool finished(IntegralResult& r, const Rational& eps, const Rational& gap) {
  if (!r.lower.finite() || !r.upper.finite()) return false;
  Rational width = r.upper.value() - r.lower.value();
  if (gap > 0) {
    if (width <= gap + 2 * eps) {
      r.verdict = IntegralVerdict::gap_certified;
      r.value = gap;
      return true;
    }
    return false;
  }
  if (width <= 2 * eps) {
    r.verdict = IntegralVerdict::integrable;
    r.value = (r.lower.value() + r.upper.value()) / 2;
    return true;
  }
  return false;
}

}  // namespace detail

/// Refines partitions until the best lower and upper sums are within 2*eps
/// (Integrable) or, when the function certifies an integration gap g > 0,
/// within g + 2*eps (GapCertified). Uniform refinement halves every piece
/// per round, for at most max_refine rounds; adaptive refinement splits the
/// piece with the largest (sup - inf) * length, leftmost first, until
/// the piece count reaches 2^max_refine times the initial count.
inline IntegralResult integrate(const RealFunction& f, const Rational& eps, std::size_t max_refine = 21,
                                Strategy strategy = Strategy::uniform) {
  if (eps <= 0) fail(ErrorCode::invalid_argument, "tolerance must be positive");
  IntegralResult r;
  r.lower = Extended::neg_inf();
  r.upper = Extended::pos_inf();
  const Rational gap = f.integration_gap();
  std::vector<Rational> pts = detail::initial_points(f);

  if (strategy == Strategy::uniform) {
    for (std::size_t round = 0; round <= max_refine; ++round) {
      DarbouxSums s = darboux_sums(f, Partition(pts));
      r.lower = max_of(r.lower, s.lower);
      r.upper = min_of(r.upper, s.upper);
      r.rounds = round + 1;
      r.pieces = pts.size() - 1;
      if (detail::finished(r, eps, gap)) return r;
      if (round == max_refine) break;
      std::vector<Rational> next;
      next.reserve(2 * pts.size());
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        next.push_back(pts[i]);
        next.push_back((pts[i] + pts[i + 1]) / 2);
      }
      next.push_back(pts.back());
      pts = std::move(next);
    }
    return r;
  }

  // Adaptive: pieces keyed by (-score, left endpoint) so the first entry is
  // the widest, leftmost on ties. Infinite ranges get the top score.
  struct Piece {
    Rational lo, hi;
    Range range;
    Extended score;
  };
  auto make_piece = [&f](const Rational& a, const Rational& b) {
    Range r = f.range_open(a, b);
    Extended s = r.width().scaled(Rational(b - a));
    return Piece{a, b, std::move(r), std::move(s)};
  };
  auto cmp = [](const Piece& a, const Piece& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.lo < b.lo;
  };
  std::set<Piece, decltype(cmp)> queue(cmp);
  Extended lower(0), upper(0);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Piece p = make_piece(pts[i], pts[i + 1]);
    lower = lower + p.range.inf.scaled(Rational(p.hi - p.lo));
    upper = upper + p.range.sup.scaled(Rational(p.hi - p.lo));
    queue.insert(std::move(p));
  }
  const std::size_t limit = (pts.size() - 1) << std::min<std::size_t>(max_refine, 40);
  for (std::size_t step = 0;; ++step) {
    r.lower = max_of(r.lower, lower);
    r.upper = min_of(r.upper, upper);
    r.rounds = step + 1;
    r.pieces = queue.size();
    if (detail::finished(r, eps, gap) || queue.size() >= limit) return r;
    Piece widest = *queue.begin();
    queue.erase(queue.begin());
    Rational len = widest.hi - widest.lo;
    lower = lower - widest.range.inf.scaled(len);
    upper = upper - widest.range.sup.scaled(len);
    Rational mid = (widest.lo + widest.hi) / 2;
    for (auto [a, b] : {std::pair(widest.lo, mid), std::pair(mid, widest.hi)}) {
      Piece p = make_piece(a, b);
      Rational l = b - a;
      lower = lower + p.range.inf.scaled(l);
      upper = upper + p.range.sup.scaled(l);
      queue.insert(std::move(p));
    }
  }
}

}  // namespace darboux
