#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <utility>
#include <string>
#include <string_view>

#include "darboux/error.hpp"

namespace darboux {

/// Exact rational in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p", or a plain decimal such as "-1.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { fail(ErrorCode::parse_error, "not a rational literal: '" + s + "'"); };
  if (s.empty()) bad();
  auto digits_only = [](std::string_view d, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) i = 1;
    if (i == d.size()) return false;
    for (; i < d.size(); ++i)
      if (d[i] < '0' || d[i] > '9') return false;
    return true;
  };
  Rational r;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (!digits_only(whole, false) || !digits_only(frac, false)) bad();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    r = Rational(Integer(whole + frac, 10), scale);
    if (negative) r = -r;
  } else if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!digits_only(num, true) || !digits_only(den, false)) bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den, 10);
    if (d == 0) fail(ErrorCode::parse_error, "zero denominator in '" + s + "'");
    r = Rational(Integer(num, 10), d);
  } else {
    if (!digits_only(s, true)) bad();
    if (s[0] == '+') s.erase(0, 1);
    r = Rational(Integer(s, 10));
  }
  r.canonicalize();
  return r;
}

/// Canonical "p/q" text; integers print without a denominator.
inline std::string format_rational(const Rational& q) { return q.get_str(); }

inline Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational min_of(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// The rational with the smallest denominator (then smallest magnitude) in
/// the closed interval [lo, hi].
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) fail(ErrorCode::invalid_argument, "empty interval");
  if (lo <= 0 && 0 <= hi) return Rational(0);
  if (hi < 0) return Rational(-simplest_between(Rational(-hi), Rational(-lo)));
  Integer c = ceil_of(lo);
  if (Rational(c) <= hi) return Rational(c);
  Integer f = floor_of(lo);
  Rational a = lo - f;
  Rational b = hi - f;
  Rational inner = simplest_between(Rational(1 / b), Rational(1 / a));
  Rational out = Rational(f) + 1 / inner;
  out.canonicalize();
  return out;
}

/// Bounds on sqrt(q) for q >= 0 on the grid 1/scale: returns (lo, hi) with
/// lo <= sqrt(q) <= hi and hi - lo <= 1/scale (equal when exact on the grid).
inline std::pair<Rational, Rational> sqrt_bounds(const Rational& q, const Integer& scale) {
  if (q < 0) fail(ErrorCode::non_positive, "square root of a negative rational");
  Rational scaled = q * scale * scale;
  Integer low_arg = floor_of(scaled);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), low_arg.get_mpz_t());
  Rational lo(root, scale);
  lo.canonicalize();
  Rational hi = lo;
  if (Rational(root * root) != scaled) {
    hi = Rational(root + 1, scale);
    hi.canonicalize();
  }
  return {lo, hi};
}

/// Exact square root when q is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Rational extended by -inf and +inf, the value set of the augmented reals
/// as far as exact bounds are concerned.
class Extended {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  Extended() = default;
  Extended(Rational value) : kind_(Kind::finite), value_(std::move(value)) {}  // NOLINT
  Extended(long value) : kind_(Kind::finite), value_(value) {}                 // NOLINT

  static Extended pos_inf() { return Extended(Kind::pos_inf); }
  static Extended neg_inf() { return Extended(Kind::neg_inf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  const Rational& value() const {
    if (!finite()) fail(ErrorCode::undefined_operation, "infinite value has no rational part");
    return value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.finite() || a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
    if (!a.finite()) return std::strong_ordering::equal;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Extended operator-() const {
    switch (kind_) {
      case Kind::neg_inf: return pos_inf();
      case Kind::pos_inf: return neg_inf();
      default: return Extended(Rational(-value_));
    }
  }

  /// Saturating sum; (+inf) + (-inf) is undefined.
  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.finite() && b.finite()) return Extended(Rational(a.value_ + b.value_));
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
      fail(ErrorCode::undefined_operation, "(+inf) + (-inf)");
    return a.finite() ? b : a;
  }

  friend Extended operator-(const Extended& a, const Extended& b) { return a + (-b); }

  /// Scaling by a rational; 0 * (+-inf) is taken to be 0.
  Extended scaled(const Rational& c) const {
    if (c == 0) return Extended(Rational(0));
    if (finite()) return Extended(Rational(value_ * c));
    return c > 0 ? *this : -*this;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::neg_inf: return "-inf";
      case Kind::pos_inf: return "+inf";
      default: return format_rational(value_);
    }
  }

 private:
  explicit Extended(Kind k) : kind_(k) {}
  static int rank(Kind k) { return k == Kind::neg_inf ? 0 : (k == Kind::finite ? 1 : 2); }

  Kind kind_ = Kind::finite;
  Rational value_{0};
};

inline Extended parse_extended(std::string_view text) {
  if (text == "+inf" || text == "inf") return Extended::pos_inf();
  if (text == "-inf") return Extended::neg_inf();
  return Extended(parse_rational(text));
}

inline const Extended& min_of(const Extended& a, const Extended& b) { return b < a ? b : a; }
inline const Extended& max_of(const Extended& a, const Extended& b) { return a < b ? b : a; }

}  // namespace darboux
