#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "darboux/error.hpp"
#include "darboux/rational.hpp"
#include "darboux/real.hpp"

namespace darboux {

/// Parses arithmetic over rational literals:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | '+' unary | atom
///   atom  := number | 'sqrt' '(' expr ')' | '(' expr ')' | 'inf'
/// The argument of sqrt and every divisor must evaluate to an exact rational.
class RealExpressionParser {
 public:
  explicit RealExpressionParser(std::string_view text, RefineBudget budget = {})
      : text_(text), budget_(budget) {}

  Real parse() {
    Real r = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse_error, what + " at offset " + std::to_string(pos_) + " in '" +
                                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  Rational exact_of(const Real& r, const char* what) const {
    if (auto v = r.exact()) return *v;
    fail(ErrorCode::invalid_argument, std::string(what) + " must be an exact rational");
  }

  Real expr() {
    Real acc = term();
    for (;;) {
      if (accept('+'))
        acc = add(acc, term());
      else if (accept('-'))
        acc = subtract(acc, term());
      else
        return acc;
    }
  }

  Real term() {
    Real acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = mul_signed(acc, unary(), budget_);
      } else if (accept('/')) {
        Rational d = exact_of(unary(), "divisor");
        if (d == 0) fail(ErrorCode::undefined_operation, "division by zero");
        acc = scale(acc, Rational(1 / d));
      } else {
        return acc;
      }
    }
  }

  Real unary() {
    if (accept('-')) return negate(unary());
    if (accept('+')) return unary();
    return atom();
  }

  Real atom() {
    skip_space();
    if (accept('(')) {
      Real r = expr();
      if (!accept(')')) error("expected ')'");
      return r;
    }
    if (accept_word("sqrt")) {
      if (!accept('(')) error("expected '(' after sqrt");
      Real arg = expr();
      if (!accept(')')) error("expected ')'");
      Rational q = exact_of(arg, "argument of sqrt");
      if (q == 0) return Real::from_rational(Rational(0));
      return sqrt_cut(q);
    }
    if (accept_word("inf")) return Real::pos_inf();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (start == pos_) error("expected a number");
    return Real::from_rational(parse_rational(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RefineBudget budget_;
};

inline Real parse_real(std::string_view text, RefineBudget budget = {}) {
  return RealExpressionParser(text, budget).parse();
}

}  // namespace darboux
