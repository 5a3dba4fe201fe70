#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace darboux {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  schema_error,
  cycle_error,
  unknown_element,
  duplicate_element,
  not_comparable,
  not_monotone,
  size_limit_exceeded,
  not_complete_lattice,
  not_extremizable,
  no_extension,
  hypothesis_violated,
  not_automorphism,
  non_positive,
  sign_undetermined,
  oracle_inconsistent,
  budget_exceeded,
  not_refinable,
  undefined_operation,
  stage_unavailable,
  outside_domain,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::schema_error: return "SchemaError";
    case ErrorCode::cycle_error: return "CycleError";
    case ErrorCode::unknown_element: return "UnknownElement";
    case ErrorCode::duplicate_element: return "DuplicateElement";
    case ErrorCode::not_comparable: return "NotComparable";
    case ErrorCode::not_monotone: return "NotMonotone";
    case ErrorCode::size_limit_exceeded: return "SizeLimitExceeded";
    case ErrorCode::not_complete_lattice: return "NotCompleteLattice";
    case ErrorCode::not_extremizable: return "NotExtremizable";
    case ErrorCode::no_extension: return "NoExtension";
    case ErrorCode::hypothesis_violated: return "HypothesisViolated";
    case ErrorCode::not_automorphism: return "NotAutomorphism";
    case ErrorCode::non_positive: return "NonPositive";
    case ErrorCode::sign_undetermined: return "SignUndetermined";
    case ErrorCode::oracle_inconsistent: return "OracleInconsistent";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::not_refinable: return "NotRefinable";
    case ErrorCode::undefined_operation: return "UndefinedOperation";
    case ErrorCode::stage_unavailable: return "StageUnavailable";
    case ErrorCode::outside_domain: return "OutsideDomain";
  }
  return "Unknown";
}

/// True for errors that signal an exhausted search or refinement budget
/// rather than a malformed or mathematically invalid input.
constexpr bool is_budget_error(ErrorCode code) {
  return code == ErrorCode::size_limit_exceeded ||
         code == ErrorCode::budget_exceeded ||
         code == ErrorCode::sign_undetermined;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace darboux
