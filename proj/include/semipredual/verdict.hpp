#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semipredual {

/// Outcome of a bounded (window- or horizon-relative) check. Undetermined
/// never counts as acceptance.
enum class Verdict { pass, fail, undetermined, not_applicable };

/// Answer to a yes/no question that may not be settled within an index bound.
enum class Decision { yes, no, undetermined };

std::string_view to_string(Verdict v);
std::string_view to_string(Decision d);

/// Combines verdicts of sub-checks: any fail wins, then undetermined.
Verdict combine(Verdict lhs, Verdict rhs);

/// Elements of different semigroup instances were mixed.
class InstanceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sampled object was consulted beyond its horizon.
class HorizonExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace semipredual
