#include "semipredual/verdict.hpp"

namespace semipredual {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::undetermined:
      return "UNDETERMINED";
    case Verdict::not_applicable:
      return "NOT-APPLICABLE";
  }
  return "?";
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::yes:
      return "yes";
    case Decision::no:
      return "no";
    case Decision::undetermined:
      return "undetermined";
  }
  return "?";
}

Verdict combine(Verdict lhs, Verdict rhs) {
  if (lhs == Verdict::fail || rhs == Verdict::fail) {
    return Verdict::fail;
  }
  if (lhs == Verdict::undetermined || rhs == Verdict::undetermined) {
    return Verdict::undetermined;
  }
  if (lhs == Verdict::not_applicable) {
    return rhs;
  }
  return lhs;
}

}  // namespace semipredual
