#pragma once

// The compact sets X(a, alpha) = {0} u { 2^-m_1 + ... + 2^-m_k : 1 <= k <= a,
// alpha <= m_1 < ... < m_k } inside [0, 1], truncated to exponents <= max_exp,
// and the map psi from basic neighbourhoods onto them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semipredual/arith.hpp"
#include "semipredual/topology.hpp"
#include "semipredual/verdict.hpp"

namespace semipredual {

struct DyadicPoint {
  std::vector<std::size_t> exponents;  // strictly increasing; empty is 0

  Rational value() const;
  bool is_zero() const { return exponents.empty(); }
  friend bool operator==(DyadicPoint const&, DyadicPoint const&) = default;
};

std::string to_string(DyadicPoint const& p);

struct XSpace {
  std::size_t a = 1;
  std::size_t alpha = 1;
  std::size_t max_exp = 1;

  /// Throws PreconditionError unless a >= 1, alpha >= 1 and max_exp >= alpha.
  void validate() const;
  bool contains(DyadicPoint const& p) const;
};

/// Every point of the truncation, sorted by value.
std::vector<DyadicPoint> enumerate(XSpace const& x);

/// 1 + sum_{k=1..a} C(max_exp - alpha + 1, k).
Integer expected_count(XSpace const& x);

/// x0's exponents extended by up to a - k new exponents in [beta, max_exp],
/// sorted by value. Needs beta > m_k (beta >= alpha when x0 = 0).
std::vector<DyadicPoint> neighborhood_y(DyadicPoint const& x0, std::size_t beta, XSpace const& x);

enum class IntervalForm {
  /// (x0 - 2^(-m_k - a), x0 + min(2^(-m_k - a), 2^-beta)), and [0, 2^-beta) at 0.
  displayed,
  /// (x0 - 2^(-m_k - a), x0 + 2^(1 - beta)), and [0, 2^(1 - beta)) at 0.
  corrected,
};

std::string_view to_string(IntervalForm form);

struct Interval {
  Rational lower;
  Rational upper;
  bool lower_closed = false;  // upper end always open
  bool contains(Rational const& v) const { return (lower_closed ? v >= lower : v > lower) && v < upper; }
};

struct IntervalReport {
  Verdict verdict = Verdict::pass;
  Interval interval;
  std::vector<DyadicPoint> missing;  // in Y but outside the interval
  std::vector<DyadicPoint> extra;    // in the interval but outside Y
};

Interval identity_interval(DyadicPoint const& x0, std::size_t beta, XSpace const& x, IntervalForm form);

/// Compares the interval's trace on the truncation of X with Y exactly.
IntervalReport verify_interval_identity(DyadicPoint const& x0, XSpace const& x, std::size_t beta,
                                        IntervalForm form = IntervalForm::displayed);

/// (x0 - 2^(-m_k - a), x0] meets X only in x0 (x0 != 0).
IntervalReport verify_lower_half(DyadicPoint const& x0, XSpace const& x);

/// psi(p) for p in U: 0 at the centre, 2^-m_1 + ... + 2^-m_k at
/// (a - k, s ⊕ w_{m_1} ⊕ ... ⊕ w_{m_k}).
DyadicPoint psi(TopologyInstance const& t, BasicNbhd const& u, S1Point const& p);

struct PsiReport {
  Verdict verdict = Verdict::pass;
  std::size_t points = 0;
  std::string detail;
};

/// psi maps the truncation of U (indices <= max_exp) one-to-one onto the
/// truncation of X(a, alpha); needs the full mask.
PsiReport psi_bijection(TopologyInstance const& t, BasicNbhd const& u, std::size_t max_exp);

/// psi(U(b, t, beta)) = Y(psi(b, t), beta) on truncations, for (b, t) in U
/// and beta > m_k.
PsiReport psi_maps_onto_y(TopologyInstance const& t, BasicNbhd const& u, BasicNbhd const& inner,
                          std::size_t max_exp);

}  // namespace semipredual
