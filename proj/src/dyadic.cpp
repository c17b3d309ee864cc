#include "semipredual/dyadic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace semipredual {

Rational DyadicPoint::value() const {
  Rational v = 0;
  for (std::size_t m : exponents) {
    v += Rational(1, pow2(m));
  }
  return v;
}

std::string to_string(DyadicPoint const& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.exponents.size(); ++i) {
    out += (i ? "," : "") + std::to_string(p.exponents[i]);
  }
  return out + "} = " + to_string(p.value());
}

void XSpace::validate() const {
  if (a < 1 || alpha < 1 || max_exp < alpha) {
    throw PreconditionError("X(a, alpha) needs a >= 1, alpha >= 1 and max_exp >= alpha");
  }
}

bool XSpace::contains(DyadicPoint const& p) const {
  if (p.exponents.size() > a) {
    return false;
  }
  for (std::size_t i = 0; i < p.exponents.size(); ++i) {
    std::size_t const m = p.exponents[i];
    if (m < alpha || m > max_exp || (i > 0 && p.exponents[i - 1] >= m)) {
      return false;
    }
  }
  return true;
}

namespace {

// value * 2^shift, exact when every exponent is <= shift.
Integer scaled(DyadicPoint const& p, std::size_t shift) {
  Integer v = 0;
  for (std::size_t m : p.exponents) {
    bit_set(v, static_cast<unsigned>(shift - m));
  }
  return v;
}

Integer scaled(Rational const& r, std::size_t shift) {
  return numerator_of(r) * pow2(shift) / denominator_of(r);
}

std::size_t top_exponent(std::vector<DyadicPoint> const& points) {
  std::size_t top = 0;
  for (auto const& p : points) {
    if (!p.is_zero()) {
      top = std::max(top, p.exponents.back());
    }
  }
  return top;
}

void sort_by_value(std::vector<DyadicPoint>& points) {
  std::size_t const shift = top_exponent(points);
  std::vector<std::pair<Integer, DyadicPoint>> keyed;
  keyed.reserve(points.size());
  for (auto& p : points) {
    keyed.emplace_back(scaled(p, shift), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
  points.clear();
  for (auto& [v, p] : keyed) {
    points.push_back(std::move(p));
  }
}

// Appends base's exponents extended by up to `extra` exponents in [from, to].
void extend(std::vector<std::size_t>& current, std::size_t from, std::size_t to, std::size_t extra,
            std::vector<DyadicPoint>& out) {
  out.push_back({current});
  if (extra == 0) {
    return;
  }
  for (std::size_t m = from; m <= to; ++m) {
    current.push_back(m);
    extend(current, m + 1, to, extra - 1, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<DyadicPoint> enumerate(XSpace const& x) {
  x.validate();
  std::vector<DyadicPoint> out;
  std::vector<std::size_t> current;
  extend(current, x.alpha, x.max_exp, x.a, out);
  sort_by_value(out);
  return out;
}

Integer expected_count(XSpace const& x) {
  std::size_t const n = x.max_exp - x.alpha + 1;
  Integer total = 1;
  Integer binom = 1;
  for (std::size_t k = 1; k <= x.a && k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    total += binom;
  }
  return total;
}

std::vector<DyadicPoint> neighborhood_y(DyadicPoint const& x0, std::size_t beta, XSpace const& x) {
  x.validate();
  if (!x.contains(x0)) {
    throw PreconditionError(to_string(x0) + " is not in X");
  }
  if (x0.is_zero() ? beta < x.alpha : beta <= x0.exponents.back()) {
    throw PreconditionError("beta must exceed the largest exponent of x0");
  }
  std::vector<DyadicPoint> out;
  std::vector<std::size_t> current = x0.exponents;
  extend(current, beta, x.max_exp, x.a - x0.exponents.size(), out);
  sort_by_value(out);
  return out;
}

std::string_view to_string(IntervalForm form) {
  return form == IntervalForm::displayed ? "displayed" : "corrected";
}

Interval identity_interval(DyadicPoint const& x0, std::size_t beta, XSpace const& x, IntervalForm form) {
  Rational const v = x0.value();
  Interval iv;
  if (x0.is_zero()) {
    iv.lower        = 0;
    iv.lower_closed = true;
    iv.upper        = form == IntervalForm::displayed ? Rational(1, pow2(beta))
                                                      : Rational(2, pow2(beta));
    return iv;
  }
  Rational const radius = Rational(1, pow2(x0.exponents.back() + x.a));
  iv.lower              = v - radius;
  if (form == IntervalForm::displayed) {
    iv.upper = v + std::min(radius, Rational(1, pow2(beta)));
  } else {
    iv.upper = v + Rational(2, pow2(beta));
  }
  return iv;
}

namespace {

IntervalReport compare(Interval const& iv, std::vector<DyadicPoint> const& space, std::vector<DyadicPoint> const& y) {
  IntervalReport r;
  r.interval = iv;
  // Endpoints have denominators at most 2^(m_k + a) or 2^beta, so one common
  // power of two turns every comparison into integer arithmetic.
  std::size_t shift = std::max(top_exponent(space), top_exponent(y));
  for (Rational const* end : {&iv.lower, &iv.upper}) {
    Integer const den = denominator_of(*end);
    shift             = std::max<std::size_t>(shift, msb(den));
  }
  Integer const lower = scaled(iv.lower, shift);
  Integer const upper = scaled(iv.upper, shift);
  std::set<Integer> in_y;
  for (auto const& p : y) {
    in_y.insert(scaled(p, shift));
  }
  for (auto const& p : space) {
    Integer const v   = scaled(p, shift);
    bool const inside = (iv.lower_closed ? v >= lower : v > lower) && v < upper;
    bool const member = in_y.count(v) > 0;
    if (inside && !member) {
      r.extra.push_back(p);
    } else if (!inside && member) {
      r.missing.push_back(p);
    }
  }
  r.verdict = r.missing.empty() && r.extra.empty() ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace

IntervalReport verify_interval_identity(DyadicPoint const& x0, XSpace const& x, std::size_t beta, IntervalForm form) {
  auto y = neighborhood_y(x0, beta, x);
  return compare(identity_interval(x0, beta, x, form), enumerate(x), y);
}

IntervalReport verify_lower_half(DyadicPoint const& x0, XSpace const& x) {
  if (x0.is_zero()) {
    throw PreconditionError("the lower half-interval needs x0 != 0");
  }
  Rational const v = x0.value();
  Interval iv;
  iv.lower = v - Rational(1, pow2(x0.exponents.back() + x.a));
  // (lower, v] written as the half-open (lower, v + eps) with eps below the grid.
  iv.upper = v + Rational(1, pow2(x.max_exp + 1));
  return compare(iv, enumerate(x), {x0});
}

DyadicPoint psi(TopologyInstance const& t, BasicNbhd const& u, S1Point const& p) {
  return {psi_exponents(t, u, p)};
}

PsiReport psi_bijection(TopologyInstance const& t, BasicNbhd const& u, std::size_t max_exp) {
  PsiReport r;
  XSpace const x{static_cast<std::size_t>(u.a), u.alpha, max_exp};
  std::map<Rational, S1Point> images;
  for (auto const& p : enumerate_basic(t, u, max_exp)) {
    ++r.points;
    DyadicPoint d = psi(t, u, p);
    if (!x.contains(d)) {
      r.verdict = Verdict::fail;
      r.detail  = to_string(p) + " maps outside X: " + to_string(d);
      return r;
    }
    auto [it, fresh] = images.emplace(d.value(), p);
    if (!fresh) {
      r.verdict = Verdict::fail;
      r.detail  = to_string(p) + " and " + to_string(it->second) + " share the image " + to_string(d);
      return r;
    }
  }
  auto space = enumerate(x);
  if (space.size() != images.size()) {
    r.verdict = Verdict::fail;
    r.detail  = "image has " + std::to_string(images.size()) + " points, X has " + std::to_string(space.size());
  }
  return r;
}

PsiReport psi_maps_onto_y(TopologyInstance const& t, BasicNbhd const& u, BasicNbhd const& inner,
                          std::size_t max_exp) {
  PsiReport r;
  XSpace const x{static_cast<std::size_t>(u.a), u.alpha, max_exp};
  DyadicPoint const centre = psi(t, u, inner.center());
  std::vector<Rational> image;
  for (auto const& p : enumerate_basic(t, inner, max_exp)) {
    ++r.points;
    image.push_back(psi(t, u, p).value());
  }
  std::vector<Rational> y;
  for (auto const& d : neighborhood_y(centre, inner.alpha, x)) {
    y.push_back(d.value());
  }
  std::sort(image.begin(), image.end());
  std::sort(y.begin(), y.end());
  if (image != y) {
    r.verdict = Verdict::fail;
    r.detail  = "psi(" + to_string(inner) + ") differs from Y(" + to_string(centre) + ", " +
               std::to_string(inner.alpha) + ")";
  }
  return r;
}

}  // namespace semipredual
