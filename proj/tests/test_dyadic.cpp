#include <set>

#include "doctest.h"
#include "semipredual/dyadic.hpp"

using namespace semipredual;

namespace {

// Oracle: X by bitmask over exponents alpha..max_exp, values only.
std::set<Rational> x_oracle(std::size_t a, std::size_t alpha, std::size_t max_exp) {
  std::set<Rational> out;
  std::size_t const n = max_exp - alpha + 1;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) > a) {
      continue;
    }
    Rational v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        v += Rational(1, pow2(alpha + i));
      }
    }
    out.insert(v);
  }
  return out;
}

// Oracle: Y as x0 plus every admissible extension, values only.
std::set<Rational> y_oracle(DyadicPoint const& x0, std::size_t a, std::size_t beta, std::size_t max_exp) {
  std::set<Rational> out;
  if (beta > max_exp) {
    out.insert(x0.value());
    return out;
  }
  for (Rational const& tail : x_oracle(a - x0.exponents.size(), beta, max_exp)) {
    out.insert(x0.value() + tail);
  }
  return out;
}

std::set<Rational> values(std::vector<DyadicPoint> const& pts) {
  std::set<Rational> out;
  for (auto const& p : pts) {
    out.insert(p.value());
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate examples") {
  CHECK(values(enumerate({1, 1, 3})) == std::set<Rational>{0, Rational(1, 2), Rational(1, 4), Rational(1, 8)});
  CHECK(values(enumerate({2, 1, 2})) == std::set<Rational>{0, Rational(1, 2), Rational(1, 4), Rational(3, 4)});
  auto big = enumerate({2, 1, 10});
  CHECK(big.size() == 56);
  CHECK(expected_count({2, 1, 10}) == 56);
  CHECK_THROWS_AS(enumerate({0, 1, 3}), PreconditionError);
  CHECK_THROWS_AS(enumerate({1, 4, 3}), PreconditionError);
}

TEST_CASE("enumerate matches the bitmask oracle and is sorted and distinct") {
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
      XSpace const x{a, alpha, 12};
      auto pts = enumerate(x);
      CHECK(pts.size() == expected_count(x));
      CHECK(values(pts) == x_oracle(a, alpha, 12));
      for (std::size_t i = 1; i < pts.size(); ++i) {
        CHECK(pts[i - 1].value() < pts[i].value());
      }
      for (auto const& p : pts) {
        CHECK(x.contains(p));
      }
    }
  }
}

TEST_CASE("neighbourhood Y examples") {
  XSpace const x{2, 1, 4};
  auto y = neighborhood_y({{1}}, 3, x);
  CHECK(values(y) == std::set<Rational>{Rational(1, 2), Rational(5, 8), Rational(9, 16)});
  CHECK(values(neighborhood_y({{1, 2}}, 3, x)) == std::set<Rational>{Rational(3, 4)});
  CHECK(values(neighborhood_y({}, 1, x)) == values(enumerate(x)));
  CHECK_THROWS_AS(neighborhood_y({{2}}, 2, x), PreconditionError);
  CHECK_THROWS_AS(neighborhood_y({{1, 2, 3}}, 4, x), PreconditionError);
}

TEST_CASE("interval identity examples") {
  XSpace const x{2, 1, 10};
  auto r = verify_interval_identity({{1, 2}}, x, 3);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.interval.lower == Rational(11, 16));
  CHECK(r.interval.upper == Rational(13, 16));

  CHECK(verify_interval_identity({{1}}, {1, 1, 10}, 2).verdict == Verdict::pass);

  // With room to extend, Y reaches past the displayed right end.
  auto gap = verify_interval_identity({{1}}, x, 2);
  CHECK(gap.verdict == Verdict::fail);
  // 5/8 sits on the open right end, 3/4 beyond it.
  REQUIRE(gap.missing.size() == 2);
  CHECK(gap.missing[0].value() == Rational(5, 8));
  CHECK(gap.missing[1].value() == Rational(3, 4));
  CHECK(gap.extra.empty());
  CHECK(verify_interval_identity({{1}}, x, 2, IntervalForm::corrected).verdict == Verdict::pass);

  auto zero = verify_interval_identity({}, x, 2);
  CHECK(zero.verdict == Verdict::fail);
  // 1/4 and 1/4 + 2^-m for m = 3..10.
  REQUIRE(zero.missing.size() == 9);
  CHECK(zero.missing[0].value() == Rational(1, 4));
  CHECK(verify_interval_identity({}, x, 2, IntervalForm::corrected).verdict == Verdict::pass);
}

TEST_CASE("interval identities against the direct oracle") {
  std::size_t corrected_checked = 0;
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
      XSpace const x{a, alpha, 12};
      auto const xs = x_oracle(a, alpha, 12);
      for (auto const& x0 : enumerate(x)) {
        std::size_t const first = x0.is_zero() ? alpha : x0.exponents.back() + 1;
        for (std::size_t beta = first; beta <= 8; ++beta) {
          auto const y = y_oracle(x0, a, beta, 12);
          for (auto form : {IntervalForm::displayed, IntervalForm::corrected}) {
            Interval const iv = identity_interval(x0, beta, x, form);
            std::set<Rational> trace;
            for (auto const& v : xs) {
              if (iv.contains(v)) {
                trace.insert(v);
              }
            }
            auto rep = verify_interval_identity(x0, x, beta, form);
            CHECK((rep.verdict == Verdict::pass) == (trace == y));
            if (form == IntervalForm::corrected) {
              CHECK(trace == y);
              ++corrected_checked;
            }
          }
        }
        if (!x0.is_zero()) {
          CHECK(verify_lower_half(x0, x).verdict == Verdict::pass);
        }
      }
    }
  }
  CHECK(corrected_checked > 500);
}

TEST_CASE("displayed form holds exactly when no extension reaches x0 + 2^-beta") {
  // Holds when k = a, or when beta > max_exp leaves Y = {x0}.
  XSpace const x{3, 1, 12};
  CHECK(verify_interval_identity({{1, 2, 3}}, x, 4).verdict == Verdict::pass);
  CHECK(verify_interval_identity({{2, 5}}, x, 6).verdict == Verdict::fail);
}

TEST_CASE("psi examples") {
  TopologyInstance const t(BaseKind::integers, WeightSequence::double_exp(8));
  BasicNbhd const u{3, 7, 1};
  CHECK(psi(t, u, {3, 7}).is_zero());
  auto d = psi(t, u, {1, 7 + 4 + 16});
  CHECK(d.exponents == std::vector<std::size_t>{1, 2});
  CHECK(d.value() == Rational(3, 4));
  CHECK_THROWS(psi(t, u, {1, 8}));
}

TEST_CASE("psi is a bijection onto X") {
  TopologyInstance const zz(BaseKind::integers, WeightSequence::double_exp(8));
  TopologyInstance const odd(BaseKind::odd_naturals, WeightSequence::odd_primes(8));
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
      auto r = psi_bijection(zz, {a, 0, alpha}, 6);
      CHECK(r.verdict == Verdict::pass);
      CHECK(r.points == expected_count({a, alpha, 6}));
      CHECK(psi_bijection(odd, {a, 3, alpha}, 6).verdict == Verdict::pass);
    }
  }
  CHECK(psi_bijection(zz, {3, 5, 1}, 5).points == 26);
}

TEST_CASE("psi maps basic sets onto Y") {
  TopologyInstance const t(BaseKind::integers, WeightSequence::double_exp(8));
  BasicNbhd const u{3, 0, 1};
  for (auto const& p : enumerate_basic(t, u, 6)) {
    auto const d = psi(t, u, p);
    std::size_t const first = d.is_zero() ? 1 : d.exponents.back() + 1;
    for (std::size_t beta = first; beta <= 7; ++beta) {
      auto r = psi_maps_onto_y(t, u, {p.a, p.s, beta}, 6);
      CHECK(r.verdict == Verdict::pass);
    }
  }
}
