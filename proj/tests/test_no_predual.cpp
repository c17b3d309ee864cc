#include <random>

#include "doctest.h"
#include "semipredual/no_predual.hpp"

using namespace semipredual;

TEST_CASE("O(f, F') membership") {
  PartialMap const f{{1, 2}};
  OpenSetSpec const spec{f, {3}};
  CHECK(o_member(spec, f));
  CHECK_FALSE(o_member(spec, PartialMap{{1, 2}, {3, 5}}));
  CHECK(o_member(spec, PartialMap{{1, 2}, {4, 4}}));
  CHECK_FALSE(o_member(spec, PartialMap{}));
  CHECK_THROWS_AS((OpenSetSpec{f, {1}}.validate()), PreconditionError);
}

TEST_CASE("build_g examples") {
  auto universe = all_partial_maps(5, 6);
  CHECK(universe.size() == 4051);

  OpenSetSpec const one{PartialMap{{1, 2}}, {3}};
  auto g = build_g(one);
  // Fresh point: least natural outside F u F' u f(F) = {1, 2, 3}.
  CHECK(g == PartialMap{{1, 1}, {4, 3}});
  CHECK(verify_right_translation(one, g, universe).verdict == Verdict::pass);

  OpenSetSpec const none{PartialMap{{1, 2}, {3, 5}}, {}};
  CHECK(build_g(none) == PartialMap::identity_on({1, 3}));

  OpenSetSpec const zero{PartialMap{}, {2}};
  auto gz = build_g(zero);
  CHECK(gz == PartialMap{{1, 2}});
  auto rz = verify_right_translation(zero, gz, universe);
  CHECK(rz.verdict == Verdict::pass);
  // Oracle: h(2) = 0 leaves 5 points for a map into 6 values.
  CHECK(rz.members == all_partial_maps(4, 6).size());
}

TEST_CASE("right translation negative controls") {
  auto universe = all_partial_maps(5, 6);
  OpenSetSpec const spec{PartialMap{{1, 2}}, {3}};
  // Dropping the fresh point loses the F' condition.
  auto r = verify_right_translation(spec, PartialMap{{1, 1}}, universe);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE(r.counterexample);
  CHECK((*r.counterexample)(3) != 0);
  // Mapping the fresh point elsewhere constrains the wrong point.
  CHECK(verify_right_translation(spec, PartialMap{{1, 1}, {4, 5}}, universe).verdict == Verdict::fail);
}

TEST_CASE("lemma over a reduced exhaustive universe") {
  auto r = verify_lemma_exhaustive(3, 4, 2);
  CHECK(r.verdict == Verdict::pass);
  // Oracle: sum_k C(3, k) P(4, k) 2^(3 - k).
  CHECK(r.specs == 8 + 3 * 4 * 4 + 3 * 12 * 2 + 24);
  CHECK(r.universe == 1 + 12 + 36 + 24);
}

TEST_CASE("build_fn examples") {
  PartialMap const f{{1, 2}};
  auto b = build_fn(f, 3, 5);
  REQUIRE(b.map);
  CHECK(*b.map == PartialMap{{1, 2}, {3, 5}});
  CHECK(b.threshold == 3);
  auto c = build_fn(f, 3, 2);
  CHECK_FALSE(c.map);
  CHECK(c.threshold == 3);
  CHECK_FALSE(c.reason.empty());
  CHECK_THROWS_AS(build_fn(f, 1, 5), PreconditionError);
  CHECK(build_fn(PartialMap{}, 1, 1).threshold == 1);
}

TEST_CASE("f_n p = f") {
  PartialMap const f{{1, 2}};
  auto r = verify_fnp(f, 3, 4, 20);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.checked == 17);
  CHECK(verify_fnp(PartialMap{}, 1, 1, 10).verdict == Verdict::pass);
  CHECK(build_p(PartialMap{}).is_zero());

  auto sabotage = verify_fnp(f, 3, PartialMap::identity_on({1, 3}), 4, 20);
  CHECK(sabotage.verdict == Verdict::fail);
  CHECK(sabotage.failing_n == Natural(4));
}

TEST_CASE("f_n p = f on random data") {
  std::mt19937_64 rng(31);
  auto universe = all_partial_maps(6, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    auto const& f = universe[std::uniform_int_distribution<std::size_t>(0, universe.size() - 1)(rng)];
    Natural n0 = std::uniform_int_distribution<Natural>(1, 9)(rng);
    while (f(n0) != 0) {
      ++n0;
    }
    auto r = verify_fnp(f, n0, 1, 50);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.checked == 50 - f.size());
    if (!f.is_zero()) {
      auto widened = f.domain();
      widened.insert(n0);
      CHECK(verify_fnp(f, n0, PartialMap::identity_on(widened), 1, 50).verdict == Verdict::fail);
    }
  }
}

TEST_CASE("annihilation examples") {
  PartialMap const f{{1, 2}};
  auto r = verify_annihilation(f, 3, PartialMap{{1, 2}, {4, 7}}, 4, 3, 20);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.h2gh1 == PartialMap{{4, 7}});
  CHECK(r.nonzero_at.empty());
  CHECK(r.checked == 18);

  auto same = verify_annihilation(f, 3, PartialMap{{1, 2}, {3, 9}}, 3, 3, 20);
  CHECK(same.verdict == Verdict::pass);
  CHECK(same.nonzero_at == std::vector<Natural>{9});

  CHECK_THROWS_AS(verify_annihilation(f, 3, f, 4, 3, 20), PreconditionError);
  CHECK_THROWS_AS(verify_annihilation(f, 3, PartialMap{{1, 5}, {4, 7}}, 4, 3, 20), PreconditionError);
}

TEST_CASE("idempotent sandwiches stay single-point or zero") {
  auto universe = all_partial_maps(4, 5);
  for (Natural k = 1; k <= 5; ++k) {
    for (Natural m = 1; m <= 5; ++m) {
      PartialMap const h1{{k, k}};
      PartialMap const h2{{m, m}};
      for (auto const& x : universe) {
        auto y = h2 * x * h1;
        CHECK(y.size() <= 1);
        CHECK(y.is_zero() == (x(k) != m));
      }
    }
  }
}
