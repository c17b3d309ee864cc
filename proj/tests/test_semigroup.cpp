#include <algorithm>
#include <random>
#include <unordered_set>

#include "doctest.h"
#include "semipredual/semigroup.hpp"

using namespace semipredual;

namespace {

Semigroup rees_z3_two_rows() {
  ReesData d;
  d.group.type  = ReesGroup::Type::cyclic;
  d.group.order = 3;
  d.rows        = 2;
  d.cols        = 1;
  d.sandwich    = {{{0}, {0}}};
  return Semigroup::rees(d);
}

Semigroup rees_hundred_rows() {
  ReesData d;
  d.group.type = ReesGroup::Type::integers;
  d.group.dim  = 1;
  d.rows       = 100;
  d.cols       = 1;
  d.sandwich   = {std::vector<std::vector<Integer>>(100, {0})};
  return Semigroup::rees(d);
}

PartialMap random_map(std::mt19937_64& rng, Natural max_point, Natural max_value) {
  std::vector<PartialMap::Pair> pairs;
  std::vector<Natural> values(max_value);
  for (Natural v = 1; v <= max_value; ++v) {
    values[v - 1] = v;
  }
  std::shuffle(values.begin(), values.end(), rng);
  std::size_t used = 0;
  for (Natural n = 1; n <= max_point && used < values.size(); ++n) {
    if (rng() % 2) {
      pairs.emplace_back(n, values[used++]);
    }
  }
  return PartialMap(pairs);
}

}  // namespace

TEST_CASE("products follow each instance's law") {
  CHECK(Semigroup::nat_max().product(nat(3), nat(5)) == nat(5));
  CHECK(rees_z3_two_rows().product(rees({1}, 1, 1), rees({2}, 2, 1)) == rees({0}, 1, 1));
  PartialMap f{{1, 2}};
  PartialMap g{{3, 1}};
  CHECK(Semigroup::partial_maps().product(f, g) == Element(PartialMap{{3, 2}}));
  CHECK(Semigroup::free(2).product(word("ab"), word("a")) == word("aba"));
  CHECK(Semigroup::nat_infty().product(ext_nat(4), ext_infinity()) == ext_infinity());
  CHECK(Semigroup::nat_infty().product(ext_nat(4), ext_nat(3)) == ext_nat(7));
  CHECK(Semigroup::nat_mul().product(nat(4), nat(3)) == nat(12));
}

TEST_CASE("cross-instance products are rejected") {
  CHECK_THROWS_AS(Semigroup::nat_max().product(word("a"), nat(1)), InstanceMismatch);
  CHECK_THROWS_AS(Semigroup::zplus_k(2).product(tuple({1, 0, 0}), tuple({0, 1})), InstanceMismatch);
  CHECK_THROWS_AS(Semigroup::free(2).product(word("ac"), word("a")), InstanceMismatch);
  CHECK_THROWS_AS(rees_z3_two_rows().product(rees({1}, 3, 1), rees({0}, 1, 1)), InstanceMismatch);
  CHECK_THROWS_AS(PartialMap({{1, 2}, {3, 2}}), PreconditionError);
}

TEST_CASE("windows enumerate distinct elements") {
  for (auto const& s : {Semigroup::zplus_k(3), Semigroup::zplus_times_z(), Semigroup::free(2),
                        Semigroup::nat_infty(), rees_z3_two_rows(), Semigroup::partial_maps()}) {
    auto w = s.window(4);
    std::unordered_set<Element, ElementHash> seen(w.begin(), w.end());
    CHECK(seen.size() == w.size());
    for (auto const& x : w) {
      CHECK(s.contains(x));
      CHECK(s.grade(x) <= 4);
    }
  }
  CHECK(Semigroup::zplus_k(2).window(20).size() == 231);
  CHECK(Semigroup::free(2).window(4).size() == 30);
  CHECK(Semigroup::partial_maps().window(2).size() == 7);
}

TEST_CASE("associativity on windows") {
  // Window ranks keep the triple count near 10^6 or below.
  CHECK(check_associativity(Semigroup::nat_max(), 12) == Verdict::pass);
  CHECK(check_associativity(Semigroup::nat_mul(), 12) == Verdict::pass);
  CHECK(check_associativity(Semigroup::nat_infty(), 12) == Verdict::pass);
  CHECK(check_associativity(Semigroup::zplus_k(2), 8) == Verdict::pass);
  CHECK(check_associativity(Semigroup::zplus_times_z(), 5) == Verdict::pass);
  CHECK(check_associativity(Semigroup::free(2), 5) == Verdict::pass);
  CHECK(check_associativity(rees_z3_two_rows(), 12) == Verdict::pass);
  CHECK(check_associativity(Semigroup::partial_maps(), 2) == Verdict::pass);
}

TEST_CASE("Rees zero is absorbing") {
  auto s = rees_z3_two_rows();
  for (auto const& x : s.window(3)) {
    CHECK(s.product(rees_zero(), x) == rees_zero());
    CHECK(s.product(x, rees_zero()) == rees_zero());
  }
}

TEST_CASE("partial map composition stays a partial map") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 1000; ++i) {
    PartialMap f = random_map(rng, 8, 8);
    PartialMap g = random_map(rng, 8, 8);
    PartialMap fg = f * g;
    CHECK_NOTHROW(PartialMap(fg.pairs()));
    for (Natural n = 0; n <= 9; ++n) {
      CHECK(fg(n) == f(g(n)));
    }
  }
}

TEST_CASE("inverse satisfies the inverse-semigroup axioms") {
  auto a = inverse_with_check(PartialMap{{2, 5}});
  CHECK(a.inverse == PartialMap{{5, 2}});
  CHECK(a.axioms_hold);
  auto b = inverse_with_check(PartialMap{});
  CHECK(b.inverse.is_zero());
  CHECK(b.axioms_hold);
  auto c = inverse_with_check(PartialMap{{1, 3}, {2, 7}});
  CHECK(c.inverse == PartialMap{{3, 1}, {7, 2}});
  CHECK(c.axioms_hold);
}

TEST_CASE("weak cancellativity") {
  auto nmax = is_weakly_cancellative_window(Semigroup::nat_max(), 10);
  CHECK(nmax.verdict == Verdict::pass);
  CHECK(nmax.largest_fibre == 10);

  auto ninf = is_weakly_cancellative_window(Semigroup::nat_infty(), 49);
  CHECK(ninf.window_size == 50);
  REQUIRE(ninf.verdict == Verdict::fail);
  CHECK(ninf.witness->translator == ext_infinity());
  CHECK(ninf.witness->target == ext_infinity());
  CHECK(ninf.witness->preimages.size() == 50);

  auto rees = is_weakly_cancellative_window(rees_hundred_rows(), 1);
  REQUIRE(rees.verdict == Verdict::fail);
  CHECK(rees.witness->translator == Element(semipredual::rees({0}, 1, 1)));
  CHECK(rees.witness->side == Side::left);
  CHECK(rees.witness->preimages.size() == 100);
  auto const& target = std::get<ReesElement>(rees.witness->target);
  CHECK(target.row == 1);
  for (auto const& p : rees.witness->preimages) {
    CHECK(std::get<ReesElement>(p).entry == target.entry);
  }
}

TEST_CASE("cancellativity") {
  CHECK(is_cancellative_window(Semigroup::zplus_k(2), 20).verdict == Verdict::pass);
  CHECK(is_cancellative_window(Semigroup::free(2), 4).verdict == Verdict::pass);

  auto nmax = is_cancellative_window(Semigroup::nat_max(), 10);
  REQUIRE(nmax.verdict == Verdict::fail);
  auto const& w = *nmax.witness;
  REQUIRE(w.preimages.size() == 2);
  auto s = Semigroup::nat_max();
  CHECK(s.product(w.translator, w.preimages[0]) == s.product(w.translator, w.preimages[1]));
  CHECK(w.preimages[0] != w.preimages[1]);
  // max(5,1) = max(5,2) is one such collision.
  CHECK(s.product(nat(5), nat(1)) == s.product(nat(5), nat(2)));
}

TEST_CASE("finite left divisibility") {
  auto zplus = is_finitely_left_divisible_window(Semigroup::zplus_k(1), nat(3), 12);
  CHECK(zplus.verdict == Verdict::pass);
  CHECK(zplus.divisors == std::vector<Element>{nat(0), nat(1), nat(2), nat(3)});

  auto zz = is_finitely_left_divisible_window(Semigroup::zplus_times_z(), tuple({0, 0}), 12);
  CHECK(zz.verdict == Verdict::fail);
  CHECK(zz.divisors.size() == 25);
  CHECK(zz.count_at_comparison_rank == 13);

  auto nmul = is_finitely_left_divisible_window(Semigroup::nat_mul(), nat(12), 24);
  CHECK(nmul.verdict == Verdict::pass);
  CHECK(nmul.divisors == std::vector<Element>{nat(1), nat(2), nat(3), nat(4), nat(6), nat(12)});

  auto small = is_finitely_left_divisible_window(Semigroup::nat_mul(), nat(12), 12);
  CHECK(small.verdict == Verdict::undetermined);
}

TEST_CASE("length by breadth-first search") {
  auto a = length(Semigroup::free(2), word("aba"));
  CHECK(a.status == Decision::yes);
  CHECK(a.length == 3);
  auto b = length(Semigroup::zplus_k(2), tuple({2, 3}));
  CHECK(b.status == Decision::yes);
  CHECK(b.length == 5);
  auto c = length(Semigroup::zplus_k(2), tuple({0, 0}));
  CHECK(c.status == Decision::no);
  auto d = length(Semigroup::zplus_times_z(), tuple({0, 0}));
  CHECK(d.status == Decision::yes);
  CHECK(d.length == 2);
  CHECK_THROWS_AS(length(Semigroup::nat_max(), nat(3)), PreconditionError);
}

TEST_CASE("length agrees with closed forms") {
  auto z3 = Semigroup::zplus_k(3);
  for (auto const& x : z3.window(10)) {
    auto r = length(z3, x);
    if (z3.grade(x) == 0) {
      CHECK(r.status == Decision::no);
    } else {
      CHECK(r.status == Decision::yes);
      CHECK(r.length == z3.grade(x));
    }
  }
  auto s2 = Semigroup::free(2);
  for (auto const& x : s2.window(6)) {
    auto r = length(s2, x);
    CHECK(r.status == Decision::yes);
    CHECK(r.length == std::get<WordElement>(x).letters.size());
  }
}
