#include <algorithm>

#include "doctest.h"
#include "semipredual/suites.hpp"

using namespace semipredual;

namespace {

Check const& find_check(Report const& r, std::string const& id) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](Check const& c) { return c.id == id; });
  REQUIRE(it != r.checks.end());
  return *it;
}

json strip_timings(json j) {
  j.erase("seconds");
  for (auto& c : j["checks"]) {
    c.erase("seconds");
  }
  return j;
}

}  // namespace

TEST_CASE("exact values round trip through JSON") {
  for (char const* text : {"0", "-7/3", "340282366920938463463374607431768211457", "5/1024"}) {
    Rational const r = parse_rational(text);
    CHECK(rational_from_json(to_json(r)) == r);
  }
  CHECK(rational_from_json(json(12)) == 12);
  CHECK(integer_from_json(json("-99")) == -99);
  CHECK_THROWS_AS(integer_from_json(json("1/2")), JsonInputError);
  CHECK_THROWS_AS(rational_from_json(json(1.5)), JsonInputError);
  CHECK_THROWS_AS(rational_from_json(json("abc")), JsonInputError);

  S1Point const p{2, parse_rational("-40")};
  auto const q = s1point_from_json(to_json(p));
  CHECK(q.a == p.a);
  CHECK(q.s == p.s);
  CHECK(s1point_from_json(json::parse(R"([0, "20"])")).s == 20);

  PartialMap const f{{1, 2}, {4, 3}};
  CHECK(partial_map_from_json(to_json(f)) == f);
  CHECK_THROWS_AS(partial_map_from_json(json::parse(R"({"pairs": [[1, 2], [3, 2]]})")), JsonInputError);
}

TEST_CASE("descriptor parsing") {
  auto t = topology_from_json(json::parse(R"({"base": "odd_naturals"})"));
  CHECK(t.base() == BaseKind::odd_naturals);
  CHECK(t.weights().kind() == WeightSequence::Kind::odd_primes);
  CHECK_THROWS_AS(topology_from_json(json::parse(R"({"base": "reals"})")), JsonInputError);
  CHECK_THROWS_AS(weights_from_json(json::parse(R"({"kind": "fibonacci"})")), JsonInputError);

  auto u = nbhd_from_json(json::parse(R"({"a": 2, "s": "0", "alpha": 1})"));
  auto m = member(topology_from_json(json::object()), u, {0, 20});
  CHECK(m.status == Decision::yes);
  CHECK(m.indices == std::vector<std::size_t>{1, 2});
  CHECK(to_json(m)["member"] == "yes");

  auto f = function_from_json(json::parse(R"({"tag": "c0_plus_const", "modifications": [[2, "1/2"]], "beta": 3})"));
  CHECK(f(2) == Rational(1, 2));
  CHECK(f(1000) == 3);
  CHECK_THROWS_AS(function_from_json(json::parse(R"({"tag": "noise"})")), JsonInputError);

  auto phi = limit_from_json(json::parse(R"({"modulus": 2, "residue": 0, "horizon": 20})"));
  CHECK(phi.horizon == 20);
  CHECK(std::all_of(phi.along.begin(), phi.along.end(), [](Natural n) { return n % 2 == 0; }));
}

TEST_CASE("suite registry and parameter validation") {
  CHECK(suite_names().size() == 11);
  CHECK_THROWS_AS(run_suite("no-such-suite", json::object()), UnknownSuite);
  CHECK_THROWS_AS(run_suite("star-condition", json::parse(R"({"index_bound": 99})")), JsonInputError);
  CHECK_THROWS_AS(run_suite("star-condition", json::parse(R"({"index_bound": "six"})")), JsonInputError);
  CHECK_THROWS_AS(run_suite("star-condition", json::parse(R"({"weights": "squares"})")), JsonInputError);
  CHECK_THROWS_AS(run_suite("star-condition", json::parse("[1, 2]")), JsonInputError);
}

TEST_CASE("report schema and status folding") {
  auto r = run_suite("star-condition", json::parse(R"({"index_bound": 6, "weights": "double_exp"})"), 7);
  auto j = r.to_json();
  CHECK(j["schema_version"] == report_schema_version);
  CHECK(j["seed"] == 7);
  CHECK(j["status"] == "PASS");
  CHECK(j["params"]["index_bound"] == 6);
  CHECK(j["checks"].size() == 3);
  CHECK(r.exit_code() == 0);

  Report folded;
  folded.checks = {Check{"a", Verdict::pass}, Check{"b", Verdict::undetermined}};
  CHECK(folded.exit_code() == 2);
  folded.checks.push_back(Check{"c", Verdict::fail});
  CHECK(folded.exit_code() == 1);
  CHECK(folded.to_json()["status"] == "FAIL");
}

TEST_CASE("reports are deterministic for a fixed seed") {
  json const params = json::parse(R"({"functions": 5, "pairs": 8, "horizon": 64})");
  auto a            = strip_timings(run_suite("nmax-wap", params, 3).to_json());
  auto b            = strip_timings(run_suite("nmax-wap", params, 3).to_json());
  CHECK(a == b);
  auto u1 = strip_timings(run_suite("unique-l1s", json::parse(R"({"trials": 40})"), 11).to_json());
  auto u2 = strip_timings(run_suite("unique-l1s", json::parse(R"({"trials": 40})"), 11).to_json());
  CHECK(u1 == u2);
}

TEST_CASE("remark4 witnesses re-validate") {
  auto r          = run_suite("remark4-continuum", json::parse(R"({"masks": 8, "horizon": 12})"));
  auto const& c   = find_check(r, "pairwise-distinct");
  REQUIRE(c.verdict == Verdict::pass);
  auto const w     = WeightSequence::double_exp(12);
  auto const masks = c.witness["masks"].get<std::vector<std::vector<std::size_t>>>();
  REQUIRE(c.witness["pairs"].size() == 28);
  for (auto const& pw : c.witness["pairs"]) {
    auto const ij        = pw["pair"].get<std::vector<std::size_t>>();
    std::size_t const n  = pw["index"];
    bool const in_second = pw["in_second"];
    auto const pt        = s1point_from_json(pw["point"]);
    TopologyInstance const own(BaseKind::integers, w, masks[in_second ? ij[1] : ij[0]]);
    TopologyInstance const other(BaseKind::integers, w, masks[in_second ? ij[0] : ij[1]]);
    for (std::size_t alpha = 1; alpha <= n; ++alpha) {
      CHECK(member(own, {1, 0, alpha}, pt).status == Decision::yes);
    }
    CHECK(member(other, {1, 0, 1}, pt).status == Decision::no);
  }
}

TEST_CASE("interval identity witness re-validates") {
  auto r        = run_suite("lemma-technical", json::parse(R"({"a_max": 2, "alpha_max": 2, "beta_max": 4, "max_exp": 8})"));
  auto const& c = find_check(r, "interval-identity");
  REQUIRE(c.verdict == Verdict::fail);
  CHECK(find_check(r, "interval-identity-corrected").verdict == Verdict::pass);
  XSpace const x{c.witness["a"], c.witness["alpha"], 8};
  DyadicPoint const x0{c.witness["x0"]["exponents"].get<std::vector<std::size_t>>()};
  std::size_t const beta = c.witness["beta"];
  auto const y           = neighborhood_y(x0, beta, x);
  auto const iv          = identity_interval(x0, beta, x, IntervalForm::displayed);
  REQUIRE_FALSE(c.witness["missing"].empty());
  for (auto const& m : c.witness["missing"]) {
    DyadicPoint const p{m["exponents"].get<std::vector<std::size_t>>()};
    CHECK(rational_from_json(m["value"]) == p.value());
    CHECK(std::find(y.begin(), y.end(), p) != y.end());
    CHECK_FALSE(iv.contains(p.value()));
  }
}

TEST_CASE("weak cancellativity witnesses re-validate") {
  auto r        = run_suite("rees-cancellativity", json::parse(R"({"index_size": 100})"));
  auto const& c = find_check(r, "rows-infinite/weak-cancellativity-fails");
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.witness["preimage_count"].get<std::size_t>() >= 100);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("section 4 suite at reduced scale") {
  auto r = run_suite("section4-no-predual", json::parse(R"({"max_point": 3, "max_value": 4, "trials": 50, "n_max": 20})"));
  CHECK(r.status() == Verdict::pass);
  auto const& skel = find_check(r, "proof-skeleton");
  CHECK(skel.witness["steps"].size() == 4);
  auto const& neg = find_check(r, "negative-controls");
  CHECK(neg.witness["g_without_fresh_point_fails"] == true);
  CHECK(neg.witness["p_widened_to_n0_fails"] == true);
  CHECK(neg.witness["h1_widened_to_n0_fails"] == true);
}
