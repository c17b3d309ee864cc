#include "semipredual/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "semipredual/good_corr.hpp"

namespace semipredual {

Verdict Report::status() const {
  Verdict v = Verdict::pass;
  for (auto const& c : checks) {
    if (c.verdict == Verdict::fail || c.verdict == Verdict::undetermined) {
      v = combine(v, c.verdict);
    }
  }
  return v;
}

int Report::exit_code() const {
  switch (status()) {
    case Verdict::fail: return 1;
    case Verdict::undetermined: return 2;
    default: return 0;
  }
}

json Report::to_json() const {
  json out{{"schema_version", report_schema_version},
           {"suite", suite},
           {"params", params},
           {"seed", seed},
           {"jobs", jobs},
           {"status", semipredual::to_json(status())},
           {"seconds", seconds}};
  json list = json::array();
  for (auto const& c : checks) {
    list.push_back({{"id", c.id},
                    {"verdict", semipredual::to_json(c.verdict)},
                    {"detail", c.detail},
                    {"witness", c.witness},
                    {"seconds", c.seconds}});
  }
  out["checks"] = list;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class Params {
 public:
  Params(json const& given, json& echo) : given_(given), echo_(echo) {
    if (!given_.is_null() && !given_.is_object()) {
      throw JsonInputError("params must be a JSON object");
    }
  }

  std::size_t natural(char const* key, std::size_t fallback, std::size_t lo, std::size_t hi) {
    std::size_t v = fallback;
    if (given_.is_object() && given_.contains(key)) {
      if (!given_[key].is_number_unsigned()) {
        throw JsonInputError(std::string("param \"") + key + "\" must be a non-negative integer");
      }
      v = given_[key].get<std::size_t>();
    }
    if (v < lo || v > hi) {
      throw JsonInputError(std::string("param \"") + key + "\" = " + std::to_string(v) + " outside [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    echo_[key] = v;
    return v;
  }

  std::string text(char const* key, std::string fallback, std::vector<std::string> const& allowed) {
    std::string v = std::move(fallback);
    if (given_.is_object() && given_.contains(key)) {
      if (!given_[key].is_string()) {
        throw JsonInputError(std::string("param \"") + key + "\" must be a string");
      }
      v = given_[key].get<std::string>();
    }
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      throw JsonInputError(std::string("param \"") + key + "\" has unsupported value \"" + v + "\"");
    }
    echo_[key] = v;
    return v;
  }

 private:
  json const& given_;
  json& echo_;
};

// Runs body, times it, and stores the check under id.
void check(Report& r, std::string id, std::function<void(Check&)> const& body) {
  Check c;
  c.id          = std::move(id);
  auto const t0 = Clock::now();
  body(c);
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.checks.push_back(std::move(c));
}

// A designed negative control passes when the check under it fails.
Verdict expect_failure(bool failed) { return failed ? Verdict::pass : Verdict::fail; }

TopologyInstance zz(std::size_t bound) { return {BaseKind::integers, WeightSequence::double_exp(bound)}; }
TopologyInstance odd(std::size_t bound) { return {BaseKind::odd_naturals, WeightSequence::odd_primes(bound)}; }

// ---------------------------------------------------------------------------

void lemma_technical(Report& r, Params& p) {
  std::size_t const a_max     = p.natural("a_max", 4, 1, 6);
  std::size_t const alpha_max = p.natural("alpha_max", 3, 1, 6);
  std::size_t const beta_max  = p.natural("beta_max", 8, 1, 16);
  std::size_t const max_exp   = p.natural("max_exp", 12, 1, 16);
  std::size_t const psi_exp   = p.natural("psi_max_exp", 6, 1, 10);

  auto sweep = [&](IntervalForm form, Check& c) {
    std::size_t total = 0;
    std::size_t bad   = 0;
    for (std::size_t a = 1; a <= a_max; ++a) {
      for (std::size_t alpha = 1; alpha <= std::min(alpha_max, max_exp); ++alpha) {
        XSpace const x{a, alpha, max_exp};
        for (auto const& x0 : enumerate(x)) {
          std::size_t const first = x0.is_zero() ? alpha : x0.exponents.back() + 1;
          for (std::size_t beta = first; beta <= beta_max; ++beta) {
            ++total;
            auto rep = verify_interval_identity(x0, x, beta, form);
            if (rep.verdict == Verdict::fail) {
              if (bad++ == 0) {
                json missing = json::array();
                for (auto const& m : rep.missing) {
                  missing.push_back(to_json(m));
                }
                json extra = json::array();
                for (auto const& m : rep.extra) {
                  extra.push_back(to_json(m));
                }
                c.witness = {{"a", a},           {"alpha", alpha},
                             {"x0", to_json(x0)}, {"beta", beta},
                             {"interval", {to_string(rep.interval.lower), to_string(rep.interval.upper)}},
                             {"missing", missing}, {"extra", extra}};
              }
            }
          }
        }
      }
    }
    c.verdict = bad ? Verdict::fail : Verdict::pass;
    c.detail  = std::to_string(total - bad) + "/" + std::to_string(total) + " (x0, beta) cases with equality";
  };
  check(r, "interval-identity", [&](Check& c) { sweep(IntervalForm::displayed, c); });
  check(r, "interval-identity-corrected", [&](Check& c) { sweep(IntervalForm::corrected, c); });
  check(r, "lower-half-interval", [&](Check& c) {
    std::size_t total = 0;
    for (std::size_t a = 1; a <= a_max; ++a) {
      for (std::size_t alpha = 1; alpha <= std::min(alpha_max, max_exp); ++alpha) {
        XSpace const x{a, alpha, max_exp};
        for (auto const& x0 : enumerate(x)) {
          if (x0.is_zero()) {
            continue;
          }
          ++total;
          if (verify_lower_half(x0, x).verdict == Verdict::fail && c.verdict == Verdict::pass) {
            c.verdict = Verdict::fail;
            c.witness = {{"a", a}, {"alpha", alpha}, {"x0", to_json(x0)}};
          }
        }
      }
    }
    c.detail = std::to_string(total) + " points";
  });
  auto const t = zz(psi_exp + 2);
  check(r, "psi-bijection", [&](Check& c) {
    std::size_t points = 0;
    for (std::size_t a = 1; a <= std::min<std::size_t>(a_max, 3); ++a) {
      for (std::size_t alpha = 1; alpha <= std::min(alpha_max, psi_exp); ++alpha) {
        auto rep = psi_bijection(t, {a, 0, alpha}, psi_exp);
        points += rep.points;
        if (rep.verdict == Verdict::fail && c.verdict == Verdict::pass) {
          c.verdict = Verdict::fail;
          c.witness = {{"a", a}, {"alpha", alpha}, {"detail", rep.detail}};
        }
      }
    }
    c.detail = std::to_string(points) + " points mapped";
  });
  check(r, "psi-onto-y", [&](Check& c) {
    BasicNbhd const u{3, 0, 1};
    std::size_t sets = 0;
    for (auto const& q : enumerate_basic(t, u, psi_exp)) {
      auto const d            = psi(t, u, q);
      std::size_t const first = d.is_zero() ? 1 : d.exponents.back() + 1;
      for (std::size_t beta = first; beta <= psi_exp + 1; ++beta) {
        ++sets;
        auto rep = psi_maps_onto_y(t, u, {q.a, q.s, beta}, psi_exp);
        if (rep.verdict == Verdict::fail && c.verdict == Verdict::pass) {
          c.verdict = Verdict::fail;
          c.witness = {{"inner", to_json(BasicNbhd{q.a, q.s, beta})}, {"detail", rep.detail}};
        }
      }
    }
    c.detail = std::to_string(sets) + " basic sets compared with Y";
  });
}

// ---------------------------------------------------------------------------

std::vector<std::tuple<S1Point, S1Point, std::size_t>> continuity_triples(TopologyInstance const& t) {
  std::vector<Rational> shifts;
  std::vector<Rational> centres;
  if (t.multiplicative()) {
    shifts  = {1, 3, 5, 15};
    centres = {1, 7, 9, 35};
  } else {
    shifts  = {0, 4, -16, 7};
    centres = {0, 5, 20, -4};
  }
  std::vector<std::tuple<S1Point, S1Point, std::size_t>> out;
  for (int b = 0; b <= 1; ++b) {
    for (auto const& tt : shifts) {
      for (int a = 0; a <= 2; ++a) {
        for (auto const& s : centres) {
          for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
            out.emplace_back(S1Point{b, tt}, S1Point{a, s}, alpha);
          }
        }
      }
    }
  }
  return out;
}

std::vector<S1Point> hausdorff_points(TopologyInstance const& t, std::size_t a_max, std::size_t index_limit) {
  std::vector<S1Point> out;
  for (auto const& s : signed_combinations(t, index_limit, 2)) {
    for (std::size_t a = 0; a <= a_max; ++a) {
      out.push_back({a, s});
    }
  }
  return out;
}

void gen_con_one(Report& r, Params& p) {
  std::size_t const a_max       = p.natural("a_max", 3, 1, 4);
  std::size_t const index_limit = p.natural("index_limit", 6, 2, 8);
  std::size_t const terms       = p.natural("combination_terms", 2, 1, 3);
  std::size_t const h_a_max     = p.natural("hausdorff_a_max", 2, 0, 3);
  auto const t                  = zz(index_limit + 2);

  check(r, "base-property", [&](Check& c) {
    auto rep  = verify_base_property(t, a_max, index_limit, terms, r.jobs);
    c.verdict = rep.verdict;
    c.detail  = std::to_string(rep.basic_sets) + " basic sets, " + std::to_string(rep.intersecting_pairs) +
               " intersecting pairs, " + std::to_string(rep.point_checks) + " common points";
    if (rep.counterexample) {
      c.witness = {{"counterexample", *rep.counterexample}};
    }
  });
  check(r, "hausdorff", [&](Check& c) {
    auto const pts    = hausdorff_points(t, h_a_max, index_limit);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        ++pairs;
        auto w = hausdorff_witness(t, pts[i], pts[j], index_limit);
        if (w.verdict != Verdict::pass && c.verdict == Verdict::pass) {
          c.verdict = w.verdict;
          c.witness = {{"x", to_json(pts[i])}, {"y", to_json(pts[j])}, {"u", to_json(w.u)}, {"v", to_json(w.v)}};
          if (w.common) {
            c.witness["common"] = to_json(*w.common);
          }
        }
      }
    }
    c.witness["pairs"] = pairs;
    c.detail           = std::to_string(pairs) + " pairs of distinct points";
  });
  for (auto const& inst : {t, odd(index_limit + 2)}) {
    std::string const id = std::string("separate-continuity/") + std::string(to_string(inst.base()));
    check(r, id, [&](Check& c) {
      auto const triples = continuity_triples(inst);
      std::size_t points = 0;
      for (auto const& [shift, centre, alpha] : triples) {
        auto rep = separate_continuity_identity(inst, shift, centre, alpha, index_limit);
        points += rep.points_checked;
        if (rep.verdict != Verdict::pass && c.verdict == Verdict::pass) {
          c.verdict = rep.verdict;
          c.witness = {{"shift", to_json(shift)}, {"centre", to_json(centre)}, {"alpha", alpha}};
          if (rep.counterexample) {
            c.witness["point"] = to_json(*rep.counterexample);
          }
        }
      }
      c.witness["triples"] = triples.size();
      c.detail = std::to_string(triples.size()) + " (shift, centre, alpha) triples, " + std::to_string(points) +
                 " points";
    });
  }
}

// ---------------------------------------------------------------------------

struct TransferCase {
  TopologyInstance const* t;
  std::vector<S1Point> sequence;
  S1Point shift;
};

std::vector<TransferCase> transfer_cases(TopologyInstance const& zt, TopologyInstance const& ot,
                                         std::size_t length) {
  std::vector<TransferCase> out;
  auto build = [&](TopologyInstance const& t, std::vector<Rational> const& offsets,
                   std::vector<Rational> const& shifts, std::vector<int> const& shift_a) {
    for (auto const& c : offsets) {
      for (int pattern = 0; pattern < 2; ++pattern) {
        for (int x = 0; x <= 1; ++x) {
          std::vector<S1Point> seq;
          for (std::size_t n = 1; n <= length; ++n) {
            std::vector<std::size_t> idx{n};
            if (pattern == 1) {
              idx.push_back(n + 1);
            }
            seq.push_back({x, t.op(c, t.combine(idx))});
          }
          for (int a : shift_a) {
            for (auto const& s : shifts) {
              out.push_back({&t, seq, {a, s}});
            }
          }
        }
      }
    }
  };
  build(zt, {0, 5, -7}, {0, 5, -3}, {0, 1, 2});
  build(ot, {1, 3, 5}, {1, 3, 9}, {0, 1});
  return out;
}

void gen_con_two(Report& r, Params& p) {
  std::size_t const length    = p.natural("length", 8, 4, 12);
  std::size_t const alpha_max = p.natural("alpha_max", 6, 1, 10);
  auto const zt               = zz(length + 3);
  auto const ot               = odd(length + 3);
  for (int which = 0; which < 2; ++which) {
    auto const& inst     = which == 0 ? zt : ot;
    std::string const id = std::string("transfer/") + std::string(to_string(inst.base()));
    check(r, id, [&](Check& c) {
      std::size_t cases = 0;
      for (auto const& tc : transfer_cases(zt, ot, length)) {
        if (tc.t != &inst) {
          continue;
        }
        ++cases;
        auto rep = convergence_transfer(inst, tc.sequence, tc.shift, alpha_max);
        bool ok  = rep.verdict == Verdict::pass && rep.original && rep.shifted &&
                  validate_certificate(inst, tc.sequence, *rep.original);
        if (ok) {
          std::vector<S1Point> shifted;
          for (auto const& q : tc.sequence) {
            shifted.push_back(inst.product(q, tc.shift));
          }
          ok = validate_certificate(inst, shifted, *rep.shifted);
        }
        if (!ok && c.verdict == Verdict::pass) {
          c.verdict = rep.verdict == Verdict::pass ? Verdict::fail : rep.verdict;
          c.witness = {{"shift", to_json(tc.shift)}, {"first_term", to_json(tc.sequence.front())}, {"note", rep.note}};
        }
        if (cases == 1 && rep.predicted && rep.original) {
          c.witness = {{"shift", to_json(tc.shift)},
                       {"predicted", to_json(*rep.predicted)},
                       {"certificate", to_json(*rep.original)}};
        }
      }
      c.witness["cases"] = cases;
      c.detail           = std::to_string(cases) + " (sequence, shift) cases";
    });
  }
}

// ---------------------------------------------------------------------------

void star_condition(Report& r, Params& p) {
  std::size_t const bound = p.natural("index_bound", 6, 1, 9);
  std::string const kind  = p.text("weights", "double_exp", {"double_exp", "odd_primes"});
  auto const w = kind == "double_exp" ? WeightSequence::double_exp(bound) : WeightSequence::odd_primes(bound);
  check(r, "star/" + kind, [&](Check& c) {
    auto rep  = verify_star(w, bound);
    c.verdict = rep.verdict;
    c.detail  = std::to_string(rep.multisets_checked) + " multisets";
    if (!rep.collisions.empty()) {
      c.witness = {{"lhs", rep.collisions.front().lhs}, {"rhs", rep.collisions.front().rhs}};
    }
  });
  check(r, "star/negative-control", [&](Check& c) {
    auto rep = verify_star(WeightSequence::explicit_list({1, 2, 3}), 3);
    bool hit = false;
    for (auto const& col : rep.collisions) {
      hit |= (col.lhs == std::vector<std::size_t>{1, 2} && col.rhs == std::vector<std::size_t>{3}) ||
             (col.lhs == std::vector<std::size_t>{3} && col.rhs == std::vector<std::size_t>{1, 2});
    }
    c.verdict = expect_failure(rep.verdict == Verdict::fail && hit);
    c.detail  = "w = (1, 2, 3) must collide as w1 + w2 = w3";
    c.witness = {{"collisions", rep.collisions.size()}};
  });
  check(r, "star-star", [&](Check& c) {
    auto const zr = verify_star_star(zz(bound), 7);
    auto const orr = verify_star_star(odd(std::max<std::size_t>(bound, 4)), 15);
    c.verdict      = combine(zr.verdict, orr.verdict);
    c.witness      = {{"integers_alpha_t", zr.alpha_t}, {"odd_naturals_alpha_t_for_15", orr.alpha_t}};
    if (orr.alpha_t != 3) {
      c.verdict = Verdict::fail;
    }
  });
}

// ---------------------------------------------------------------------------

void continuum(Report& r, Params& p) {
  std::size_t const count   = p.natural("masks", 20, 2, 64);
  std::size_t const horizon = p.natural("horizon", 12, 2, 24);
  std::size_t const dist    = p.natural("min_distance", std::max<std::size_t>(2, horizon / 3), 1, 24);
  check(r, "pairwise-distinct", [&](Check& c) {
    auto const masks = mask_family(count, horizon, dist);
    if (masks.size() < count) {
      c.verdict = Verdict::undetermined;
      c.detail  = "only " + std::to_string(masks.size()) + " masks at this distance";
      return;
    }
    auto const w         = WeightSequence::double_exp(horizon);
    std::size_t distinct = 0;
    std::size_t strong   = 0;
    std::size_t pairs    = 0;
    json witnesses       = json::array();
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = i + 1; j < masks.size(); ++j) {
        ++pairs;
        auto rep = distinguish_topologies(BaseKind::integers, w, masks[i], masks[j], horizon);
        bool ok  = rep.status == Distinction::distinct && !rep.witnesses.empty();
        for (auto const& wit : rep.witnesses) {
          ok &= wit.converges_in_own && wit.other == Decision::no;
        }
        distinct += ok;
        strong += ok && rep.strong;
        if (ok) {
          auto const& wit = rep.witnesses.front();
          witnesses.push_back({{"pair", {i, j}}, {"point", to_json(S1Point{0, Rational(w[wit.index])})},
                               {"index", wit.index}, {"in_second", wit.in_second}});
        }
      }
    }
    c.verdict = distinct == pairs ? Verdict::pass : Verdict::fail;
    c.detail  = std::to_string(distinct) + "/" + std::to_string(pairs) + " DISTINCT, " + std::to_string(strong) +
               " strong";
    json mask_list = json::array();
    for (auto const& m : masks) {
      mask_list.push_back(m);
    }
    c.witness = {{"masks", mask_list}, {"pairs", witnesses}};
  });
}

// ---------------------------------------------------------------------------

void good_corr(Report& r, Params& p) {
  std::size_t const length = p.natural("length", 12, 6, 20);
  auto record              = [](Check& c, GoodCorrReport const& g) {
    c.verdict = g.verdict;
    c.detail  = g.note;
    c.witness = {{"hypothesis_met", g.hypothesis_met},
                 {"product_limit", g.product_subsequence.limit},
                 {"subsequence", g.subsequence.indices},
                 {"limit", g.subsequence.limit}};
  };
  check(r, "discrete/zplus2", [&](Check& c) {
    std::vector<Element> seq;
    for (std::size_t n = 1; n <= length; ++n) {
      seq.push_back(tuple({Integer(n), 0}));
    }
    record(c, good_corr_discrete(Semigroup::zplus_k(2), tuple({1, 1}), seq, Side::right));
  });
  check(r, "one-point/n-infinity", [&](Check& c) {
    std::vector<Element> seq;
    for (std::size_t n = 1; n <= length; ++n) {
      seq.push_back(ext_nat(Integer(n)));
    }
    record(c, good_corr_one_point(ext_infinity(), seq, Side::left));
  });
  check(r, "sigma/integers", [&](Check& c) {
    auto const t = zz(length);
    std::vector<S1Point> seq;
    for (std::size_t n = 1; n <= length; ++n) {
      seq.push_back({0, Rational(t.weights()[n])});
    }
    record(c, good_corr_sigma(t, {0, 5}, seq, Side::right, length - 4));
  });
}

// ---------------------------------------------------------------------------

BoundedFunction random_c0(std::mt19937_64& rng, Natural spread) {
  std::uniform_int_distribution<int> val(-9, 9);
  std::uniform_int_distribution<Natural> pos(1, spread);
  std::map<Natural, Rational> mods;
  for (int i = 0, k = std::uniform_int_distribution<int>(0, 5)(rng); i < k; ++i) {
    mods[pos(rng)] = Rational(val(rng), std::uniform_int_distribution<int>(1, 4)(rng));
  }
  return BoundedFunction::c0_plus_const(std::move(mods), val(rng));
}

BoundedFunction sample_to(BoundedFunction const& f, Natural horizon) {
  std::vector<Rational> v;
  for (Natural n = 1; n <= horizon; ++n) {
    v.push_back(f(n));
  }
  return BoundedFunction::sampled(std::move(v));
}

void nmax_wap(Report& r, Params& p) {
  std::size_t const functions = p.natural("functions", 50, 1, 1000);
  std::size_t const pair_cnt  = p.natural("pairs", 50, 1, 1000);
  std::size_t const horizon   = p.natural("horizon", 200, 8, 2000);
  std::mt19937_64 rng(r.seed);
  auto const pairs = random_pair_family(pair_cnt, horizon, r.seed + 1);

  check(r, "c0-plus-const", [&](Check& c) {
    std::size_t certified = 0;
    for (std::size_t i = 0; i < functions; ++i) {
      auto const f = random_c0(rng, horizon / 8);
      auto v       = wap_test(f, pairs, r.jobs);
      auto sampled = wap_test(sample_to(f, horizon), pairs, r.jobs);
      bool ok      = v.status == WapStatus::wap_consistent && v.certified &&
                sampled.status == WapStatus::wap_consistent;
      certified += ok;
      if (!ok && c.verdict == Verdict::pass) {
        c.verdict = Verdict::fail;
        c.witness = {{"function", i}, {"status", std::string(to_string(v.status))},
                     {"sampled_status", std::string(to_string(sampled.status))}};
      }
    }
    c.detail = std::to_string(certified) + "/" + std::to_string(functions) + " functions WAP-consistent on " +
               std::to_string(pairs.size()) + " pairs";
  });
  check(r, "indicator-evens", [&](Check& c) {
    std::vector<LimitPair> eo{{LimitFunctional::progression(2, 0, horizon), LimitFunctional::progression(2, 1, horizon)}};
    std::vector<Rational> vals;
    for (Natural n = 1; n <= horizon; ++n) {
      vals.push_back(n % 2 == 0 ? 1 : 0);
    }
    auto v    = wap_test(BoundedFunction::sampled(vals), eo);
    bool ok   = v.status == WapStatus::not_wap && v.witness && v.witness->box == 0 && v.witness->diamond == 1;
    c.verdict = ok ? Verdict::pass : Verdict::fail;
    c.detail  = std::string(to_string(v.status));
    if (v.witness) {
      c.witness = {{"omega", "evens"}, {"upsilon", "odds"}, {"box", to_json(v.witness->box)},
                   {"diamond", to_json(v.witness->diamond)}};
    }
  });
  check(r, "arens-symmetry-and-collapse", [&](Check& c) {
    std::size_t determined = 0;
    for (std::size_t i = 0; i < functions; ++i) {
      Natural const period = std::uniform_int_distribution<Natural>(1, 3)(rng);
      std::vector<int> cycle;
      for (Natural k = 0; k < period; ++k) {
        cycle.push_back(std::uniform_int_distribution<int>(0, 2)(rng));
      }
      std::vector<Rational> vals;
      for (Natural n = 1; n <= horizon; ++n) {
        vals.push_back(n < horizon / 8 ? Rational(std::uniform_int_distribution<int>(-3, 3)(rng))
                                       : Rational(cycle[n % period]));
      }
      auto const f = BoundedFunction::sampled(vals);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto const& [omega, upsilon] = pairs[k];
        auto box                     = arens_box(omega, upsilon, f);
        auto mirrored                = arens_diamond(upsilon, omega, f);
        bool ok                      = box.has_value() == mirrored.has_value() && (!box || *box == *mirrored);
        if (box) {
          ++determined;
          ok &= eval_limit(upsilon, f) == box;
        }
        if (!ok && c.verdict == Verdict::pass) {
          c.verdict = Verdict::fail;
          c.witness = {{"function", i}, {"pair", k}};
        }
      }
    }
    c.detail = std::to_string(determined) + " determined box values matched";
  });
}

// ---------------------------------------------------------------------------

L1Vector random_a(std::mt19937_64& rng, Natural spread, int max_terms) {
  std::uniform_int_distribution<int> val(-5, 5);
  std::uniform_int_distribution<Natural> pos(1, spread);
  L1Vector a;
  for (int i = 0, k = std::uniform_int_distribution<int>(1, max_terms)(rng); i < k; ++i) {
    a.add(nat(pos(rng)), val(rng));
  }
  return a;
}

void unique_l1s(Report& r, Params& p) {
  std::size_t const trials = p.natural("trials", 1000, 1, 100000);
  std::size_t const s_max  = p.natural("s_max", 50, 1, 500);
  std::mt19937_64 rng(r.seed);
  auto const nmax = Semigroup::nat_max();

  check(r, "max-action-formula", [&](Check& c) {
    std::size_t compared = 0;
    for (int i = 0; i < 20; ++i) {
      auto const a = random_a(rng, s_max + 10, 8);
      for (Natural s = 1; s <= s_max; ++s) {
        ++compared;
        if (max_action_formula(s, a) != convolve(nmax, L1Vector::delta(nat(s)), a) && c.verdict == Verdict::pass) {
          c.verdict = Verdict::fail;
          c.witness = {{"s", s}, {"a", to_json(a)}};
        }
      }
    }
    c.detail = std::to_string(compared) + " (s, a) pairs";
  });
  check(r, "telescoping", [&](Check& c) {
    std::size_t held = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      auto const a = random_a(rng, 8, 4);
      BoundedFunction x;
      if (i % 2 == 0) {
        x = random_c0(rng, 10);
      } else {
        Rational const k = std::uniform_int_distribution<int>(-3, 3)(rng);
        std::map<Natural, Rational> mods;
        for (Natural n = 1; n <= 8; ++n) {
          mods[n] = k;
        }
        if (a.total() == 0) {
          mods[9] = std::uniform_int_distribution<int>(-3, 3)(rng);
        }
        x = BoundedFunction::c0_plus_const(std::move(mods), a.total() == 0 ? Rational(0) : k);
      }
      auto rep = telescoping_check(a, x, 12);
      held += rep.verdict == Verdict::pass;
      if (rep.verdict == Verdict::fail && c.verdict == Verdict::pass) {
        c.verdict = Verdict::fail;
        c.witness = {{"a", to_json(a)}, {"pairing", to_json(rep.pairing)}, {"limit", to_json(rep.limit)}};
      }
    }
    c.detail = "hypothesis held in " + std::to_string(held) + "/" + std::to_string(trials) +
               " trials; identity and limit exact in all of them";
  });
  check(r, "counterexample-x", [&](Check& c) {
    std::size_t applicable = 0;
    while (applicable < trials) {
      auto const a = random_a(rng, 12, 6);
      auto rep     = counterexample_x(a);
      if (rep.verdict == Verdict::not_applicable) {
        continue;
      }
      ++applicable;
      if (rep.verdict != Verdict::pass && c.verdict == Verdict::pass) {
        c.verdict = Verdict::fail;
        c.witness = {{"a", to_json(a)}, {"x", to_json(rep.x)}, {"s", rep.s}};
      }
    }
    auto ex   = counterexample_x(L1Vector::delta(nat(1)) + L1Vector::delta(nat(2)));
    c.witness = {{"example_a", "d1 + d2"},     {"x", to_json(ex.x)},
                 {"s", ex.s},                   {"pairing", to_json(ex.pairing)},
                 {"shifted_pairing", to_json(ex.shifted_pairing)}};
    c.detail = std::to_string(applicable) + " applicable a";
  });
}

// ---------------------------------------------------------------------------

void no_predual_identities(Report& r, Params& p) {
  std::size_t const max_point = p.natural("max_point", 5, 1, 6);
  std::size_t const max_value = p.natural("max_value", 6, 1, 7);
  std::size_t const trials    = p.natural("trials", 1000, 1, 100000);
  std::size_t const n_max     = p.natural("n_max", 50, 2, 1000);
  std::mt19937_64 rng(r.seed);
  auto const universe = all_partial_maps(max_point, max_value);
  auto pick           = [&] { return universe[std::uniform_int_distribution<std::size_t>(0, universe.size() - 1)(rng)]; };
  auto fresh_point    = [&](PartialMap const& f, Natural from) {
    while (f(from) != 0) {
      ++from;
    }
    return from;
  };

  check(r, "right-translation-lemma", [&](Check& c) {
    auto rep  = verify_lemma_exhaustive(max_point, max_value, r.jobs);
    c.verdict = rep.verdict;
    c.detail  = std::to_string(rep.specs) + " (f, F') pairs against " + std::to_string(rep.universe) + " maps h";
    if (rep.failing) {
      c.witness = {{"f", to_json(rep.failing->f)}, {"h", to_json(*rep.counterexample)}};
    }
  });
  check(r, "fn-p-equals-f", [&](Check& c) {
    std::size_t compositions = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      auto const f     = pick();
      Natural const n0 = fresh_point(f, std::uniform_int_distribution<Natural>(1, max_point + 3)(rng));
      auto rep         = verify_fnp(f, n0, 1, n_max);
      compositions += rep.checked;
      if (rep.verdict != Verdict::pass && c.verdict == Verdict::pass) {
        c.verdict = Verdict::fail;
        c.witness = {{"f", to_json(f)}, {"n0", n0}, {"n", rep.failing_n.value_or(0)}};
      }
    }
    c.detail = std::to_string(compositions) + " compositions f_n p";
  });
  check(r, "annihilation", [&](Check& c) {
    std::size_t cases = 0;
    std::size_t exempt = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      auto const f     = pick();
      Natural const n0 = fresh_point(f, std::uniform_int_distribution<Natural>(1, max_point + 3)(rng));
      // k0 = n0 in every fourth case, else a fresh point of its own.
      Natural const k0 = i % 4 == 0 ? n0 : fresh_point(f, n0 + 1);
      Natural gv       = f.max_value() + 1 + std::uniform_int_distribution<Natural>(0, 5)(rng);
      auto pairs       = f.pairs();
      pairs.emplace_back(k0, gv);
      PartialMap const g(std::move(pairs));
      auto rep = verify_annihilation(f, n0, g, k0, 1, n_max);
      ++cases;
      exempt += !rep.nonzero_at.empty();
      bool ok = rep.verdict == Verdict::pass &&
                (k0 == n0 ? rep.nonzero_at == std::vector<Natural>{gv} : rep.nonzero_at.empty());
      if (!ok && c.verdict == Verdict::pass) {
        c.verdict = Verdict::fail;
        c.witness = {{"f", to_json(f)}, {"g", to_json(g)}, {"k0", k0}, {"n0", n0}, {"detail", rep.detail}};
      }
    }
    c.detail = std::to_string(cases) + " cases, " + std::to_string(exempt) + " with the single predicted n";
  });
  check(r, "negative-controls", [&](Check& c) {
    OpenSetSpec const spec{PartialMap{{1, 2}}, {3}};
    bool const g_control =
        verify_right_translation(spec, PartialMap{{1, 1}}, universe).verdict == Verdict::fail;
    bool const p_control =
        verify_fnp(spec.f, 3, PartialMap::identity_on({1, 3}), 4, n_max).verdict == Verdict::fail;
    // h1 widened to {k0, n0}: f_n h1 now sees n0, so h2 f_n h1 survives at n = g(k0).
    PartialMap const g{{1, 2}, {4, 7}};
    PartialMap const h1 = PartialMap::identity_on({4, 3});
    PartialMap const h2{{7, 7}};
    bool h_control = false;
    for (Natural n = 3; n <= n_max; ++n) {
      if (auto fn = build_fn(spec.f, 3, n); fn.map) {
        h_control |= !(h2 * *fn.map * h1).is_zero();
      }
    }
    c.verdict = expect_failure(g_control && p_control && h_control);
    c.witness = {{"g_without_fresh_point_fails", g_control},
                 {"p_widened_to_n0_fails", p_control},
                 {"h1_widened_to_n0_fails", h_control}};
  });
  check(r, "proof-skeleton", [&](Check& c) {
    json steps = json::array();
    Verdict all = Verdict::pass;
    std::map<std::string, std::string> const roles{
        {"right-translation-lemma", "{h : hg = f} is the open set O(f, F'); right translation is continuous"},
        {"fn-p-equals-f", "f_n p = f for every large n, so f_n p converges to f"},
        {"annihilation", "h2 f_n h1 = 0 for all but one n while h2 g h1 != 0, separating the limits"},
        {"negative-controls", "each identity fails once its construction is mutated"}};
    for (auto const& prior : r.checks) {
      if (auto it = roles.find(prior.id); it != roles.end()) {
        steps.push_back({{"identity", prior.id}, {"verdict", to_json(prior.verdict)}, {"role", it->second}});
        all = combine(all, prior.verdict);
      }
    }
    c.verdict = all;
    c.witness = {{"steps", steps}};
    c.detail  = "only the finite identities are machine-checked; the topological argument is not";
  });
}

// ---------------------------------------------------------------------------

Semigroup rees_rows(std::size_t rows, std::size_t cols) {
  ReesData d;
  d.group.type = ReesGroup::Type::integers;
  d.rows       = rows;
  d.cols       = cols;
  d.sandwich.assign(cols, std::vector<std::vector<Integer>>(rows, {0}));
  return Semigroup::rees(d);
}

json translation_witness(TranslationReport const& rep) {
  if (!rep.witness) {
    return {{"largest_fibre", rep.largest_fibre}, {"window_size", rep.window_size}};
  }
  json pre = json::array();
  for (std::size_t i = 0; i < rep.witness->preimages.size() && i < 5; ++i) {
    pre.push_back(to_json(rep.witness->preimages[i]));
  }
  return {{"translator", to_json(rep.witness->translator)},
          {"side", std::string(to_string(rep.witness->side))},
          {"target", to_json(rep.witness->target)},
          {"preimage_count", rep.witness->preimages.size()},
          {"first_preimages", pre}};
}

void rees_cancellativity(Report& r, Params& p) {
  std::size_t const index = p.natural("index_size", 100, 2, 400);
  std::size_t const rank  = p.natural("rank", 3, 1, 6);
  check(r, "z3-sandwich-product", [&](Check& c) {
    ReesData d;
    d.group.type  = ReesGroup::Type::cyclic;
    d.group.order = 3;
    d.rows        = 2;
    d.cols        = 1;
    d.sandwich    = {{{0}, {0}}};
    auto const s  = Semigroup::rees(d);
    auto prod     = s.product(rees({1}, 1, 1), rees({2}, 2, 1));
    c.verdict     = prod == rees({0}, 1, 1) ? Verdict::pass : Verdict::fail;
    c.witness     = {{"product", to_json(prod)}};
  });
  check(r, "rows-infinite/weak-cancellativity-fails", [&](Check& c) {
    auto rep  = is_weakly_cancellative_window(rees_rows(index, 1), 1, index, r.jobs);
    c.verdict = expect_failure(rep.verdict == Verdict::fail && rep.witness->preimages.size() >= index);
    c.witness = translation_witness(rep);
  });
  check(r, "cols-infinite/weak-cancellativity-fails", [&](Check& c) {
    auto rep  = is_weakly_cancellative_window(rees_rows(1, index), 1, index, r.jobs);
    c.verdict = expect_failure(rep.verdict == Verdict::fail && rep.witness->preimages.size() >= index);
    c.witness = translation_witness(rep);
  });
  check(r, "finite-index/weakly-cancellative", [&](Check& c) {
    auto rep  = is_weakly_cancellative_window(rees_rows(2, 2), rank, 50, r.jobs);
    c.verdict = rep.verdict;
    c.witness = translation_witness(rep);
  });
}

// ---------------------------------------------------------------------------

void structural(Report& r, Params& p) {
  std::size_t const rank      = p.natural("rank", 12, 2, 16);
  std::size_t const free_rank = p.natural("free_rank", rank, 2, 14);
  std::size_t const free3     = p.natural("free3_rank", 7, 2, 9);
  std::size_t const blowup    = p.natural("blowup_preimages", 100, 2, 1000);
  std::size_t const assoc     = p.natural("associativity_rank", 4, 1, 6);

  struct Instance {
    std::string id;
    Semigroup s;
    std::size_t rank;
    std::vector<Element> targets;
  };
  std::vector<Instance> const cancellative{
      {"zplus1", Semigroup::zplus_k(1), rank, {nat(0), nat(3), nat(7)}},
      {"zplus2", Semigroup::zplus_k(2), rank, {tuple({2, 3}), tuple({0, 4})}},
      {"zplus3", Semigroup::zplus_k(3), rank, {tuple({1, 1, 1}), tuple({2, 0, 1})}},
      {"free2", Semigroup::free(2), free_rank, {word("a"), word("abab"), word("bba")}},
      {"free3", Semigroup::free(3), free3, {word("c"), word("abc"), word("cab")}},
  };
  for (auto const& inst : cancellative) {
    check(r, inst.id + "/cancellative", [&](Check& c) {
      auto rep  = is_cancellative_window(inst.s, inst.rank, r.jobs);
      c.verdict = rep.verdict;
      c.detail  = "window rank " + std::to_string(inst.rank) + ", " + std::to_string(rep.window_size) + " elements";
      c.witness = translation_witness(rep);
    });
    check(r, inst.id + "/finitely-left-divisible", [&](Check& c) {
      json list = json::array();
      for (auto const& rep : left_divisor_scan(inst.s, inst.targets, inst.rank, r.jobs)) {
        c.verdict = combine(c.verdict, rep.verdict);
        list.push_back({{"target", to_json(rep.target)}, {"divisors", rep.divisors.size()},
                        {"verdict", to_json(rep.verdict)}});
      }
      c.witness = {{"targets", list}};
    });
  }
  check(r, "nmax/weakly-cancellative", [&](Check& c) {
    auto rep  = is_weakly_cancellative_window(Semigroup::nat_max(), rank, 50, r.jobs);
    c.verdict = rep.verdict;
    c.witness = translation_witness(rep);
  });
  check(r, "nmax/not-cancellative", [&](Check& c) {
    auto rep  = is_cancellative_window(Semigroup::nat_max(), rank, r.jobs);
    c.verdict = expect_failure(rep.verdict == Verdict::fail);
    c.witness = translation_witness(rep);
  });
  check(r, "zplus-times-z/not-finitely-left-divisible", [&](Check& c) {
    auto rep  = is_finitely_left_divisible_window(Semigroup::zplus_times_z(), tuple({0, 0}), rank);
    c.verdict = expect_failure(rep.verdict == Verdict::fail);
    c.witness = {{"divisors", rep.divisors.size()}, {"at_comparison_rank", rep.count_at_comparison_rank}};
  });
  check(r, "n-infinity/weak-cancellativity-fails", [&](Check& c) {
    auto rep  = is_weakly_cancellative_window(Semigroup::nat_infty(), blowup - 1, blowup, r.jobs);
    c.verdict = expect_failure(rep.verdict == Verdict::fail && rep.witness->preimages.size() >= blowup);
    c.witness = translation_witness(rep);
  });
  check(r, "length", [&](Check& c) {
    auto a = length(Semigroup::free(2), word("aba"));
    auto b = length(Semigroup::zplus_k(2), tuple({2, 3}));
    auto z = length(Semigroup::zplus_k(2), tuple({0, 0}));
    bool ok = a.status == Decision::yes && a.length == 3 && b.status == Decision::yes && b.length == 5 &&
              z.status == Decision::no;
    c.verdict = ok ? Verdict::pass : Verdict::fail;
    c.witness = {{"free2:aba", a.length}, {"zplus2:(2,3)", b.length}, {"zplus2:(0,0)", to_json(z.status)}};
  });
  check(r, "associativity", [&](Check& c) {
    std::vector<std::pair<std::string, Semigroup>> const all{
        {"zplus2", Semigroup::zplus_k(2)},  {"free2", Semigroup::free(2)},
        {"nat_max", Semigroup::nat_max()},  {"nat_infty", Semigroup::nat_infty()},
        {"zplus_times_z", Semigroup::zplus_times_z()}, {"rees_2x2", rees_rows(2, 2)},
        {"partial_maps", Semigroup::partial_maps()}};
    json per = json::object();
    for (auto const& [name, s] : all) {
      std::optional<std::vector<Element>> bad;
      auto v    = check_associativity(s, assoc, &bad);
      c.verdict = combine(c.verdict, v);
      per[name] = to_json(v);
    }
    c.witness = per;
    c.detail  = "every triple of the rank " + std::to_string(assoc) + " window";
  });
}

using SuiteFn = void (*)(Report&, Params&);

std::vector<std::pair<std::string, SuiteFn>> const& registry() {
  static std::vector<std::pair<std::string, SuiteFn>> const r{
      {"lemma-technical", lemma_technical},
      {"gen-con-one", gen_con_one},
      {"gen-con-two", gen_con_two},
      {"star-condition", star_condition},
      {"remark4-continuum", continuum},
      {"good-corr", good_corr},
      {"nmax-wap", nmax_wap},
      {"unique-l1s", unique_l1s},
      {"section4-no-predual", no_predual_identities},
      {"rees-cancellativity", rees_cancellativity},
      {"structural", structural},
  };
  return r;
}

}  // namespace

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names = [] {
    std::vector<std::string> out;
    for (auto const& [name, fn] : registry()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

Report run_suite(std::string const& name, json const& params, std::uint64_t seed, std::size_t jobs) {
  SuiteFn fn = nullptr;
  for (auto const& [n, f] : registry()) {
    if (n == name) {
      fn = f;
    }
  }
  if (!fn) {
    throw UnknownSuite("unknown suite \"" + name + "\"");
  }
  Report r;
  r.suite = name;
  r.seed  = seed;
  r.jobs  = std::max<std::size_t>(1, jobs);
  Params p(params, r.params);
  auto const t0 = Clock::now();
  fn(r, p);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace semipredual
