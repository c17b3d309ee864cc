#include "semipredual/wap.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "semipredual/parallel.hpp"

namespace semipredual {

LimitFunctional LimitFunctional::progression(Natural modulus, Natural residue, Natural horizon) {
  if (modulus == 0 || residue >= modulus) {
    throw PreconditionError("progression needs 0 <= residue < modulus");
  }
  LimitFunctional phi;
  phi.horizon = horizon;
  for (Natural n = 1; n <= horizon; ++n) {
    if (n % modulus == residue) {
      phi.along.push_back(n);
    }
  }
  return phi;
}

LimitFunctional LimitFunctional::from_list(std::vector<Natural> along, Natural horizon) {
  for (std::size_t i = 0; i < along.size(); ++i) {
    if (along[i] == 0 || along[i] > horizon || (i > 0 && along[i - 1] >= along[i])) {
      throw PreconditionError("limit functional needs a strictly increasing list inside [1, horizon]");
    }
  }
  return {std::move(along), horizon};
}

std::vector<Natural> LimitFunctional::window(Natural lo, Natural hi) const {
  std::vector<Natural> out;
  for (Natural n : along) {
    if (n > lo && n <= hi) {
      out.push_back(n);
    }
  }
  return out;
}

std::string to_string(LimitFunctional const& phi) {
  std::string out = "[";
  for (std::size_t i = 0; i < phi.along.size() && i < 6; ++i) {
    out += (i ? "," : "") + std::to_string(phi.along[i]);
  }
  if (phi.along.size() > 6) {
    out += ",...";
  }
  return out + "] to " + std::to_string(phi.horizon);
}

namespace {

void require_samples(BoundedFunction const& f, Natural horizon) {
  if (!f.is_c0_plus_const() && f.horizon() < horizon) {
    throw HorizonExceeded("function sampled to " + std::to_string(f.horizon()) + ", limit needs " +
                          std::to_string(horizon));
  }
}

template <typename Value>
std::optional<Rational> stabilised(std::vector<Natural> const& window, Value&& value) {
  if (window.size() < 2) {
    return std::nullopt;
  }
  std::optional<Rational> first = value(window.front());
  if (!first) {
    return std::nullopt;
  }
  for (std::size_t i = 1; i < window.size(); ++i) {
    auto v = value(window[i]);
    if (!v || *v != *first) {
      return std::nullopt;
    }
  }
  return first;
}

std::optional<Rational> iterated(LimitFunctional const& outer, LimitFunctional const& inner,
                                 BoundedFunction const& f) {
  if (f.is_c0_plus_const()) {
    return f.beta();
  }
  Natural const h = std::min(outer.horizon, inner.horizon);
  require_samples(f, h);
  auto const inner_window = inner.window(h / 2, h);
  return stabilised(outer.window(h / 4, h / 2), [&](Natural s) {
    return stabilised(inner_window, [&](Natural t) -> std::optional<Rational> { return f(std::max(s, t)); });
  });
}

}  // namespace

std::optional<Rational> eval_limit(LimitFunctional const& phi, BoundedFunction const& f) {
  if (f.is_c0_plus_const()) {
    return f.beta();
  }
  require_samples(f, phi.horizon);
  return stabilised(phi.window(phi.horizon / 2, phi.horizon),
                    [&](Natural n) -> std::optional<Rational> { return f(n); });
}

std::optional<Rational> arens_box(LimitFunctional const& omega, LimitFunctional const& upsilon,
                                  BoundedFunction const& f) {
  return iterated(omega, upsilon, f);
}

std::optional<Rational> arens_diamond(LimitFunctional const& omega, LimitFunctional const& upsilon,
                                      BoundedFunction const& f) {
  return iterated(upsilon, omega, f);
}

std::string_view to_string(WapStatus s) {
  switch (s) {
    case WapStatus::wap_consistent: return "WAP-consistent";
    case WapStatus::not_wap: return "NOT-WAP";
    case WapStatus::undetermined: return "undetermined";
  }
  return "?";
}

WapVerdict wap_test(BoundedFunction const& f, std::vector<LimitPair> const& pairs, std::size_t jobs) {
  WapVerdict v;
  std::vector<std::optional<std::pair<Rational, Rational>>> values(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    auto box     = arens_box(pairs[i].first, pairs[i].second, f);
    auto diamond = arens_diamond(pairs[i].first, pairs[i].second, f);
    if (box && diamond) {
      values[i] = std::pair{*box, *diamond};
    }
  });
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) {
      continue;
    }
    ++v.determined_pairs;
    if (values[i]->first != values[i]->second && !v.witness) {
      v.witness = WapWitness{i, values[i]->first, values[i]->second};
    }
  }
  if (v.witness) {
    v.status = WapStatus::not_wap;
  } else if (f.is_c0_plus_const()) {
    v.status    = WapStatus::wap_consistent;
    v.certified = true;
  } else if (v.determined_pairs > 0) {
    v.status = WapStatus::wap_consistent;
  }
  return v;
}

std::vector<LimitPair> random_pair_family(std::size_t count, Natural horizon, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto one = [&]() {
    while (true) {
      LimitFunctional phi;
      if (std::bernoulli_distribution(0.5)(rng)) {
        Natural const m = std::uniform_int_distribution<Natural>(1, 4)(rng);
        phi = LimitFunctional::progression(m, std::uniform_int_distribution<Natural>(0, m - 1)(rng), horizon);
      } else {
        phi.horizon = horizon;
        std::bernoulli_distribution keep(0.5);
        for (Natural n = 1; n <= horizon; ++n) {
          if (keep(rng)) {
            phi.along.push_back(n);
          }
        }
      }
      if (phi.window(horizon / 4, horizon / 2).size() >= 2 && phi.window(horizon / 2, horizon).size() >= 2) {
        return phi;
      }
    }
  };
  std::vector<LimitPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto omega = one();
    out.emplace_back(std::move(omega), one());
  }
  return out;
}

namespace {

std::map<Natural, Rational> by_index(L1Vector const& a) {
  std::map<Natural, Rational> out;
  for (auto const& [s, c] : a.terms()) {
    out.emplace(as_natural(s), c);
  }
  return out;
}

Rational dot(L1Vector const& x, L1Vector const& a) {
  Rational total = 0;
  for (auto const& [s, c] : x.terms()) {
    total += c * a.coeff(s);
  }
  return total;
}

}  // namespace

TelescopingReport telescoping_check(L1Vector const& a, BoundedFunction const& x, Natural s_max) {
  if (!x.is_c0_plus_const()) {
    throw PreconditionError("telescoping_check needs x in c0 + C1");
  }
  TelescopingReport r;
  r.pairing        = pairing(a, x);
  auto const coeff = by_index(a);
  for (Natural s = 1; s <= s_max; ++s) {
    if (pairing(max_action_formula(s, a), x) != r.pairing) {
      r.hypothesis_fails_at = s;
      r.verdict             = Verdict::not_applicable;
      return r;
    }
  }
  Rational weighted = 0;
  Rational plain    = 0;
  auto next         = coeff.begin();
  for (Natural s = 1; s <= s_max; ++s) {
    for (; next != coeff.end() && next->first <= s; ++next) {
      weighted += next->second * x(next->first);
      plain += next->second;
    }
    if (weighted != x(s) * plain) {
      r.identity_fails_at = s;
      r.verdict           = Verdict::fail;
      return r;
    }
  }
  Natural const support_end = coeff.empty() ? 0 : coeff.rbegin()->first;
  r.limit_reached           = s_max >= std::max(support_end, x.tail_start());
  r.limit                   = x.beta() * a.total();
  if (r.limit_reached && r.pairing != r.limit) {
    r.verdict = Verdict::fail;
  }
  return r;
}

CounterexampleX counterexample_x(L1Vector const& a) {
  CounterexampleX r;
  auto const coeff = by_index(a);
  if (coeff.empty()) {
    return r;
  }
  r.s0 = coeff.begin()->first;
  if (coeff.size() == 1) {
    r.single_term = true;
    r.s           = r.s0 + 1;
    r.x           = L1Vector::delta(nat(r.s));
  } else {
    if (a.total() == 0) {
      return r;
    }
    r.s1           = std::next(coeff.begin())->first;
    Rational head  = 0;
    auto next      = coeff.begin();
    for (r.s = 1;; ++r.s) {
      for (; next != coeff.end() && next->first <= r.s; ++next) {
        head += next->second;
      }
      if (r.s > *r.s1 && !coeff.count(r.s) && head != 0) {
        break;
      }
    }
    r.x = L1Vector::delta(nat(*r.s1), coeff.at(r.s0)) + L1Vector::delta(nat(r.s0), -coeff.at(*r.s1)) +
          L1Vector::delta(nat(r.s));
  }
  for (auto const& [n, c] : coeff) {
    if (n <= r.s) {
      r.partial_sum += c;
    }
  }
  r.pairing         = dot(r.x, a);
  r.shifted_pairing = dot(r.x, max_action_formula(r.s, a));
  bool const ok     = r.pairing == 0 && r.shifted_pairing == r.partial_sum && r.partial_sum != 0;
  r.verdict         = ok ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace semipredual
