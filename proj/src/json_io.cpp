#include "semipredual/json_io.hpp"

namespace semipredual {

namespace {

template <typename T>
T field(json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw JsonInputError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (json::exception const& e) {
    throw JsonInputError(std::string("field \"") + key + "\": " + e.what());
  }
}

std::size_t natural_from_json(json const& j) {
  if (!j.is_number_unsigned()) {
    throw JsonInputError("expected a non-negative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> index_list(json const& j) {
  if (!j.is_array()) {
    throw JsonInputError("expected an array of indices");
  }
  std::vector<std::size_t> out;
  for (auto const& x : j) {
    out.push_back(natural_from_json(x));
  }
  return out;
}

}  // namespace

Rational rational_from_json(json const& j) {
  try {
    if (j.is_string()) {
      return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
      return Rational(j.get<long long>());
    }
  } catch (std::invalid_argument const& e) {
    throw JsonInputError(e.what());
  }
  throw JsonInputError("expected an exact rational, got " + j.dump());
}

Integer integer_from_json(json const& j) {
  Rational const r = rational_from_json(j);
  if (!is_integral(r)) {
    throw JsonInputError("expected an integer, got " + j.dump());
  }
  return numerator_of(r);
}

json to_json(Verdict v) { return std::string(to_string(v)); }
json to_json(Decision d) { return std::string(to_string(d)); }
json to_json(Rational const& r) { return to_string(r); }
json to_json(Integer const& n) { return to_string(n); }

json to_json(Element const& e) {
  return std::visit(
      [](auto const& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TupleElement>) {
          json out = json::array();
          for (auto const& c : x.coords) {
            out.push_back(to_string(c));
          }
          return out;
        } else if constexpr (std::is_same_v<T, ExtendedNatural>) {
          return x.infinite ? json("infinity") : json(to_string(x.value));
        } else if constexpr (std::is_same_v<T, ReesElement>) {
          if (x.zero) {
            return {{"zero", true}};
          }
          json entry = json::array();
          for (auto const& c : x.entry) {
            entry.push_back(to_string(c));
          }
          return {{"entry", entry}, {"row", x.row}, {"col", x.col}};
        } else if constexpr (std::is_same_v<T, PartialMap>) {
          return to_json(x);
        } else {
          return to_string(Element(x));
        }
      },
      e);
}

json to_json(S1Point const& p) { return {{"a", to_string(p.a)}, {"s", to_string(p.s)}}; }

json to_json(BasicNbhd const& u) { return {{"a", to_string(u.a)}, {"s", to_string(u.s)}, {"alpha", u.alpha}}; }

json to_json(DyadicPoint const& p) { return {{"exponents", p.exponents}, {"value", to_string(p.value())}}; }

json to_json(PartialMap const& f) {
  json pairs = json::array();
  for (auto const& [n, v] : f.pairs()) {
    pairs.push_back({n, v});
  }
  return {{"pairs", pairs}};
}

json to_json(L1Vector const& a) {
  json terms = json::array();
  for (auto const& [s, c] : a.terms()) {
    terms.push_back({to_json(s), to_string(c)});
  }
  return terms;
}

json to_json(LimitFunctional const& phi) {
  return {{"along", phi.along}, {"horizon", phi.horizon}};
}

json to_json(ConvergenceCertificate const& c) {
  json out{{"verdict", to_json(c.verdict)}, {"limit", to_json(c.limit)}, {"alpha_max", c.alpha_max}};
  json thresholds = json::object();
  for (auto const& [alpha, n] : c.thresholds) {
    thresholds[std::to_string(alpha)] = n;
  }
  out["thresholds"] = thresholds;
  json witnesses    = json::array();
  for (auto const& w : c.witnesses) {
    witnesses.push_back({{"member", to_json(w.status)}, {"indices", w.indices}});
  }
  out["witnesses"] = witnesses;
  if (c.divergence) {
    out["divergence"] = {{"alpha", c.divergence->first}, {"from_term", c.divergence->second}};
  }
  return out;
}

json to_json(Representation const& r) { return {{"status", to_json(r.status)}, {"indices", r.indices}}; }

json to_json(Membership const& m) {
  return {{"member", to_json(m.status)}, {"k", m.k}, {"indices", m.indices}};
}

json to_json(TopologyInstance const& t) {
  return {{"base", std::string(to_string(t.base()))},
          {"weights", {{"kind", std::string(to_string(t.weights().kind()))},
                       {"bound", t.weights().index_bound()}}},
          {"mask", t.mask()}};
}

S1Point s1point_from_json(json const& j) {
  if (j.is_array() && j.size() == 2) {
    return {integer_from_json(j[0]), rational_from_json(j[1])};
  }
  if (!j.is_object() || !j.contains("a") || !j.contains("s")) {
    throw JsonInputError("a point needs \"a\" and \"s\"");
  }
  return {integer_from_json(j["a"]), rational_from_json(j["s"])};
}

BasicNbhd nbhd_from_json(json const& j) {
  S1Point const c = s1point_from_json(j);
  std::size_t const alpha = j.is_object() && j.contains("alpha") ? natural_from_json(j["alpha"]) : 1;
  if (alpha < 1) {
    throw JsonInputError("alpha must be >= 1");
  }
  return {c.a, c.s, alpha};
}

PartialMap partial_map_from_json(json const& j) {
  auto const raw = j.is_array() ? j : field<json>(j, "pairs");
  std::vector<PartialMap::Pair> pairs;
  for (auto const& p : raw) {
    if (!p.is_array() || p.size() != 2) {
      throw JsonInputError("partial map pairs are [point, value]");
    }
    pairs.emplace_back(natural_from_json(p[0]), natural_from_json(p[1]));
  }
  try {
    return PartialMap(std::move(pairs));
  } catch (PreconditionError const& e) {
    throw JsonInputError(e.what());
  }
}

WeightSequence weights_from_json(json const& j) {
  auto const kind = field<std::string>(j, "kind");
  if (kind == "explicit") {
    std::vector<Integer> values;
    for (auto const& v : field<json>(j, "values")) {
      values.push_back(integer_from_json(v));
    }
    return WeightSequence::explicit_list(std::move(values));
  }
  std::size_t const bound = j.contains("bound") ? natural_from_json(j["bound"]) : 12;
  if (kind == "double_exp") {
    return WeightSequence::double_exp(bound);
  }
  if (kind == "odd_primes") {
    return WeightSequence::odd_primes(bound);
  }
  throw JsonInputError("unknown weight kind \"" + kind + "\"");
}

TopologyInstance topology_from_json(json const& j) {
  auto const name = j.is_object() && j.contains("base") ? j["base"].get<std::string>() : std::string("integers");
  BaseKind base;
  if (name == "integers") {
    base = BaseKind::integers;
  } else if (name == "zplus") {
    base = BaseKind::zplus;
  } else if (name == "odd_naturals") {
    base = BaseKind::odd_naturals;
  } else {
    throw JsonInputError("unknown base \"" + name + "\"");
  }
  WeightSequence weights = j.is_object() && j.contains("weights")
                               ? weights_from_json(j["weights"])
                               : (base == BaseKind::odd_naturals ? WeightSequence::odd_primes(12)
                                                                 : WeightSequence::double_exp(12));
  if (j.is_object() && j.contains("mask")) {
    return TopologyInstance(base, std::move(weights), index_list(j["mask"]));
  }
  return TopologyInstance(base, std::move(weights));
}

BoundedFunction function_from_json(json const& j) {
  auto const tag = field<std::string>(j, "tag");
  if (tag == "c0_plus_const") {
    std::map<Natural, Rational> mods;
    if (j.contains("modifications")) {
      for (auto const& p : j["modifications"]) {
        if (!p.is_array() || p.size() != 2) {
          throw JsonInputError("modifications are [n, value] pairs");
        }
        mods[natural_from_json(p[0])] = rational_from_json(p[1]);
      }
    }
    return BoundedFunction::c0_plus_const(std::move(mods), j.contains("beta") ? rational_from_json(j["beta"]) : 0);
  }
  if (tag == "sampled") {
    std::vector<Rational> values;
    for (auto const& v : field<json>(j, "values")) {
      values.push_back(rational_from_json(v));
    }
    return BoundedFunction::sampled(std::move(values));
  }
  if (tag == "indicator_evens") {
    std::size_t const h = natural_from_json(field<json>(j, "horizon"));
    std::vector<Rational> values;
    for (std::size_t n = 1; n <= h; ++n) {
      values.push_back(n % 2 == 0 ? 1 : 0);
    }
    return BoundedFunction::sampled(std::move(values));
  }
  throw JsonInputError("unknown function tag \"" + tag + "\"");
}

LimitFunctional limit_from_json(json const& j) {
  Natural const h = natural_from_json(field<json>(j, "horizon"));
  try {
    if (j.contains("along")) {
      return LimitFunctional::from_list(index_list(j["along"]), h);
    }
    return LimitFunctional::progression(natural_from_json(field<json>(j, "modulus")),
                                        natural_from_json(field<json>(j, "residue")), h);
  } catch (PreconditionError const& e) {
    throw JsonInputError(e.what());
  }
}

}  // namespace semipredual
