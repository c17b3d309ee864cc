#pragma once

// JSON encodings. Integers and rationals travel as decimal strings so that
// big values survive; plain JSON numbers are accepted on input.

#include <json.hpp>

#include "semipredual/dyadic.hpp"
#include "semipredual/l1.hpp"
#include "semipredual/no_predual.hpp"
#include "semipredual/semigroup.hpp"
#include "semipredual/topology.hpp"
#include "semipredual/wap.hpp"

namespace semipredual {

using json = nlohmann::json;

/// Thrown for structurally invalid input documents.
class JsonInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational rational_from_json(json const& j);
Integer integer_from_json(json const& j);

json to_json(Verdict v);
json to_json(Decision d);
json to_json(Rational const& r);
json to_json(Integer const& n);
json to_json(Element const& e);
json to_json(S1Point const& p);
json to_json(BasicNbhd const& u);
json to_json(DyadicPoint const& p);
json to_json(PartialMap const& f);
json to_json(L1Vector const& a);
json to_json(LimitFunctional const& phi);
json to_json(ConvergenceCertificate const& c);
json to_json(Representation const& r);
json to_json(Membership const& m);
json to_json(TopologyInstance const& t);

S1Point s1point_from_json(json const& j);       // {"a": 0, "s": "20"} or [0, "20"]
BasicNbhd nbhd_from_json(json const& j);        // {"a": 2, "s": "0", "alpha": 1}
PartialMap partial_map_from_json(json const& j);  // {"pairs": [[1, 2], ...]}
/// {"kind": "double_exp" | "odd_primes", "bound": N} or {"kind": "explicit", "values": [...]}.
WeightSequence weights_from_json(json const& j);
/// {"base": "integers" | "zplus" | "odd_naturals", "weights": {...}, "mask": [...]};
/// weights default to double_exp (odd_primes for odd_naturals) with bound 12.
TopologyInstance topology_from_json(json const& j);
/// {"tag": "c0_plus_const", "modifications": [[n, "v"], ...], "beta": "b"},
/// {"tag": "sampled", "values": [...]}, or {"tag": "indicator_evens", "horizon": H}.
BoundedFunction function_from_json(json const& j);
/// {"along": [...], "horizon": H} or {"modulus": m, "residue": r, "horizon": H}.
LimitFunctional limit_from_json(json const& j);

}  // namespace semipredual
