#include "semipredual/topology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "semipredual/parallel.hpp"

namespace semipredual {

namespace mp = boost::multiprecision;

std::string_view to_string(BaseKind base) {
  switch (base) {
    case BaseKind::zplus:
      return "zplus";
    case BaseKind::integers:
      return "integers";
    case BaseKind::odd_naturals:
      return "odd_naturals";
  }
  return "?";
}

std::string_view to_string(WeightSequence::Kind kind) {
  switch (kind) {
    case WeightSequence::Kind::double_exp:
      return "double_exp";
    case WeightSequence::Kind::odd_primes:
      return "odd_primes";
    case WeightSequence::Kind::explicit_list:
      return "explicit";
  }
  return "?";
}

WeightSequence WeightSequence::double_exp(std::size_t index_bound) {
  if (index_bound > 24) {
    throw PreconditionError("double_exp index_bound above 24 needs more than 2^24-bit weights");
  }
  WeightSequence w;
  w.kind_ = Kind::double_exp;
  for (std::size_t n = 1; n <= index_bound; ++n) {
    w.values_.push_back(pow2(std::uint64_t{1} << n));
  }
  return w;
}

WeightSequence WeightSequence::odd_primes(std::size_t index_bound) {
  WeightSequence w;
  w.kind_ = Kind::odd_primes;
  for (std::uint64_t candidate = 3; w.values_.size() < index_bound; candidate += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= candidate; d += 2) {
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      w.values_.emplace_back(candidate);
    }
  }
  return w;
}

WeightSequence WeightSequence::explicit_list(std::vector<Integer> weights) {
  WeightSequence w;
  w.kind_   = Kind::explicit_list;
  w.values_ = std::move(weights);
  return w;
}

Integer const& WeightSequence::operator[](std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw HorizonExceeded("weight index " + std::to_string(n) + " outside 1.." + std::to_string(values_.size()));
  }
  return values_[n - 1];
}

std::string to_string(S1Point const& p) {
  return "(" + to_string(p.a) + ", " + to_string(p.s) + ")";
}

std::string to_string(BasicNbhd const& u) {
  return "U(" + to_string(u.a) + ", " + to_string(u.s) + ", " + std::to_string(u.alpha) + ")";
}

TopologyInstance::TopologyInstance(BaseKind base, WeightSequence weights)
    : TopologyInstance(base, weights, [&] {
        std::vector<std::size_t> all(weights.index_bound());
        for (std::size_t n = 1; n <= all.size(); ++n) {
          all[n - 1] = n;
        }
        return all;
      }()) {}

TopologyInstance::TopologyInstance(BaseKind base, WeightSequence weights, std::vector<std::size_t> mask)
    : base_(base), weights_(std::move(weights)), mask_(std::move(mask)) {
  bool const mult_base = base_ == BaseKind::odd_naturals;
  if (mult_base != weights_.multiplicative()) {
    throw PreconditionError(std::string("weights ") + std::string(to_string(weights_.kind())) +
                            " do not fit base " + std::string(to_string(base_)));
  }
  in_mask_.assign(weights_.index_bound() + 1, false);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    std::size_t const n = mask_[i];
    if (n == 0 || n > weights_.index_bound()) {
      throw PreconditionError("mask index " + std::to_string(n) + " outside 1.." +
                              std::to_string(weights_.index_bound()));
    }
    if (i > 0 && mask_[i - 1] >= n) {
      throw PreconditionError("mask must be strictly increasing");
    }
    in_mask_[n] = true;
  }
  if (base_ == BaseKind::zplus || base_ == BaseKind::odd_naturals) {
    for (std::size_t n = 1; n <= weights_.index_bound(); ++n) {
      if (!in_s(Rational(weights_[n]))) {
        throw PreconditionError("weight w_" + std::to_string(n) + " is not in S");
      }
    }
  }
}

bool TopologyInstance::in_mask(std::size_t n) const { return n < in_mask_.size() && in_mask_[n]; }

bool TopologyInstance::in_s(Rational const& x) const {
  if (!is_integral(x)) {
    return false;
  }
  switch (base_) {
    case BaseKind::zplus:
      return x >= 0;
    case BaseKind::integers:
      return true;
    case BaseKind::odd_naturals:
      return x > 0 && mp::bit_test(numerator_of(x), 0);
  }
  return false;
}

Rational TopologyInstance::combine(std::vector<std::size_t> const& indices) const {
  Rational acc = identity();
  for (std::size_t n : indices) {
    acc = op(acc, Rational(weights_[n]));
  }
  return acc;
}

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// Decides an index that a representation needs.
Decision index_status(TopologyInstance const& t, std::size_t m, std::size_t min_index) {
  if (m < min_index) {
    return Decision::no;
  }
  if (m > t.weights().index_bound()) {
    return Decision::undetermined;
  }
  return t.in_mask(m) ? Decision::yes : Decision::no;
}

Representation finish(TopologyInstance const& t, std::vector<std::size_t> indices, std::size_t min_index,
                      bool count_ok) {
  Representation r;
  if (!count_ok) {
    return r;
  }
  bool undetermined = false;
  for (std::size_t m : indices) {
    Decision d = index_status(t, m, min_index);
    if (d == Decision::no) {
      return r;
    }
    undetermined |= d == Decision::undetermined;
  }
  if (undetermined) {
    r.status = Decision::undetermined;
    return r;
  }
  r.status  = Decision::yes;
  r.indices = std::move(indices);
  return r;
}

Representation represent_double_exp(TopologyInstance const& t, Integer v, std::size_t k, std::size_t min_index) {
  if (v <= 0) {
    return {};
  }
  // w_m = 2^(2^m) occupies bit 2^m; anything else is not a sum of distinct weights.
  std::vector<std::size_t> indices;
  while (v != 0) {
    std::size_t const bit = mp::lsb(v);
    mp::bit_unset(v, static_cast<unsigned>(bit));
    if (bit < 2 || !is_power_of_two(bit)) {
      return {};
    }
    indices.push_back(static_cast<std::size_t>(std::countr_zero(bit)));
    if (indices.size() > k) {
      return {};
    }
  }
  bool const count_ok = indices.size() == k;
  return finish(t, std::move(indices), min_index, count_ok);
}

Representation represent_odd_primes(TopologyInstance const& t, Integer v, std::size_t k, std::size_t min_index) {
  if (v <= 0 || !mp::bit_test(v, 0)) {
    return {};
  }
  // w_1..w_N are all odd primes up to w_N, so the cofactor left after trial
  // division has only prime factors beyond the bound.
  std::vector<std::size_t> indices;
  auto const& w = t.weights();
  for (std::size_t n = 1; n <= w.index_bound() && v != 1; ++n) {
    if (v % w[n] == 0) {
      v /= w[n];
      if (v % w[n] == 0) {
        return {};
      }
      indices.push_back(n);
      if (indices.size() > k) {
        return {};
      }
    }
  }
  if (v == 1) {
    bool const count_ok = indices.size() == k;
    return finish(t, std::move(indices), min_index, count_ok);
  }
  if (indices.size() >= k) {
    return {};
  }
  Representation r = finish(t, std::move(indices), min_index, true);
  if (r.status == Decision::yes) {
    r.status = Decision::undetermined;
    r.indices.clear();
  }
  return r;
}

Representation represent_explicit(TopologyInstance const& t, Integer const& v, std::size_t k, std::size_t min_index) {
  std::vector<std::size_t> pool;
  for (std::size_t n : t.mask()) {
    if (n >= min_index) {
      pool.push_back(n);
    }
  }
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, Integer const&)> search = [&](std::size_t from, Integer const& rest) {
    if (current.size() == k) {
      if (rest == 0) {
        found.push_back(current);
      }
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      search(i + 1, rest - t.weights()[pool[i]]);
      current.pop_back();
    }
  };
  search(0, v);
  if (found.size() > 1) {
    throw PreconditionError("explicit weights give two representations of " + to_string(v));
  }
  Representation r;
  if (!found.empty()) {
    r.status  = Decision::yes;
    r.indices = found.front();
  }
  return r;
}

}  // namespace

Representation represent(TopologyInstance const& t, Rational const& target, std::size_t k, std::size_t min_index) {
  if (k == 0) {
    Representation r;
    r.status = target == t.identity() ? Decision::yes : Decision::no;
    return r;
  }
  if (!is_integral(target)) {
    return {};
  }
  Integer const v = numerator_of(target);
  switch (t.weights().kind()) {
    case WeightSequence::Kind::double_exp:
      return represent_double_exp(t, v, k, min_index);
    case WeightSequence::Kind::odd_primes:
      return represent_odd_primes(t, v, k, min_index);
    case WeightSequence::Kind::explicit_list:
      return represent_explicit(t, v, k, min_index);
  }
  return {};
}

Membership member(TopologyInstance const& t, BasicNbhd const& u, S1Point const& p) {
  if (!t.in_s1(p)) {
    throw PreconditionError("point " + to_string(p) + " is not in S1");
  }
  if (!t.in_s1(u.center())) {
    throw PreconditionError("centre of " + to_string(u) + " is not in S1");
  }
  Membership m;
  Integer const k = u.a - p.a;
  if (k < 0 || k > u.a) {
    return m;
  }
  m.k              = static_cast<std::size_t>(k);
  Representation r = represent(t, t.inverse_op(p.s, u.s), m.k, u.alpha);
  m.status         = r.status;
  m.indices        = std::move(r.indices);
  return m;
}

std::vector<S1Point> enumerate_basic(TopologyInstance const& t, BasicNbhd const& u, std::size_t index_limit) {
  std::vector<std::size_t> pool;
  for (std::size_t n : t.mask()) {
    if (n >= u.alpha && n <= index_limit) {
      pool.push_back(n);
    }
  }
  if (index_limit > t.weights().index_bound()) {
    throw HorizonExceeded("index limit " + std::to_string(index_limit) + " beyond the weight bound");
  }
  std::vector<S1Point> out;
  std::size_t const max_k = u.a > pool.size() ? pool.size() : static_cast<std::size_t>(u.a);
  std::function<void(std::size_t, std::size_t, Rational const&)> walk = [&](std::size_t from, std::size_t k,
                                                                           Rational const& s) {
    out.push_back({u.a - k, s});
    if (k == max_k) {
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      walk(i + 1, k + 1, t.op(s, Rational(t.weights()[pool[i]])));
    }
  };
  walk(0, 0, u.s);
  return out;
}

// Condition (*) ---------------------------------------------------------------

StarReport verify_star(WeightSequence const& w, std::size_t index_bound, std::size_t max_multiplicity) {
  if (index_bound > w.index_bound()) {
    throw HorizonExceeded("verify_star index bound beyond the weight bound");
  }
  StarReport report;
  std::map<Integer, std::vector<std::vector<std::size_t>>> by_value;
  std::vector<std::size_t> counts(index_bound + 1, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t n) {
    if (n > index_bound) {
      Integer value = w.multiplicative() ? Integer(1) : Integer(0);
      std::vector<std::size_t> multiset;
      for (std::size_t i = 1; i <= index_bound; ++i) {
        for (std::size_t c = 0; c < counts[i]; ++c) {
          multiset.push_back(i);
          value = w.multiplicative() ? Integer(value * w[i]) : Integer(value + w[i]);
        }
      }
      by_value[value].push_back(std::move(multiset));
      ++report.multisets_checked;
      return;
    }
    for (std::size_t c = 0; c <= max_multiplicity; ++c) {
      counts[n] = c;
      walk(n + 1);
    }
    counts[n] = 0;
  };
  walk(1);
  for (auto const& [value, sets] : by_value) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        report.collisions.push_back({sets[i], sets[j]});
      }
    }
  }
  report.verdict = report.collisions.empty() ? Verdict::pass : Verdict::fail;
  return report;
}

StarReport verify_star(WeightSequence const& w, std::size_t index_bound) {
  return verify_star(w, index_bound, w.multiplicative() ? 1 : 2);
}

StarStarReport verify_star_star(TopologyInstance const& t, Rational const& t_elem, Integer window) {
  StarStarReport r;
  r.window = window;
  if (!t.in_s(t_elem)) {
    throw PreconditionError("(**) needs t in S, got " + to_string(t_elem));
  }
  switch (t.base()) {
    case BaseKind::zplus:
      return r;
    case BaseKind::integers:
      // S = G: s - t + w_n and s - t are always in S.
      r.verdict = Verdict::pass;
      r.alpha_t = 1;
      return r;
    case BaseKind::odd_naturals:
      break;
  }
  Integer const tv = numerator_of(t_elem);
  // Largest prime factor of t, by trial division.
  Integer rest = tv;
  Integer largest = 1;
  for (Integer p = 3; p * p <= rest; p += 2) {
    while (rest % p == 0) {
      largest = p;
      rest /= p;
    }
  }
  if (rest > 1) {
    largest = std::max(largest, rest);
  }
  auto const& w = t.weights();
  r.alpha_t     = 0;
  for (std::size_t n = 1; n <= w.index_bound(); ++n) {
    if (w[n] > largest) {
      r.alpha_t = n;
      break;
    }
  }
  if (r.alpha_t == 0) {
    r.verdict = Verdict::undetermined;
    return r;
  }
  // s / t * w_n odd natural must force s / t odd natural, for n >= alpha_t.
  for (Integer s = 1; s <= window; s += 2) {
    bool const quotient_in_s = s % tv == 0;
    for (std::size_t n = r.alpha_t; n <= w.index_bound(); ++n) {
      if (!t.in_mask(n)) {
        continue;
      }
      bool const shifted_in_s = (s * w[n]) % tv == 0;
      if (shifted_in_s && !quotient_in_s) {
        r.verdict        = Verdict::fail;
        r.counterexample = std::make_pair(s, n);
        return r;
      }
    }
  }
  r.verdict = Verdict::pass;
  return r;
}

// Base, Hausdorff, separate continuity -----------------------------------------

InclusionReport base_inclusion(TopologyInstance const& t, BasicNbhd const& inner, BasicNbhd const& outer,
                               std::size_t index_limit) {
  Membership m = member(t, outer, inner.center());
  if (m.status == Decision::undetermined) {
    throw HorizonExceeded("membership of " + to_string(inner.center()) + " undecided within the bound");
  }
  if (m.status == Decision::no) {
    throw PreconditionError(to_string(inner.center()) + " is not in " + to_string(outer));
  }
  InclusionReport r;
  r.predicted = m.indices.empty() ? inner.alpha >= outer.alpha : inner.alpha > m.indices.back();
  for (auto const& p : enumerate_basic(t, inner, index_limit)) {
    Membership q = member(t, outer, p);
    if (q.status == Decision::undetermined) {
      r.verdict = Verdict::undetermined;
    } else if (q.status == Decision::no) {
      r.verdict  = Verdict::fail;
      r.escaping = p;
      return r;
    }
  }
  return r;
}

namespace {

// Factors a positive integer over w_1..w_N with exponents <= 1; no on a
// repeated or even factor, undetermined on a cofactor beyond the bound.
Decision squarefree_over_weights(TopologyInstance const& t, Integer v, std::vector<std::size_t>& out) {
  if (!mp::bit_test(v, 0)) {
    return Decision::no;
  }
  auto const& w = t.weights();
  for (std::size_t n = 1; n <= w.index_bound() && v != 1; ++n) {
    if (v % w[n] == 0) {
      v /= w[n];
      if (v % w[n] == 0 || !t.in_mask(n)) {
        return Decision::no;
      }
      out.push_back(n);
    }
  }
  return v == 1 ? Decision::yes : Decision::undetermined;
}

}  // namespace

SignedRepresentation signed_represent(TopologyInstance const& t, Rational const& diff) {
  SignedRepresentation r;
  if (diff == t.identity()) {
    r.status = Decision::yes;
    return r;
  }
  if (t.multiplicative()) {
    if (diff <= 0) {
      return r;
    }
    Decision num = squarefree_over_weights(t, numerator_of(diff), r.plus);
    Decision den = squarefree_over_weights(t, denominator_of(diff), r.minus);
    if (num == Decision::no || den == Decision::no) {
      r.status = Decision::no;
    } else if (num == Decision::undetermined || den == Decision::undetermined) {
      r.status = Decision::undetermined;
    } else {
      r.status = Decision::yes;
      return r;
    }
    r.plus.clear();
    r.minus.clear();
    return r;
  }
  if (!is_integral(diff)) {
    return r;
  }
  Integer const d = numerator_of(diff);
  auto const& w   = t.weights();
  std::vector<std::size_t> const& mask = t.mask();
  // prefix[i] = sum of masked weights among mask[0..i).
  std::vector<Integer> prefix(mask.size() + 1, 0);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    prefix[i + 1] = prefix[i] + w[mask[i]];
  }
  Integer all = 0;
  for (std::size_t n = 1; n <= w.index_bound(); ++n) {
    all += w[n];
  }
  std::vector<int> sign(mask.size(), 0);
  std::function<bool(std::size_t, Integer const&)> search = [&](std::size_t i, Integer const& rest) {
    if (rest == 0) {
      return true;
    }
    if (i == 0 || abs(rest) > prefix[i]) {
      return false;
    }
    Integer const& wi = w[mask[i - 1]];
    for (int s : {1, -1, 0}) {
      sign[i - 1] = s;
      if (search(i - 1, rest - s * wi)) {
        return true;
      }
    }
    sign[i - 1] = 0;
    return false;
  };
  if (search(mask.size(), d)) {
    r.status = Decision::yes;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (sign[i] > 0) {
        r.plus.push_back(mask[i]);
      } else if (sign[i] < 0) {
        r.minus.push_back(mask[i]);
      }
    }
    return r;
  }
  // Double exponential weights dominate twice everything below them, so a
  // combination using an index past the bound exceeds the sum of all weights
  // up to the bound in absolute value.
  if (w.kind() == WeightSequence::Kind::double_exp && abs(d) > all) {
    r.status = Decision::undetermined;
  }
  return r;
}

HausdorffWitness hausdorff_witness(TopologyInstance const& t, S1Point const& x, S1Point const& y,
                                   std::size_t index_limit) {
  if (x == y) {
    throw PreconditionError("hausdorff_witness needs distinct points");
  }
  HausdorffWitness h;
  h.difference = signed_represent(t, t.inverse_op(y.s, x.s));
  std::size_t alpha = 1;
  if (h.difference.status == Decision::undetermined) {
    h.verdict = Verdict::undetermined;
    return h;
  }
  if (h.difference.status == Decision::yes) {
    for (std::size_t n : h.difference.plus) {
      alpha = std::max(alpha, n + 1);
    }
    for (std::size_t n : h.difference.minus) {
      alpha = std::max(alpha, n + 1);
    }
  }
  h.u = {x.a, x.s, alpha};
  h.v = {y.a, y.s, alpha};
  for (auto const& [from, to] : {std::pair{h.u, h.v}, std::pair{h.v, h.u}}) {
    for (auto const& p : enumerate_basic(t, from, index_limit)) {
      Membership m = member(t, to, p);
      if (m.status == Decision::yes) {
        h.verdict = Verdict::fail;
        h.common  = p;
        return h;
      }
      if (m.status == Decision::undetermined) {
        h.verdict = Verdict::undetermined;
      }
    }
  }
  return h;
}

ContinuityReport separate_continuity_identity(TopologyInstance const& t, S1Point const& shift,
                                              S1Point const& center, std::size_t alpha,
                                              std::size_t index_limit) {
  if (!t.in_s1(shift) || !t.in_s1(center)) {
    throw PreconditionError("shift and centre must lie in S1");
  }
  ContinuityReport r;
  BasicNbhd const small{center.a, center.s, alpha};
  BasicNbhd const big{center.a + shift.a, t.op(center.s, shift.s), alpha};
  auto note = [&](Decision d, S1Point const& p) {
    if (d == Decision::no && !r.counterexample) {
      r.verdict        = Verdict::fail;
      r.counterexample = p;
    } else if (d == Decision::undetermined && r.verdict == Verdict::pass) {
      r.verdict = Verdict::undetermined;
    }
  };
  // U(a, s, alpha) lands inside U(a + b, s ⊕ t, alpha) under M ...
  for (auto const& p : enumerate_basic(t, small, index_limit)) {
    ++r.points_checked;
    note(member(t, big, t.product(p, shift)).status, p);
  }
  // ... and every preimage in S1 of a point of the big set is in the small one.
  for (auto const& q : enumerate_basic(t, big, index_limit)) {
    S1Point const pre{q.a - shift.a, t.inverse_op(q.s, shift.s)};
    if (!t.in_s1(pre)) {
      continue;
    }
    ++r.points_checked;
    note(member(t, small, pre).status, pre);
  }
  return r;
}

std::vector<Rational> signed_combinations(TopologyInstance const& t, std::size_t index_limit, std::size_t terms) {
  std::vector<std::size_t> pool;
  for (std::size_t n : t.mask()) {
    if (n <= index_limit) {
      pool.push_back(n);
    }
  }
  std::set<Rational> out;
  std::function<void(std::size_t, std::size_t, Rational const&)> walk = [&](std::size_t i, std::size_t used,
                                                                           Rational const& value) {
    if (i == pool.size()) {
      if (t.in_s(value)) {
        out.insert(value);
      }
      return;
    }
    walk(i + 1, used, value);
    if (used < terms) {
      Rational const w = t.weights()[pool[i]];
      walk(i + 1, used + 1, t.op(value, w));
      walk(i + 1, used + 1, t.inverse_op(value, w));
    }
  };
  walk(0, 0, t.identity());
  return {out.begin(), out.end()};
}

BasePropertyReport verify_base_property(TopologyInstance const& t, std::size_t a_max, std::size_t index_limit,
                                        std::size_t combination_terms, std::size_t jobs) {
  BasePropertyReport report;
  std::vector<BasicNbhd> sets;
  for (auto const& s : signed_combinations(t, index_limit, combination_terms)) {
    for (std::size_t a = 0; a <= a_max; ++a) {
      for (std::size_t alpha = 1; alpha <= index_limit + 1; ++alpha) {
        sets.push_back({Integer(a), s, alpha});
      }
    }
  }
  report.basic_sets = sets.size();

  // For every point: the sets containing it and the g of the inclusion
  // U(point, g) ⊆ set predicted by the representation.
  struct Incidence {
    std::size_t set;
    std::size_t gamma;
  };
  std::map<S1Point, std::vector<Incidence>> incidences;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto const& p : enumerate_basic(t, sets[i], index_limit)) {
      Membership m = member(t, sets[i], p);
      if (m.status != Decision::yes) {
        report.verdict        = Verdict::fail;
        report.counterexample = "enumerated point " + to_string(p) + " fails membership in " + to_string(sets[i]);
        return report;
      }
      std::size_t const gamma = m.indices.empty() ? sets[i].alpha : m.indices.back() + 1;
      incidences[p].push_back({i, gamma});
    }
  }

  std::vector<std::pair<S1Point, std::vector<Incidence>>> points(incidences.begin(), incidences.end());
  struct Outcome {
    Verdict verdict = Verdict::pass;
    std::size_t pairs = 0;
    std::size_t checks = 0;
    std::string counterexample;
  };
  std::vector<Outcome> outcomes(points.size());
  std::size_t const check_limit = std::min(index_limit + 2, t.weights().index_bound());

  parallel_for(points.size(), jobs, [&](std::size_t pi) {
    auto const& [c, list] = points[pi];
    Outcome& out          = outcomes[pi];
    std::map<std::pair<std::size_t, std::size_t>, Decision> cache;  // (set, g) -> U(c, g) ⊆ set
    auto included = [&](std::size_t set, std::size_t gamma) {
      auto key = std::make_pair(set, gamma);
      auto it  = cache.find(key);
      if (it != cache.end()) {
        return it->second;
      }
      Decision d = Decision::yes;
      ++out.checks;
      for (auto const& p : enumerate_basic(t, {c.a, c.s, gamma}, check_limit)) {
        Decision m = member(t, sets[set], p).status;
        if (m == Decision::no) {
          d = Decision::no;
          break;
        }
        if (m == Decision::undetermined) {
          d = Decision::undetermined;
        }
      }
      return cache[key] = d;
    };
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        ++out.pairs;
        std::size_t const gamma = std::max(list[i].gamma, list[j].gamma);
        for (std::size_t set : {list[i].set, list[j].set}) {
          Decision d = included(set, gamma);
          if (d == Decision::no && out.verdict != Verdict::fail) {
            out.verdict        = Verdict::fail;
            out.counterexample = "U(" + to_string(c) + ", " + std::to_string(gamma) + ") not inside " +
                                 to_string(sets[set]);
          } else if (d == Decision::undetermined && out.verdict == Verdict::pass) {
            out.verdict = Verdict::undetermined;
          }
        }
      }
    }
  });

  for (auto const& out : outcomes) {
    report.intersecting_pairs += out.pairs;
    report.point_checks += out.checks;
    report.verdict = combine(report.verdict, out.verdict);
    if (!out.counterexample.empty() && !report.counterexample) {
      report.counterexample = out.counterexample;
    }
  }
  return report;
}

// Convergence -------------------------------------------------------------------

namespace {

Decision member_at(TermWitness const& w, std::size_t alpha) {
  if (w.status != Decision::yes) {
    return w.status;
  }
  return w.indices.empty() || w.indices.front() >= alpha ? Decision::yes : Decision::no;
}

}  // namespace

ConvergenceCertificate check_convergence(TopologyInstance const& t, std::vector<S1Point> const& sequence,
                                         S1Point const& limit, std::size_t alpha_max) {
  ConvergenceCertificate cert;
  cert.limit     = limit;
  cert.alpha_max = alpha_max;
  if (sequence.empty()) {
    cert.verdict = Verdict::undetermined;
    return cert;
  }
  BasicNbhd const base{limit.a, limit.s, 1};
  for (auto const& term : sequence) {
    Membership m = member(t, base, term);
    cert.witnesses.push_back({m.status, std::move(m.indices)});
  }
  std::size_t const len = sequence.size();
  for (std::size_t alpha = 1; alpha <= alpha_max; ++alpha) {
    std::size_t start = len;  // 0-based first index of the member tail
    while (start > 0 && member_at(cert.witnesses[start - 1], alpha) == Decision::yes) {
      --start;
    }
    if (start > 0 && member_at(cert.witnesses[start - 1], alpha) == Decision::undetermined) {
      cert.verdict = Verdict::undetermined;
      return cert;
    }
    if (start == len) {
      if (member_at(cert.witnesses[len - 1], alpha) == Decision::undetermined) {
        cert.verdict = Verdict::undetermined;
        return cert;
      }
      std::size_t run = len;
      while (run > 0 && member_at(cert.witnesses[run - 1], alpha) == Decision::no) {
        --run;
      }
      cert.verdict    = Verdict::fail;
      cert.divergence = std::make_pair(alpha, run + 1);
      return cert;
    }
    cert.thresholds[alpha] = start + 1;
  }
  return cert;
}

bool validate_certificate(TopologyInstance const& t, std::vector<S1Point> const& sequence,
                          ConvergenceCertificate const& cert) {
  if (cert.verdict != Verdict::pass || cert.thresholds.size() != cert.alpha_max) {
    return false;
  }
  std::size_t previous = 1;
  for (auto const& [alpha, n] : cert.thresholds) {
    if (n < previous || n < 1 || n > sequence.size()) {
      return false;
    }
    previous = n;
    for (std::size_t i = n; i <= sequence.size(); ++i) {
      if (member(t, {cert.limit.a, cert.limit.s, alpha}, sequence[i - 1]).status != Decision::yes) {
        return false;
      }
    }
  }
  return true;
}

std::optional<ConvergenceCertificate> find_limit(TopologyInstance const& t, std::vector<S1Point> const& sequence,
                                                 std::size_t alpha_max, std::size_t min_tail, std::size_t strip) {
  if (sequence.empty()) {
    return std::nullopt;
  }
  S1Point const& last = sequence.back();
  std::vector<S1Point> candidates;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t from) {
    S1Point c{last.a + chosen.size(), t.inverse_op(last.s, t.combine(chosen))};
    if (t.in_s1(c)) {
      candidates.push_back(c);
    }
    if (chosen.size() == strip) {
      return;
    }
    for (std::size_t i = from; i < t.mask().size(); ++i) {
      chosen.push_back(t.mask()[i]);
      walk(i + 1);
      chosen.pop_back();
    }
  };
  walk(0);

  std::optional<ConvergenceCertificate> best;
  std::size_t best_cost = 0;
  for (auto const& c : candidates) {
    ConvergenceCertificate cert = check_convergence(t, sequence, c, alpha_max);
    if (cert.verdict != Verdict::pass) {
      continue;
    }
    std::size_t cost = 0;
    bool long_tails  = true;
    for (auto const& [alpha, n] : cert.thresholds) {
      cost += n;
      long_tails &= sequence.size() - n + 1 >= min_tail;
    }
    if (long_tails && (!best || cost < best_cost)) {
      best      = std::move(cert);
      best_cost = cost;
    }
  }
  return best;
}

TransferReport convergence_transfer(TopologyInstance const& t, std::vector<S1Point> const& sequence,
                                    S1Point const& shift, std::size_t alpha_max,
                                    std::optional<S1Point> shifted_limit) {
  TransferReport r;
  if (!t.in_s1(shift)) {
    throw PreconditionError("shift " + to_string(shift) + " is not in S1");
  }
  StarStarReport ss = verify_star_star(t, shift.s);
  if (ss.verdict != Verdict::pass) {
    r.verdict = ss.verdict;
    r.note    = ss.verdict == Verdict::not_applicable ? "no (**) data for this base" : "(**) check did not pass";
    return r;
  }
  r.alpha_s = ss.alpha_t;

  std::vector<S1Point> shifted;
  shifted.reserve(sequence.size());
  for (auto const& p : sequence) {
    shifted.push_back(t.product(p, shift));
  }
  if (shifted_limit) {
    r.shifted = check_convergence(t, shifted, *shifted_limit, alpha_max);
  } else {
    auto found = find_limit(t, shifted, alpha_max);
    if (found) {
      r.shifted = std::move(*found);
    }
  }
  if (!r.shifted || r.shifted->verdict != Verdict::pass) {
    r.verdict = Verdict::undetermined;
    r.note    = "shifted sequence not certified convergent at this horizon";
    return r;
  }
  S1Point const& bt = r.shifted->limit;
  r.predicted       = S1Point{bt.a - shift.a, t.inverse_op(bt.s, shift.s)};
  if (!t.in_s1(*r.predicted)) {
    r.verdict = Verdict::fail;
    r.note    = "predicted limit " + to_string(*r.predicted) + " is not in S1";
    return r;
  }
  r.original = check_convergence(t, sequence, *r.predicted, alpha_max);
  r.verdict  = r.original->verdict;
  return r;
}

// Continuum of topologies --------------------------------------------------------

DistinctionReport distinguish_topologies(BaseKind base, WeightSequence const& weights,
                                         std::vector<std::size_t> const& mask1,
                                         std::vector<std::size_t> const& mask2, std::size_t horizon) {
  TopologyInstance const t1(base, weights, mask1);
  TopologyInstance const t2(base, weights, mask2);
  DistinctionReport r;
  for (std::size_t n = 1; n <= horizon; ++n) {
    bool const in1 = t1.in_mask(n);
    bool const in2 = t2.in_mask(n);
    if (in1 == in2) {
      continue;
    }
    ++r.symmetric_difference;
    TopologyInstance const& own   = in2 ? t2 : t1;
    TopologyInstance const& other = in2 ? t1 : t2;
    S1Point const p{0, Rational(weights[n])};
    DistinctWitness w;
    w.index           = n;
    w.in_second       = in2;
    w.converges_in_own = true;
    for (std::size_t alpha = 1; alpha <= n; ++alpha) {
      w.converges_in_own &= member(own, {1, own.identity(), alpha}, p).status == Decision::yes;
    }
    w.other = member(other, {1, other.identity(), 1}, p).status;
    if (w.converges_in_own && w.other == Decision::no) {
      r.status = Distinction::distinct;
    }
    r.witnesses.push_back(w);
  }
  r.strong = r.symmetric_difference >= std::max<std::size_t>(2, horizon / 3);
  return r;
}

std::vector<std::vector<std::size_t>> mask_family(std::size_t count, std::size_t horizon, std::size_t min_distance) {
  if (horizon >= 31) {
    throw PreconditionError("mask_family horizon must be below 31");
  }
  std::vector<std::uint32_t> words;
  for (std::uint32_t x = 1; x < (std::uint32_t{1} << horizon) && words.size() < count; ++x) {
    bool far = true;
    for (std::uint32_t y : words) {
      if (static_cast<std::size_t>(std::popcount(x ^ y)) < min_distance) {
        far = false;
        break;
      }
    }
    if (far) {
      words.push_back(x);
    }
  }
  std::vector<std::vector<std::size_t>> masks;
  for (std::uint32_t x : words) {
    std::vector<std::size_t> mask;
    for (std::size_t n = 1; n <= horizon; ++n) {
      if (x & (std::uint32_t{1} << (n - 1))) {
        mask.push_back(n);
      }
    }
    masks.push_back(std::move(mask));
  }
  return masks;
}

Integer to_nmul(S1Point const& p) {
  if (p.a < 0 || !is_integral(p.s) || p.s <= 0 || !mp::bit_test(numerator_of(p.s), 0)) {
    throw PreconditionError(to_string(p) + " is not in Z_+ x odd naturals");
  }
  return numerator_of(p.s) << static_cast<unsigned>(p.a);
}

S1Point from_nmul(Integer const& m) {
  if (m <= 0) {
    throw PreconditionError("(N, .) element must be positive");
  }
  std::size_t const k = mp::lsb(m);
  return {Integer(k), Rational(Integer(m >> static_cast<unsigned>(k)))};
}

std::vector<std::size_t> psi_exponents(TopologyInstance const& t, BasicNbhd const& u, S1Point const& p) {
  Membership m = member(t, u, p);
  if (m.status == Decision::undetermined) {
    throw HorizonExceeded("membership of " + to_string(p) + " undecided within the bound");
  }
  if (m.status == Decision::no) {
    throw PreconditionError(to_string(p) + " is not in " + to_string(u));
  }
  return m.indices;
}

}  // namespace semipredual
