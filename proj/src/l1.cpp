#include "semipredual/l1.hpp"

#include <algorithm>

namespace semipredual {

L1Vector::L1Vector(Terms terms) {
  for (auto& [s, c] : terms) {
    add(s, c);
  }
}

L1Vector L1Vector::delta(Element const& s, Rational coeff) {
  L1Vector v;
  v.add(s, coeff);
  return v;
}

Rational L1Vector::coeff(Element const& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational L1Vector::norm() const {
  Rational n = 0;
  for (auto const& [s, c] : terms_) {
    n += abs(c);
  }
  return n;
}

Rational L1Vector::total() const {
  Rational t = 0;
  for (auto const& [s, c] : terms_) {
    t += c;
  }
  return t;
}

void L1Vector::add(Element const& s, Rational const& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

L1Vector& L1Vector::operator+=(L1Vector const& other) {
  for (auto const& [s, c] : other.terms_) {
    add(s, c);
  }
  return *this;
}

L1Vector operator-(L1Vector a, L1Vector const& b) {
  for (auto const& [s, c] : b.terms_) {
    a.add(s, -c);
  }
  return a;
}

L1Vector operator*(Rational const& c, L1Vector const& a) {
  L1Vector out;
  for (auto const& [s, x] : a.terms_) {
    out.add(s, c * x);
  }
  return out;
}

void L1TensorVector::add(Key const& st, Rational const& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(st, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Rational L1TensorVector::norm() const {
  Rational n = 0;
  for (auto const& [st, c] : terms_) {
    n += abs(c);
  }
  return n;
}

L1Vector convolve(Semigroup const& s, L1Vector const& a, L1Vector const& b) {
  L1Vector out;
  for (auto const& [x, cx] : a.terms()) {
    for (auto const& [y, cy] : b.terms()) {
      out.add(s.product(x, y), cx * cy);
    }
  }
  return out;
}

L1TensorVector coproduct(L1Vector const& a) {
  L1TensorVector out;
  for (auto const& [s, c] : a.terms()) {
    out.add({s, s}, c);
  }
  return out;
}

L1TensorVector convolve(Semigroup const& s, L1TensorVector const& a, L1TensorVector const& b) {
  L1TensorVector out;
  for (auto const& [x, cx] : a.terms()) {
    for (auto const& [y, cy] : b.terms()) {
      out.add({s.product(x.first, y.first), s.product(x.second, y.second)}, cx * cy);
    }
  }
  return out;
}

BoundedFunction BoundedFunction::c0_plus_const(std::map<Natural, Rational> modifications, Rational beta) {
  BoundedFunction f;
  f.tag_  = Tag::c0_plus_const;
  f.beta_ = std::move(beta);
  for (auto& [n, v] : modifications) {
    if (v != f.beta_) {
      f.modifications_.emplace(n, std::move(v));
    }
  }
  return f;
}

BoundedFunction BoundedFunction::indicator(std::vector<Natural> const& points) {
  std::map<Natural, Rational> mods;
  for (Natural n : points) {
    mods[n] = 1;
  }
  return c0_plus_const(std::move(mods), 0);
}

BoundedFunction BoundedFunction::sampled(std::vector<Rational> values) {
  BoundedFunction f;
  f.tag_     = Tag::sampled;
  f.samples_ = std::move(values);
  return f;
}

bool BoundedFunction::defined_at(Natural n) const {
  return tag_ == Tag::c0_plus_const || (n >= 1 && n <= samples_.size());
}

Rational BoundedFunction::operator()(Natural n) const {
  if (tag_ == Tag::c0_plus_const) {
    auto it = modifications_.find(n);
    return it == modifications_.end() ? beta_ : it->second;
  }
  if (!defined_at(n)) {
    throw HorizonExceeded("sampled function consulted at " + std::to_string(n) +
                          " outside horizon " + std::to_string(samples_.size()));
  }
  return samples_[n - 1];
}

Natural BoundedFunction::tail_start() const {
  if (tag_ != Tag::c0_plus_const) {
    throw PreconditionError("tail_start needs a c0_plus_const function");
  }
  return modifications_.empty() ? 0 : modifications_.rbegin()->first + 1;
}

Natural as_natural(Element const& x) {
  auto const* t = std::get_if<TupleElement>(&x);
  if (t == nullptr || t->coords.size() != 1 || t->coords[0] < 0) {
    throw InstanceMismatch("expected a natural number, got " + to_string(x));
  }
  return static_cast<Natural>(t->coords[0]);
}

Rational pairing(L1Vector const& a, BoundedFunction const& f) {
  Rational sum = 0;
  for (auto const& [s, c] : a.terms()) {
    sum += c * f(as_natural(s));
  }
  return sum;
}

namespace {

bool over_naturals(Semigroup const& s) {
  switch (s.kind()) {
    case SemigroupKind::zplus_k:
      return s.k() == 1;
    case SemigroupKind::nat_max:
    case SemigroupKind::nat_mul:
      return true;
    default:
      return false;
  }
}

Rational act_at(ActionSide side, L1Vector const& a, BoundedFunction const& f, Semigroup const& s,
                Natural point) {
  Rational sum   = 0;
  Element const p = nat(point);
  for (auto const& [n, c] : a.terms()) {
    Element prod = side == ActionSide::left ? s.product(p, n) : s.product(n, p);
    sum += c * f(as_natural(prod));
  }
  return sum;
}

}  // namespace

BoundedFunction module_action(ActionSide side, L1Vector const& a, BoundedFunction const& f,
                              Semigroup const& s) {
  if (!over_naturals(s)) {
    throw PreconditionError("module_action needs an instance over the naturals, got " + s.name());
  }
  for (auto const& [n, c] : a.terms()) {
    if (!s.contains(n)) {
      throw InstanceMismatch("vector term " + to_string(n) + " is not in " + s.name());
    }
  }
  Natural const first = s.contains(nat(0)) ? 0 : 1;

  if (f.is_c0_plus_const()) {
    // Past both supports every product lands in f's constant tail: op(s, n) >= s
    // for max, + and . on these instances.
    Natural max_support = 0;
    for (auto const& [n, c] : a.terms()) {
      max_support = std::max(max_support, as_natural(n));
    }
    Natural const threshold = std::max(max_support + 1, f.tail_start());
    std::map<Natural, Rational> mods;
    for (Natural p = first; p < threshold; ++p) {
      mods.emplace(p, act_at(side, a, f, s, p));
    }
    return BoundedFunction::c0_plus_const(std::move(mods), f.beta() * a.total());
  }

  if (a.is_zero()) {
    return BoundedFunction::sampled(std::vector<Rational>(f.horizon(), Rational(0)));
  }
  std::vector<Rational> values;
  for (Natural p = 1;; ++p) {
    bool known = true;
    for (auto const& [n, c] : a.terms()) {
      Element prod = side == ActionSide::left ? s.product(nat(p), n) : s.product(n, nat(p));
      if (!f.defined_at(as_natural(prod))) {
        known = false;
        break;
      }
    }
    if (!known) {
      break;
    }
    values.push_back(act_at(side, a, f, s, p));
  }
  return BoundedFunction::sampled(std::move(values));
}

L1Vector max_action_formula(Natural s, L1Vector const& a) {
  Rational head = 0;
  L1Vector out;
  for (auto const& [n, c] : a.terms()) {
    Natural const m = as_natural(n);
    if (m <= s) {
      head += c;
    } else {
      out.add(n, c);
    }
  }
  out.add(nat(s), head);
  return out;
}

}  // namespace semipredual
