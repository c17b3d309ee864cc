#pragma once

// Finite-support vectors of l1(S) with exact coefficients, the diagonal
// coproduct, and pairings/module actions against finitely described bounded
// functions on N.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "semipredual/arith.hpp"
#include "semipredual/semigroup.hpp"

namespace semipredual {

/// Sum of c_s delta_s over a finite support. Zero coefficients are never stored.
class L1Vector {
 public:
  using Terms = std::map<Element, Rational>;

  L1Vector() = default;
  explicit L1Vector(Terms terms);

  static L1Vector delta(Element const& s, Rational coeff = 1);

  Terms const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Element const& s) const;
  Rational norm() const;
  /// Sum of all coefficients.
  Rational total() const;

  void add(Element const& s, Rational const& c);

  L1Vector& operator+=(L1Vector const& other);
  friend L1Vector operator+(L1Vector a, L1Vector const& b) { return a += b; }
  friend L1Vector operator-(L1Vector a, L1Vector const& b);
  friend L1Vector operator*(Rational const& c, L1Vector const& a);
  friend bool operator==(L1Vector const&, L1Vector const&) = default;

 private:
  Terms terms_;
};

/// Element of l1(S x S), indexed by ordered pairs.
class L1TensorVector {
 public:
  using Key   = std::pair<Element, Element>;
  using Terms = std::map<Key, Rational>;

  Terms const& terms() const { return terms_; }
  void add(Key const& st, Rational const& c);
  Rational norm() const;
  friend bool operator==(L1TensorVector const&, L1TensorVector const&) = default;

 private:
  Terms terms_;
};

/// Bilinear extension of delta_s * delta_t = delta_{st}.
L1Vector convolve(Semigroup const& s, L1Vector const& a, L1Vector const& b);

/// Gamma(sum a_s delta_s) = sum a_s delta_{(s,s)}.
L1TensorVector coproduct(L1Vector const& a);

/// Product in l1(S x S) with the coordinatewise semigroup law.
L1TensorVector convolve(Semigroup const& s, L1TensorVector const& a, L1TensorVector const& b);

/// A bounded function on N = {1, 2, ...} (and 0 where the tag allows).
///
/// c0_plus_const: the constant beta modified at finitely many points; defined
/// everywhere including 0.
/// sampled: explicit values at 1..horizon only; anything else throws
/// HorizonExceeded.
class BoundedFunction {
 public:
  enum class Tag { c0_plus_const, sampled };

  static BoundedFunction c0_plus_const(std::map<Natural, Rational> modifications, Rational beta);
  static BoundedFunction constant(Rational beta) { return c0_plus_const({}, std::move(beta)); }
  static BoundedFunction indicator(std::vector<Natural> const& points);
  /// values[i] is the value at i + 1.
  static BoundedFunction sampled(std::vector<Rational> values);

  Tag tag() const { return tag_; }
  bool is_c0_plus_const() const { return tag_ == Tag::c0_plus_const; }

  /// Entries equal to beta are dropped, so the map is exactly the c0 support.
  std::map<Natural, Rational> const& modifications() const { return modifications_; }
  Rational const& beta() const { return beta_; }
  std::vector<Rational> const& samples() const { return samples_; }
  Natural horizon() const { return samples_.size(); }

  bool defined_at(Natural n) const;
  Rational operator()(Natural n) const;

  /// Least n0 with f(n) = beta for all n >= n0 (c0_plus_const only).
  Natural tail_start() const;

  friend bool operator==(BoundedFunction const&, BoundedFunction const&) = default;

 private:
  Tag tag_ = Tag::c0_plus_const;
  std::map<Natural, Rational> modifications_;
  Rational beta_;
  std::vector<Rational> samples_;
};

/// Natural number carried by a one-coordinate element; throws InstanceMismatch otherwise.
Natural as_natural(Element const& x);

/// sum a_s f(s). Throws HorizonExceeded when a sampled f is consulted
/// outside its horizon.
Rational pairing(L1Vector const& a, BoundedFunction const& f);

enum class ActionSide { left, right };

/// s -> <f, delta_s a> (left) or s -> <f, a delta_s> (right) on an instance
/// whose elements are natural numbers (Z_+, (N, max), (N, .)).
///
/// For c0_plus_const f the result is exact and again c0_plus_const. For
/// sampled f the result is sampled on the largest initial segment 1..H' on
/// which every needed value of f is known.
BoundedFunction module_action(ActionSide side, L1Vector const& a, BoundedFunction const& f,
                              Semigroup const& s);

/// (sum_{n <= s} a_n) delta_s + sum_{n > s} a_n delta_n over (N, max).
L1Vector max_action_formula(Natural s, L1Vector const& a);

}  // namespace semipredual
