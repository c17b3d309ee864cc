#pragma once

// Countable discrete semigroups used throughout the library, their element
// types, and window-relative structural checks.
//
// A "window of rank n" is the finite set of elements whose grade (a natural
// size measure: coordinate sum, word length, value, ...) is at most n. Every
// structural verdict is relative to such a window and never asserts the
// statement for the whole infinite semigroup.

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semipredual/arith.hpp"
#include "semipredual/partial_map.hpp"
#include "semipredual/verdict.hpp"

namespace semipredual {

/// Element of Z_+^k, Z_+ x Z, (N, max) or (N, .) (the latter two with k = 1).
struct TupleElement {
  std::vector<Integer> coords;
  friend bool operator==(TupleElement const&, TupleElement const&) = default;
  friend bool operator<(TupleElement const& a, TupleElement const& b) { return a.coords < b.coords; }
};

/// Nonempty word over the letters 0..k-1 of a free semigroup.
struct WordElement {
  boost::container::small_vector<std::uint8_t, 24> letters;
  friend bool operator==(WordElement const&, WordElement const&) = default;
  friend bool operator<(WordElement const& a, WordElement const& b) { return a.letters < b.letters; }
};

/// N u {infinity} under addition, infinity absorbing.
struct ExtendedNatural {
  bool infinite = false;
  Integer value;  // meaningful when !infinite
  friend bool operator==(ExtendedNatural const& a, ExtendedNatural const& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(ExtendedNatural const& a, ExtendedNatural const& b) {
    if (a.infinite != b.infinite) {
      return b.infinite;
    }
    return !a.infinite && a.value < b.value;
  }
};

/// g eps_{row,col} in a Rees matrix semigroup over a group, or its zero.
/// Rows and columns are 1-based.
struct ReesElement {
  bool zero = false;
  std::vector<Integer> entry;
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(ReesElement const& a, ReesElement const& b) {
    if (a.zero || b.zero) {
      return a.zero == b.zero;
    }
    return a.row == b.row && a.col == b.col && a.entry == b.entry;
  }
  friend bool operator<(ReesElement const& a, ReesElement const& b) {
    if (a.zero || b.zero) {
      return a.zero && !b.zero;
    }
    if (a.row != b.row) {
      return a.row < b.row;
    }
    if (a.col != b.col) {
      return a.col < b.col;
    }
    return a.entry < b.entry;
  }
};

using Element = std::variant<TupleElement, WordElement, ExtendedNatural, ReesElement, PartialMap>;

std::size_t hash_element(Element const& e);
std::string to_string(Element const& e);

struct ElementHash {
  std::size_t operator()(Element const& e) const { return hash_element(e); }
};

// Element constructors.
Element tuple(std::vector<Integer> coords);
Element nat(Integer value);
Element word(std::string_view letters);  // 'a' is letter 0, 'b' letter 1, ...
Element ext_nat(Integer value);
Element ext_infinity();
Element rees(std::vector<Integer> entry, std::size_t row, std::size_t col);
Element rees_zero();

enum class SemigroupKind { zplus_k, free, nat_mul, nat_max, nat_infty, zplus_times_z, rees, partial_maps };

std::string_view to_string(SemigroupKind kind);

/// Groups allowed as Rees entries: Z/m (additive) or Z^d.
struct ReesGroup {
  enum class Type { cyclic, integers } type = Type::integers;
  Integer order = 0;      // cyclic only
  std::size_t dim = 1;    // integers only; cyclic groups have dim 1

  std::vector<Integer> add(std::vector<Integer> const& x, std::vector<Integer> const& y) const;
  std::vector<Integer> normalize(std::vector<Integer> x) const;
  bool contains(std::vector<Integer> const& x) const;
  std::size_t grade(std::vector<Integer> const& x) const;
  /// Every group element of grade <= rank.
  std::vector<std::vector<Integer>> ball(std::size_t rank) const;
};

/// M(G; I, J; P) with I = {1..rows}, J = {1..cols}; sandwich[j-1][i-1] = P_{j,i}.
/// The zero is always accepted as an element (and is absorbing) but only
/// belongs to windows when `with_zero` is set: products of nonzero elements
/// over a group never vanish.
struct ReesData {
  ReesGroup group;
  std::size_t rows = 1;
  std::size_t cols = 1;
  bool with_zero = false;
  std::vector<std::vector<std::vector<Integer>>> sandwich;
};

class Semigroup {
 public:
  static Semigroup zplus_k(std::size_t k);
  static Semigroup free(std::size_t k);
  static Semigroup nat_mul();
  static Semigroup nat_max();
  static Semigroup nat_infty();
  static Semigroup zplus_times_z();
  static Semigroup rees(ReesData data);
  static Semigroup partial_maps();

  SemigroupKind kind() const { return kind_; }
  std::size_t k() const { return k_; }
  std::string name() const;
  ReesData const& rees_data() const { return rees_; }

  bool contains(Element const& x) const;
  /// Throws InstanceMismatch when an argument does not belong to this instance.
  Element product(Element const& x, Element const& y) const;

  std::size_t grade(Element const& x) const;
  /// All elements of grade <= rank, ordered by grade and then lexicographically.
  std::vector<Element> window(std::size_t rank) const;

  bool commutative() const;
  std::optional<Element> zero() const;

  /// Finite generating set, when the instance declares one.
  std::optional<std::vector<Element>> generators() const;
  /// Multiplying by a generator never lowers the grade.
  bool grade_monotone() const;

 private:
  Semigroup(SemigroupKind kind, std::size_t k) : kind_(kind), k_(k) {}
  void require(Element const& x) const;

  SemigroupKind kind_;
  std::size_t k_ = 1;
  ReesData rees_;
};

// Structural checks ----------------------------------------------------------

enum class Side { left, right };
std::string_view to_string(Side side);

/// Witness that a translation is not injective (or has a large fibre).
struct TranslationWitness {
  Element translator;
  Side side;
  Element target;
  std::vector<Element> preimages;
};

struct TranslationReport {
  Verdict verdict = Verdict::pass;
  std::size_t window_rank = 0;
  std::size_t window_size = 0;
  std::size_t largest_fibre = 0;
  std::optional<TranslationWitness> witness;
};

/// Fails when some left or right translation x -> s x (x s) has a fibre of
/// size >= blowup_threshold inside the window.
TranslationReport is_weakly_cancellative_window(Semigroup const& s, std::size_t window_rank,
                                                std::size_t blowup_threshold = 50,
                                                std::size_t jobs = 1);

/// Fails when some translation identifies two window elements.
TranslationReport is_cancellative_window(Semigroup const& s, std::size_t window_rank,
                                         std::size_t jobs = 1);

struct DivisorReport {
  Verdict verdict = Verdict::undetermined;  // pass = stable, fail = growing
  Element target;
  std::size_t window_rank = 0;
  std::size_t comparison_rank = 0;
  /// Divisors t with t r = target for some r, both in the window.
  std::vector<Element> divisors;
  std::size_t count_at_comparison_rank = 0;
};

/// Divisor set of `target` inside the window, compared against the smaller
/// window of rank max(grade(target), ceil(rank / 2)); growth between the two
/// is reported as evidence of infinite left divisibility.
DivisorReport is_finitely_left_divisible_window(Semigroup const& s, Element const& target,
                                                std::size_t window_rank);

/// Same check for many targets with a single pass over window pairs.
std::vector<DivisorReport> left_divisor_scan(Semigroup const& s, std::vector<Element> const& targets,
                                             std::size_t window_rank, std::size_t jobs = 1);

struct LengthResult {
  Decision status = Decision::undetermined;  // no = provably unreachable
  std::size_t length = 0;
  std::size_t depth_searched = 0;
};

/// Least n with x a product of n generators, by breadth-first search.
/// Throws PreconditionError when the instance declares no generators.
LengthResult length(Semigroup const& s, Element const& x, std::size_t max_depth = 64);

/// Checks (xy)z = x(yz) on every triple of the window.
Verdict check_associativity(Semigroup const& s, std::size_t window_rank,
                            std::optional<std::vector<Element>>* counterexample = nullptr);

}  // namespace semipredual
