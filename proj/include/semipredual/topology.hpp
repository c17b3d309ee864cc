#pragma once

// Neighbourhood-base topologies on S1 = Z_+ x S built from a weight sequence.
//
// S is Z_+ or Z (inside the additive group Z) or the odd naturals (inside the
// multiplicative group of positive rationals). Group elements are carried as
// exact rationals; ⊕ / ⊖ below mean + / - or * / / accordingly.
//
// U(a, s, alpha) = { (a - k, s ⊕ w_{m_1} ⊕ ... ⊕ w_{m_k}) : 0 <= k <= a,
//                     alpha <= m_1 < ... < m_k, every m_i in the mask }.
//
// Weight indices are the original indices n of w_n even under a mask, so a
// masked topology uses the same alpha thresholds as the full one.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semipredual/arith.hpp"
#include "semipredual/verdict.hpp"

namespace semipredual {

enum class BaseKind { zplus, integers, odd_naturals };
std::string_view to_string(BaseKind base);

class WeightSequence {
 public:
  enum class Kind { double_exp, odd_primes, explicit_list };

  /// w_n = 2^(2^n), n >= 1.
  static WeightSequence double_exp(std::size_t index_bound);
  /// w_n = n-th odd prime: 3, 5, 7, 11, ...
  static WeightSequence odd_primes(std::size_t index_bound);
  /// A finite list w_1..w_N (negative controls); index_bound = N.
  static WeightSequence explicit_list(std::vector<Integer> weights);

  Kind kind() const { return kind_; }
  std::size_t index_bound() const { return values_.size(); }
  /// 1-based; throws HorizonExceeded past index_bound.
  Integer const& operator[](std::size_t n) const;
  bool multiplicative() const { return kind_ == Kind::odd_primes; }

 private:
  Kind kind_ = Kind::double_exp;
  std::vector<Integer> values_;
};

std::string_view to_string(WeightSequence::Kind kind);

struct S1Point {
  Integer a;   // Z_+ coordinate
  Rational s;  // S coordinate
  friend bool operator==(S1Point const&, S1Point const&) = default;
  friend bool operator<(S1Point const& x, S1Point const& y) {
    return x.a != y.a ? x.a < y.a : x.s < y.s;
  }
};

std::string to_string(S1Point const& p);

struct BasicNbhd {
  Integer a;
  Rational s;
  std::size_t alpha = 1;
  S1Point center() const { return {a, s}; }
};

std::string to_string(BasicNbhd const& u);

class TopologyInstance {
 public:
  /// Full mask 1..index_bound.
  TopologyInstance(BaseKind base, WeightSequence weights);
  /// Throws PreconditionError on an unsorted mask, indices past the bound, or
  /// weights incompatible with the base.
  TopologyInstance(BaseKind base, WeightSequence weights, std::vector<std::size_t> mask);

  BaseKind base() const { return base_; }
  WeightSequence const& weights() const { return weights_; }
  std::vector<std::size_t> const& mask() const { return mask_; }
  bool in_mask(std::size_t n) const;
  bool multiplicative() const { return base_ == BaseKind::odd_naturals; }

  bool in_s(Rational const& x) const;
  bool in_s1(S1Point const& p) const { return p.a >= 0 && in_s(p.s); }
  Rational identity() const { return multiplicative() ? Rational(1) : Rational(0); }
  Rational op(Rational const& x, Rational const& y) const { return multiplicative() ? Rational(x * y) : Rational(x + y); }
  Rational inverse_op(Rational const& x, Rational const& y) const {
    return multiplicative() ? Rational(x / y) : Rational(x - y);
  }
  /// Product in S1: (x, u)(y, v) = (x + y, u ⊕ v).
  S1Point product(S1Point const& p, S1Point const& q) const { return {p.a + q.a, op(p.s, q.s)}; }
  /// w_{n_1} ⊕ ... ⊕ w_{n_k}.
  Rational combine(std::vector<std::size_t> const& indices) const;

 private:
  BaseKind base_;
  WeightSequence weights_;
  std::vector<std::size_t> mask_;
  std::vector<bool> in_mask_;
};

/// A found representation, or none, or undecidable within the index bound.
struct Representation {
  Decision status = Decision::no;
  std::vector<std::size_t> indices;  // increasing, when status == yes
};

/// Writes target as w_{m_1} ⊕ ... ⊕ w_{m_k} with min_index <= m_1 < ... < m_k
/// in the mask. double_exp reads the binary expansion, odd_primes factors by
/// trial division, explicit lists are searched exhaustively (and throw
/// PreconditionError when two representations exist).
Representation represent(TopologyInstance const& t, Rational const& target, std::size_t k,
                         std::size_t min_index);

struct Membership {
  Decision status = Decision::no;
  std::size_t k = 0;
  std::vector<std::size_t> indices;
};

/// Throws PreconditionError when the point is not in S1.
Membership member(TopologyInstance const& t, BasicNbhd const& u, S1Point const& p);

/// Points of U whose indices are all <= index_limit.
std::vector<S1Point> enumerate_basic(TopologyInstance const& t, BasicNbhd const& u, std::size_t index_limit);

// Condition (*) -----------------------------------------------------------

struct StarCollision {
  std::vector<std::size_t> lhs;  // multisets, sorted
  std::vector<std::size_t> rhs;
};

struct StarReport {
  Verdict verdict = Verdict::pass;
  std::size_t multisets_checked = 0;
  std::vector<StarCollision> collisions;
};

/// Equal sums (products) over multisets of indices <= index_bound with each
/// index used at most max_multiplicity times must come from equal multisets.
StarReport verify_star(WeightSequence const& w, std::size_t index_bound, std::size_t max_multiplicity);

/// Multiplicity 2 for additive weights, sets only for odd primes.
StarReport verify_star(WeightSequence const& w, std::size_t index_bound);

struct StarStarReport {
  Verdict verdict = Verdict::not_applicable;
  std::size_t alpha_t = 0;
  Integer window;  // s ranged over S with |s| <= window
  std::optional<std::pair<Integer, std::size_t>> counterexample;  // (s, n)
};

/// alpha_t for condition (**), checked on a window of s.
StarStarReport verify_star_star(TopologyInstance const& t, Rational const& t_elem, Integer window = 10000);

// Base, Hausdorff, separate continuity ---------------------------------------

struct InclusionReport {
  Verdict verdict = Verdict::pass;
  bool predicted = true;  // beta > m_k (beta >= alpha at the centre)
  std::optional<S1Point> escaping;
};

/// Checks inner ⊆ outer over inner's points with indices <= index_limit.
InclusionReport base_inclusion(TopologyInstance const& t, BasicNbhd const& inner, BasicNbhd const& outer,
                               std::size_t index_limit);

/// Every (u ⊖ s) that is a signed combination of distinct masked weights;
/// indices in plus are added, indices in minus subtracted.
struct SignedRepresentation {
  Decision status = Decision::no;
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
};

SignedRepresentation signed_represent(TopologyInstance const& t, Rational const& diff);

struct HausdorffWitness {
  Verdict verdict = Verdict::pass;
  BasicNbhd u;
  BasicNbhd v;
  SignedRepresentation difference;
  std::optional<S1Point> common;  // set if the check found an overlap
};

/// Disjoint neighbourhoods of x != y; disjointness checked over points with
/// indices <= index_limit.
HausdorffWitness hausdorff_witness(TopologyInstance const& t, S1Point const& x, S1Point const& y,
                                   std::size_t index_limit);

struct ContinuityReport {
  Verdict verdict = Verdict::pass;
  std::size_t points_checked = 0;
  std::optional<S1Point> counterexample;
};

/// M_{b,t}^{-1}(U(a + b, s ⊕ t, alpha)) = U(a, s, alpha) on points with indices <= index_limit.
ContinuityReport separate_continuity_identity(TopologyInstance const& t, S1Point const& shift,
                                              S1Point const& center, std::size_t alpha,
                                              std::size_t index_limit);

/// Signed combinations of at most `terms` distinct weights with indices <= index_limit
/// that land in S, sorted.
std::vector<Rational> signed_combinations(TopologyInstance const& t, std::size_t index_limit, std::size_t terms);

struct BasePropertyReport {
  Verdict verdict = Verdict::pass;
  std::size_t basic_sets = 0;
  std::size_t intersecting_pairs = 0;
  std::size_t point_checks = 0;
  std::optional<std::string> counterexample;
};

/// For all basic sets with centre (a <= a_max, s in signed_combinations) and
/// alpha <= index_limit + 1, every common point c of two of them (within the
/// truncation) has U(c, max(g1, g2)) inside both, with g_i = m_k + 1 from c's
/// representation (alpha at a centre). Inclusions are checked on points with
/// indices <= index_limit + 2.
BasePropertyReport verify_base_property(TopologyInstance const& t, std::size_t a_max, std::size_t index_limit,
                                        std::size_t combination_terms, std::size_t jobs = 1);

// Convergence ---------------------------------------------------------------

struct TermWitness {
  Decision status = Decision::no;  // membership in U(limit, 1)
  std::vector<std::size_t> indices;
};

struct ConvergenceCertificate {
  Verdict verdict = Verdict::pass;
  S1Point limit;
  std::size_t alpha_max = 0;
  std::map<std::size_t, std::size_t> thresholds;  // alpha -> N(alpha), 1-based term index
  std::vector<TermWitness> witnesses;
  /// First alpha without a member tail and the first term of its terminal
  /// non-member run.
  std::optional<std::pair<std::size_t, std::size_t>> divergence;
};

/// N(alpha) for alpha <= alpha_max over the finite prefix `sequence`.
ConvergenceCertificate check_convergence(TopologyInstance const& t, std::vector<S1Point> const& sequence,
                                         S1Point const& limit, std::size_t alpha_max);

/// Re-checks every claimed membership term by term.
bool validate_certificate(TopologyInstance const& t, std::vector<S1Point> const& sequence,
                          ConvergenceCertificate const& cert);

/// Candidate limits are the last term with up to `strip` weights (indices <=
/// the weight bound) removed; the certified candidate with the least sum of
/// thresholds wins. Every certified alpha must leave at least min_tail terms.
std::optional<ConvergenceCertificate> find_limit(TopologyInstance const& t, std::vector<S1Point> const& sequence,
                                                 std::size_t alpha_max, std::size_t min_tail = 1,
                                                 std::size_t strip = 2);

struct TransferReport {
  Verdict verdict = Verdict::pass;
  std::size_t alpha_s = 0;
  std::optional<ConvergenceCertificate> shifted;
  std::optional<S1Point> predicted;
  std::optional<ConvergenceCertificate> original;
  std::string note;
};

/// Given (x_n ⊕ a, u_n ⊕ s) -> (b, t), certifies (x_n, u_n) -> (b - a, t ⊖ s).
/// With no limit supplied the shifted limit is found by find_limit.
TransferReport convergence_transfer(TopologyInstance const& t, std::vector<S1Point> const& sequence,
                                    S1Point const& shift, std::size_t alpha_max,
                                    std::optional<S1Point> shifted_limit = std::nullopt);

// Continuum of topologies ----------------------------------------------------

struct DistinctWitness {
  std::size_t index = 0;     // n with (0, w_n) as the witness point
  bool in_second = true;     // n in mask2 \ mask1 (else mask1 \ mask2)
  bool converges_in_own = false;       // member of U(1, e, alpha) for every alpha <= n
  Decision other = Decision::yes;      // membership in U(1, e, 1) for the other mask
};

enum class Distinction { distinct, undetermined };

struct DistinctionReport {
  Distinction status = Distinction::undetermined;
  bool strong = false;
  std::size_t symmetric_difference = 0;
  std::vector<DistinctWitness> witnesses;
};

/// Compares the topologies of two masks through the points (0, w_n), n in
/// the symmetric difference up to `horizon`. strong when the symmetric
/// difference has at least max(2, horizon / 3) elements.
DistinctionReport distinguish_topologies(BaseKind base, WeightSequence const& weights,
                                         std::vector<std::size_t> const& mask1,
                                         std::vector<std::size_t> const& mask2, std::size_t horizon);

/// Greedy lexicode: subsets of {1..horizon} (as increasing index lists) with
/// pairwise symmetric difference >= min_distance, skipping the empty set.
std::vector<std::vector<std::size_t>> mask_family(std::size_t count, std::size_t horizon, std::size_t min_distance);

// Z_+ x odd naturals ≅ (N, .) --------------------------------------------------

Integer to_nmul(S1Point const& p);  // (k, n) -> 2^k n
S1Point from_nmul(Integer const& m);

/// Dyadic image under psi of a point of U: sorted exponents of its representation.
std::vector<std::size_t> psi_exponents(TopologyInstance const& t, BasicNbhd const& u, S1Point const& p);

}  // namespace semipredual
