#pragma once

// Arens products on l-infinity(N, max) through limit functionals along index
// subsequences, the WAP double-limit test, and the exact computations behind
// uniqueness of the predual of l1(N, max).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semipredual/l1.hpp"

namespace semipredual {

/// Stand-in for delta_omega, omega a non-principal ultrafilter: the limit
/// along a strictly increasing index list, truncated at `horizon`.
///
/// A single limit reads the window (H/2, H]; an iterated limit reads the outer
/// variable in (H/4, H/2] and the inner one in (H/2, H], so the inner index
/// always dominates. A window must hold at least two indices on which the
/// values agree exactly; anything else is undetermined.
struct LimitFunctional {
  std::vector<Natural> along;
  Natural horizon = 0;

  /// All n = residue mod modulus in [1, horizon].
  static LimitFunctional progression(Natural modulus, Natural residue, Natural horizon);
  static LimitFunctional all(Natural horizon) { return progression(1, 0, horizon); }
  /// Throws PreconditionError unless the list is strictly increasing within [1, horizon].
  static LimitFunctional from_list(std::vector<Natural> along, Natural horizon);

  std::vector<Natural> window(Natural lo, Natural hi) const;  // along ∩ (lo, hi]
};

std::string to_string(LimitFunctional const& phi);

/// lim_{s -> phi} f(s). For c0 + C1 functions this is beta; for sampled ones
/// the exactly stabilised value on the window, or nullopt. Throws
/// HorizonExceeded when a sampled f is shorter than the functional's horizon.
std::optional<Rational> eval_limit(LimitFunctional const& phi, BoundedFunction const& f);

/// lim_{s -> omega} lim_{t -> upsilon} f(max(s, t)).
std::optional<Rational> arens_box(LimitFunctional const& omega, LimitFunctional const& upsilon,
                                  BoundedFunction const& f);
/// lim_{t -> upsilon} lim_{s -> omega} f(max(s, t)).
std::optional<Rational> arens_diamond(LimitFunctional const& omega, LimitFunctional const& upsilon,
                                      BoundedFunction const& f);

enum class WapStatus { wap_consistent, not_wap, undetermined };

std::string_view to_string(WapStatus s);

struct WapWitness {
  std::size_t pair = 0;  // index into the pair list
  Rational box;
  Rational diamond;
};

struct WapVerdict {
  WapStatus status = WapStatus::undetermined;
  /// Membership certified by the c0 + C1 characterisation rather than observed.
  bool certified = false;
  std::size_t determined_pairs = 0;
  std::optional<WapWitness> witness;
};

using LimitPair = std::pair<LimitFunctional, LimitFunctional>;

WapVerdict wap_test(BoundedFunction const& f, std::vector<LimitPair> const& pairs, std::size_t jobs = 1);

/// `count` pairs mixing progressions and random index sets, all with the given horizon.
std::vector<LimitPair> random_pair_family(std::size_t count, Natural horizon, std::uint64_t seed);

struct TelescopingReport {
  Verdict verdict = Verdict::pass;
  std::optional<Natural> hypothesis_fails_at;  // least s with <a, x> != <delta_s . a, x>
  std::optional<Natural> identity_fails_at;
  /// s_max passes every support, so the limit s -> infinity was evaluated.
  bool limit_reached = false;
  Rational pairing;  // <a, x>
  Rational limit;    // beta * sum a_n, zero for x in c0
};

/// Over (N, max): under <a, x> = <delta_s . a, x> for s <= s_max, checks
/// sum_{n<=s} a_n x_n = x_s sum_{n<=s} a_n exactly for each s, and once s_max
/// passes every support, <a, x> = beta * sum a_n (so 0 when x lies in c0).
/// A failed hypothesis gives not_applicable with the offending s.
TelescopingReport telescoping_check(L1Vector const& a, BoundedFunction const& x, Natural s_max);

struct CounterexampleX {
  Verdict verdict = Verdict::not_applicable;
  bool single_term = false;
  Natural s0 = 0;
  std::optional<Natural> s1;
  Natural s = 0;
  L1Vector x;
  Rational pairing;          // <x, a>, must be 0
  Rational shifted_pairing;  // <x, delta_s . a>, must equal sum_{n<=s} a_n != 0
  Rational partial_sum;      // sum_{n<=s} a_n
};

/// x = a_{s0} delta_{s1} - a_{s1} delta_{s0} + delta_s with s > s1, a_s = 0 and
/// sum_{n<=s} a_n != 0; for a = c delta_{s0}, x = delta_s with s = s0 + 1.
/// not_applicable when a = 0 or sum a_n = 0 (with at least two terms).
CounterexampleX counterexample_x(L1Vector const& a);

}  // namespace semipredual
