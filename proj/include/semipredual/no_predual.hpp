#pragma once

// Finite identities behind the absence of a Hopf predual for l1 of the
// partial-map inverse semigroup. Products compose right to left:
// (hg)(n) = h(g(n)).

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semipredual/partial_map.hpp"
#include "semipredual/verdict.hpp"

namespace semipredual {

/// O(f, F') = { h : h(n) = f(n) on F, h(n) = 0 on F' }, F the injective domain of f.
struct OpenSetSpec {
  PartialMap f;
  std::set<Natural> fprime;

  /// Throws PreconditionError if F' meets F or contains 0.
  void validate() const;
};

bool o_member(OpenSetSpec const& spec, PartialMap const& h);

/// Identity on F, and the least naturals outside F u F' u f(F) sent in order onto F'.
PartialMap build_g(OpenSetSpec const& spec);

struct RightTranslationReport {
  Verdict verdict = Verdict::pass;
  std::size_t universe = 0;
  std::size_t members = 0;                  // |O(f, F')| within the universe
  std::optional<PartialMap> counterexample;  // h on exactly one side
};

/// { h in universe : h g = f } == O(f, F') within the universe.
RightTranslationReport verify_right_translation(OpenSetSpec const& spec, PartialMap const& g,
                                           std::vector<PartialMap> const& universe);

struct LemmaReport {
  Verdict verdict = Verdict::pass;
  std::size_t specs = 0;  // (f, F') pairs
  std::size_t universe = 0;
  std::optional<OpenSetSpec> failing;
  std::optional<PartialMap> counterexample;
};

/// Every f with domain in {1..max_point} and values <= max_value, every
/// F' inside {1..max_point} \ F, against the same universe of h.
LemmaReport verify_lemma_exhaustive(Natural max_point, Natural max_value, std::size_t jobs = 1);

struct FnBuild {
  std::optional<PartialMap> map;  // empty when rejected
  Natural threshold = 1;          // max f(F) + 1
  std::string reason;
};

/// f on F, n0 -> n, zero elsewhere. Throws PreconditionError if n0 is 0 or in F.
FnBuild build_fn(PartialMap const& f, Natural n0, Natural n);

/// Identity on F.
PartialMap build_p(PartialMap const& f);

struct FnpReport {
  Verdict verdict = Verdict::pass;
  std::size_t checked = 0;
  std::optional<Natural> failing_n;
};

/// f_n p = f for every valid n in [n_lo, n_hi], with p given explicitly so a
/// mutated p can serve as a negative control.
FnpReport verify_fnp(PartialMap const& f, Natural n0, PartialMap const& p, Natural n_lo, Natural n_hi);
inline FnpReport verify_fnp(PartialMap const& f, Natural n0, Natural n_lo, Natural n_hi) {
  return verify_fnp(f, n0, build_p(f), n_lo, n_hi);
}

struct AnnihilationReport {
  Verdict verdict = Verdict::pass;
  PartialMap h1;
  PartialMap h2;
  PartialMap h2gh1;
  std::size_t checked = 0;
  std::vector<Natural> nonzero_at;  // n with h2 f_n h1 != 0
  std::string detail;
};

/// h1 = {k0 -> k0}, h2 = {g(k0) -> g(k0)}: h2 g h1 != 0 while h2 f_n h1 = 0 for
/// valid n in range, except n = g(n0) when k0 = n0. Throws PreconditionError
/// unless g agrees with f on F, k0 is outside F and g(k0) != 0.
AnnihilationReport verify_annihilation(PartialMap const& f, Natural n0, PartialMap const& g, Natural k0,
                                       Natural n_lo, Natural n_hi);

}  // namespace semipredual
