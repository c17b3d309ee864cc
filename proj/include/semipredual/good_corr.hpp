#pragma once

// Sequence criterion for C_0(S, sigma) to be a predual: whenever (t_n s) or
// (s t_n) has a convergent subsequence, so does (t_n). Checked on finite
// prefixes for the discrete topology, the one-point compactification of N,
// and the weight topologies on Z_+ x S.
//
// Misses are reported as undetermined at the horizon, never as refutation.

#include <cstddef>
#include <string>
#include <vector>

#include "semipredual/semigroup.hpp"
#include "semipredual/topology.hpp"

namespace semipredual {

struct Subsequence {
  std::vector<std::size_t> indices;  // 1-based
  std::string limit;
};

struct GoodCorrReport {
  Verdict verdict = Verdict::undetermined;
  bool hypothesis_met = false;
  Subsequence product_subsequence;  // of (t_n s) or (s t_n)
  Subsequence subsequence;          // of (t_n)
  std::string note;
};

/// Discrete topology: convergent means eventually constant, so a value must
/// repeat at least min_support times within the prefix.
GoodCorrReport good_corr_discrete(Semigroup const& s, Element const& fixed, std::vector<Element> const& sequence,
                                  Side side, std::size_t min_support = 3);

/// One-point compactification of N inside N u {infinity}: a repeated value, or
/// a run increasing to infinity of length >= min_support (infinity itself
/// allowed at the end, repeatedly).
GoodCorrReport good_corr_one_point(Element const& fixed, std::vector<Element> const& sequence, Side side,
                                   std::size_t min_support = 3);

/// Weight topology: the prefix (t_n) itself is certified against candidate
/// limits for every alpha <= alpha_max, each tail holding >= min_support terms.
GoodCorrReport good_corr_sigma(TopologyInstance const& t, S1Point const& fixed, std::vector<S1Point> const& sequence,
                               Side side, std::size_t alpha_max, std::size_t min_support = 3);

}  // namespace semipredual
