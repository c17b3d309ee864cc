#include "semipredual/good_corr.hpp"

#include <map>
#include <optional>

namespace semipredual {

namespace {

std::optional<Subsequence> constant_subsequence(std::vector<Element> const& seq, std::size_t min_support) {
  std::map<Element, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto& list = positions[seq[i]];
    list.push_back(i + 1);
    if (list.size() >= min_support) {
      return Subsequence{list, to_string(seq[i])};
    }
  }
  return std::nullopt;
}

// Longest run of terms strictly increasing among the finite values and then
// infinity, greedy from the front.
std::optional<Subsequence> escaping_subsequence(std::vector<Element> const& seq, std::size_t min_support) {
  Subsequence sub;
  std::optional<ExtendedNatural> last;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto const& x = std::get<ExtendedNatural>(seq[i]);
    if (!last || x.infinite || *last < x) {
      sub.indices.push_back(i + 1);
      last = x;
    }
  }
  if (sub.indices.size() < min_support) {
    return std::nullopt;
  }
  sub.limit = "infinity";
  return sub;
}

std::vector<Element> products(Semigroup const& s, Element const& fixed, std::vector<Element> const& seq, Side side) {
  std::vector<Element> out;
  out.reserve(seq.size());
  for (auto const& x : seq) {
    out.push_back(side == Side::left ? s.product(fixed, x) : s.product(x, fixed));
  }
  return out;
}

GoodCorrReport conclude(std::optional<Subsequence> hyp, std::optional<Subsequence> found) {
  GoodCorrReport r;
  if (!hyp) {
    r.verdict = Verdict::pass;
    r.note    = "hypothesis unmet within the prefix";
    return r;
  }
  r.hypothesis_met      = true;
  r.product_subsequence = std::move(*hyp);
  if (found) {
    r.verdict     = Verdict::pass;
    r.subsequence = std::move(*found);
    r.note        = "convergent subsequence found";
  } else {
    r.verdict = Verdict::undetermined;
    r.note    = "not found at horizon";
  }
  return r;
}

}  // namespace

GoodCorrReport good_corr_discrete(Semigroup const& s, Element const& fixed, std::vector<Element> const& sequence,
                                  Side side, std::size_t min_support) {
  auto prod = products(s, fixed, sequence, side);
  return conclude(constant_subsequence(prod, min_support), constant_subsequence(sequence, min_support));
}

GoodCorrReport good_corr_one_point(Element const& fixed, std::vector<Element> const& sequence, Side side,
                                   std::size_t min_support) {
  auto const s = Semigroup::nat_infty();
  for (auto const& x : sequence) {
    if (!s.contains(x)) {
      throw InstanceMismatch(to_string(x) + " is not in N u {infinity}");
    }
  }
  auto prod  = products(s, fixed, sequence, side);
  auto first = [&](std::vector<Element> const& seq) {
    auto c = constant_subsequence(seq, min_support);
    return c ? c : escaping_subsequence(seq, min_support);
  };
  return conclude(first(prod), first(sequence));
}

GoodCorrReport good_corr_sigma(TopologyInstance const& t, S1Point const& fixed, std::vector<S1Point> const& sequence,
                               Side side, std::size_t alpha_max, std::size_t min_support) {
  std::vector<S1Point> prod;
  for (auto const& x : sequence) {
    prod.push_back(side == Side::left ? t.product(fixed, x) : t.product(x, fixed));
  }
  auto as_subsequence = [&](std::optional<ConvergenceCertificate> const& cert) -> std::optional<Subsequence> {
    if (!cert) {
      return std::nullopt;
    }
    Subsequence sub;
    for (std::size_t i = 1; i <= sequence.size(); ++i) {
      sub.indices.push_back(i);
    }
    sub.limit = to_string(cert->limit);
    return sub;
  };
  return conclude(as_subsequence(find_limit(t, prod, alpha_max, min_support)),
                  as_subsequence(find_limit(t, sequence, alpha_max, min_support)));
}

}  // namespace semipredual
