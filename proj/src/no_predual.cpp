#include "semipredual/no_predual.hpp"

#include <atomic>
#include <mutex>

#include "semipredual/parallel.hpp"

namespace semipredual {

void OpenSetSpec::validate() const {
  for (Natural n : fprime) {
    if (n == 0 || f(n) != 0) {
      throw PreconditionError("F' must avoid 0 and the domain of " + f.str());
    }
  }
}

bool o_member(OpenSetSpec const& spec, PartialMap const& h) {
  for (auto const& [n, v] : spec.f.pairs()) {
    if (h(n) != v) {
      return false;
    }
  }
  for (Natural n : spec.fprime) {
    if (h(n) != 0) {
      return false;
    }
  }
  return true;
}

PartialMap build_g(OpenSetSpec const& spec) {
  spec.validate();
  std::set<Natural> used = spec.f.domain();
  used.insert(spec.fprime.begin(), spec.fprime.end());
  for (Natural v : spec.f.image()) {
    used.insert(v);
  }
  std::vector<PartialMap::Pair> pairs;
  for (Natural n : spec.f.domain()) {
    pairs.emplace_back(n, n);
  }
  Natural fresh = 1;
  for (Natural target : spec.fprime) {
    while (used.count(fresh)) {
      ++fresh;
    }
    pairs.emplace_back(fresh++, target);
  }
  return PartialMap(std::move(pairs));
}

RightTranslationReport verify_right_translation(OpenSetSpec const& spec, PartialMap const& g,
                                           std::vector<PartialMap> const& universe) {
  RightTranslationReport r;
  r.universe = universe.size();
  for (auto const& h : universe) {
    bool const lhs = h * g == spec.f;
    bool const rhs = o_member(spec, h);
    r.members += rhs;
    if (lhs != rhs && !r.counterexample) {
      r.verdict        = Verdict::fail;
      r.counterexample = h;
    }
  }
  return r;
}

LemmaReport verify_lemma_exhaustive(Natural max_point, Natural max_value, std::size_t jobs) {
  LemmaReport r;
  auto const universe = all_partial_maps(max_point, max_value);
  r.universe          = universe.size();
  std::atomic<std::size_t> specs{0};
  std::mutex lock;
  parallel_for(universe.size(), jobs, [&](std::size_t i) {
    PartialMap const& f = universe[i];
    std::vector<Natural> free;
    for (Natural n = 1; n <= max_point; ++n) {
      if (f(n) == 0) {
        free.push_back(n);
      }
    }
    for (unsigned long mask = 0; mask < (1UL << free.size()); ++mask) {
      OpenSetSpec spec{f, {}};
      for (std::size_t j = 0; j < free.size(); ++j) {
        if (mask >> j & 1) {
          spec.fprime.insert(free[j]);
        }
      }
      ++specs;
      auto t = verify_right_translation(spec, build_g(spec), universe);
      if (t.verdict == Verdict::fail) {
        std::lock_guard guard(lock);
        if (!r.failing || spec.f < r.failing->f) {
          r.verdict        = Verdict::fail;
          r.failing        = spec;
          r.counterexample = t.counterexample;
        }
      }
    }
  });
  r.specs = specs;
  return r;
}

FnBuild build_fn(PartialMap const& f, Natural n0, Natural n) {
  if (n0 == 0 || f(n0) != 0) {
    throw PreconditionError("n0 must be a positive point outside the domain of " + f.str());
  }
  FnBuild b;
  b.threshold = f.max_value() + 1;
  if (n == 0) {
    b.reason = "n must be at least 1";
  } else if (f.image().count(n)) {
    b.reason = "n = " + std::to_string(n) + " collides with f(F); threshold " + std::to_string(b.threshold);
  } else {
    auto pairs = f.pairs();
    pairs.emplace_back(n0, n);
    b.map = PartialMap(std::move(pairs));
  }
  return b;
}

PartialMap build_p(PartialMap const& f) { return PartialMap::identity_on(f.domain()); }

FnpReport verify_fnp(PartialMap const& f, Natural n0, PartialMap const& p, Natural n_lo, Natural n_hi) {
  FnpReport r;
  for (Natural n = n_lo; n <= n_hi; ++n) {
    auto fn = build_fn(f, n0, n);
    if (!fn.map) {
      continue;
    }
    ++r.checked;
    if (*fn.map * p != f) {
      r.verdict   = Verdict::fail;
      r.failing_n = n;
      return r;
    }
  }
  return r;
}

AnnihilationReport verify_annihilation(PartialMap const& f, Natural n0, PartialMap const& g, Natural k0,
                                       Natural n_lo, Natural n_hi) {
  for (auto const& [k, v] : f.pairs()) {
    if (g(k) != v) {
      throw PreconditionError("g must agree with f on F");
    }
  }
  if (f(k0) != 0 || g(k0) == 0) {
    throw PreconditionError("k0 must lie outside F with g(k0) != 0");
  }
  AnnihilationReport r;
  r.h1    = PartialMap{{k0, k0}};
  r.h2    = PartialMap{{g(k0), g(k0)}};
  r.h2gh1 = r.h2 * g * r.h1;
  if (r.h2gh1.is_zero()) {
    r.verdict = Verdict::fail;
    r.detail  = "h2 g h1 = 0";
    return r;
  }
  for (Natural n = n_lo; n <= n_hi; ++n) {
    auto fn = build_fn(f, n0, n);
    if (!fn.map) {
      continue;
    }
    ++r.checked;
    if (!(r.h2 * *fn.map * r.h1).is_zero()) {
      r.nonzero_at.push_back(n);
      if (!(k0 == n0 && n == g(n0))) {
        r.verdict = Verdict::fail;
        r.detail  = "h2 f_n h1 != 0 at n = " + std::to_string(n);
      }
    }
  }
  return r;
}

}  // namespace semipredual
