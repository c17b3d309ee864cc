#include "semipredual/semigroup.hpp"

#include <algorithm>
#include <boost/functional/hash.hpp>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "semipredual/parallel.hpp"

namespace semipredual {

namespace {

std::size_t hash_integer(Integer const& x) {
  // cpp_int exposes its limbs; hashing the sign and limbs is exact and cheap.
  std::size_t seed = x.sign() < 0 ? 0x9e3779b9u : 0;
  auto const& backend = x.backend();
  for (std::size_t i = 0; i < backend.size(); ++i) {
    boost::hash_combine(seed, backend.limbs()[i]);
  }
  return seed;
}

std::size_t to_size(Integer const& x) {
  return static_cast<std::size_t>(boost::multiprecision::abs(x));
}

}  // namespace

std::size_t hash_element(Element const& e) {
  std::size_t seed = e.index();
  std::visit(
      [&seed](auto const& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TupleElement>) {
          for (auto const& c : x.coords) {
            boost::hash_combine(seed, hash_integer(c));
          }
        } else if constexpr (std::is_same_v<T, WordElement>) {
          for (auto l : x.letters) {
            boost::hash_combine(seed, l);
          }
        } else if constexpr (std::is_same_v<T, ExtendedNatural>) {
          boost::hash_combine(seed, x.infinite);
          if (!x.infinite) {
            boost::hash_combine(seed, hash_integer(x.value));
          }
        } else if constexpr (std::is_same_v<T, ReesElement>) {
          boost::hash_combine(seed, x.zero);
          if (!x.zero) {
            boost::hash_combine(seed, x.row);
            boost::hash_combine(seed, x.col);
            for (auto const& c : x.entry) {
              boost::hash_combine(seed, hash_integer(c));
            }
          }
        } else {
          for (auto const& [n, v] : x.pairs()) {
            boost::hash_combine(seed, n);
            boost::hash_combine(seed, v);
          }
        }
      },
      e);
  return seed;
}

std::string to_string(Element const& e) {
  return std::visit(
      [](auto const& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TupleElement>) {
          if (x.coords.size() == 1) {
            return x.coords[0].str();
          }
          std::string out = "(";
          for (std::size_t i = 0; i < x.coords.size(); ++i) {
            out += (i ? "," : "") + x.coords[i].str();
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, WordElement>) {
          std::string out;
          for (auto l : x.letters) {
            out += static_cast<char>('a' + l);
          }
          return out;
        } else if constexpr (std::is_same_v<T, ExtendedNatural>) {
          return x.infinite ? std::string("inf") : x.value.str();
        } else if constexpr (std::is_same_v<T, ReesElement>) {
          if (x.zero) {
            return "0";
          }
          std::string g;
          for (std::size_t i = 0; i < x.entry.size(); ++i) {
            g += (i ? "," : "") + x.entry[i].str();
          }
          return g + "e(" + std::to_string(x.row) + "," + std::to_string(x.col) + ")";
        } else {
          return x.str();
        }
      },
      e);
}

Element tuple(std::vector<Integer> coords) { return TupleElement{std::move(coords)}; }
Element nat(Integer value) { return TupleElement{{std::move(value)}}; }

Element word(std::string_view letters) {
  WordElement w;
  for (char c : letters) {
    w.letters.push_back(static_cast<std::uint8_t>(c - 'a'));
  }
  return w;
}

Element ext_nat(Integer value) { return ExtendedNatural{false, std::move(value)}; }
Element ext_infinity() { return ExtendedNatural{true, 0}; }

Element rees(std::vector<Integer> entry, std::size_t row, std::size_t col) {
  return ReesElement{false, std::move(entry), row, col};
}

Element rees_zero() { return ReesElement{true, {}, 0, 0}; }

std::string_view to_string(SemigroupKind kind) {
  switch (kind) {
    case SemigroupKind::zplus_k:
      return "zplus_k";
    case SemigroupKind::free:
      return "free";
    case SemigroupKind::nat_mul:
      return "nat_mul";
    case SemigroupKind::nat_max:
      return "nat_max";
    case SemigroupKind::nat_infty:
      return "nat_infty";
    case SemigroupKind::zplus_times_z:
      return "zplus_times_z";
    case SemigroupKind::rees:
      return "rees";
    case SemigroupKind::partial_maps:
      return "partial_maps";
  }
  return "?";
}

std::string_view to_string(Side side) { return side == Side::left ? "left" : "right"; }

// ReesGroup -------------------------------------------------------------------

std::vector<Integer> ReesGroup::normalize(std::vector<Integer> x) const {
  if (type == Type::cyclic) {
    for (auto& c : x) {
      c %= order;
      if (c < 0) {
        c += order;
      }
    }
  }
  return x;
}

std::vector<Integer> ReesGroup::add(std::vector<Integer> const& x, std::vector<Integer> const& y) const {
  std::vector<Integer> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] + y[i];
  }
  return normalize(std::move(out));
}

bool ReesGroup::contains(std::vector<Integer> const& x) const {
  if (type == Type::cyclic) {
    return x.size() == 1 && x[0] >= 0 && x[0] < order;
  }
  return x.size() == dim;
}

std::size_t ReesGroup::grade(std::vector<Integer> const& x) const {
  std::size_t g = 0;
  for (auto const& c : x) {
    g += to_size(c);
  }
  return g;
}

std::vector<std::vector<Integer>> ReesGroup::ball(std::size_t rank) const {
  std::vector<std::vector<Integer>> out;
  if (type == Type::cyclic) {
    for (Integer r = 0; r < order && r <= rank; ++r) {
      out.push_back({r});
    }
    return out;
  }
  // Z^d points with l1 norm <= rank, by increasing norm.
  for (std::size_t norm = 0; norm <= rank; ++norm) {
    std::vector<Integer> current(dim);
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t left) {
      if (i + 1 == dim) {
        if (left == 0) {
          current[i] = 0;
          out.push_back(current);
        } else {
          current[i] = -static_cast<long long>(left);
          out.push_back(current);
          current[i] = static_cast<long long>(left);
          out.push_back(current);
        }
        return;
      }
      for (std::size_t used = 0; used <= left; ++used) {
        if (used == 0) {
          current[i] = 0;
          fill(i + 1, left);
        } else {
          current[i] = -static_cast<long long>(used);
          fill(i + 1, left - used);
          current[i] = static_cast<long long>(used);
          fill(i + 1, left - used);
        }
      }
    };
    fill(0, norm);
  }
  return out;
}

// Semigroup -----------------------------------------------------------------

Semigroup Semigroup::zplus_k(std::size_t k) {
  if (k == 0) {
    throw PreconditionError("zplus_k needs k >= 1");
  }
  return Semigroup(SemigroupKind::zplus_k, k);
}

Semigroup Semigroup::free(std::size_t k) {
  if (k == 0 || k > 26) {
    throw PreconditionError("free semigroup needs 1 <= k <= 26 generators");
  }
  return Semigroup(SemigroupKind::free, k);
}

Semigroup Semigroup::nat_mul() { return Semigroup(SemigroupKind::nat_mul, 1); }
Semigroup Semigroup::nat_max() { return Semigroup(SemigroupKind::nat_max, 1); }
Semigroup Semigroup::nat_infty() { return Semigroup(SemigroupKind::nat_infty, 1); }
Semigroup Semigroup::zplus_times_z() { return Semigroup(SemigroupKind::zplus_times_z, 2); }
Semigroup Semigroup::partial_maps() { return Semigroup(SemigroupKind::partial_maps, 1); }

Semigroup Semigroup::rees(ReesData data) {
  if (data.rows == 0 || data.cols == 0) {
    throw PreconditionError("rees: I and J must be nonempty");
  }
  if (data.group.type == ReesGroup::Type::cyclic && data.group.order < 1) {
    throw PreconditionError("rees: cyclic group order must be positive");
  }
  if (data.sandwich.size() != data.cols) {
    throw PreconditionError("rees: sandwich matrix must have |J| rows");
  }
  for (auto& row : data.sandwich) {
    if (row.size() != data.rows) {
      throw PreconditionError("rees: sandwich matrix must have |I| columns");
    }
    for (auto& g : row) {
      g = data.group.normalize(g);
      if (!data.group.contains(g)) {
        throw PreconditionError("rees: sandwich entry is not a group element");
      }
    }
  }
  Semigroup s(SemigroupKind::rees, 1);
  s.rees_ = std::move(data);
  return s;
}

std::string Semigroup::name() const {
  switch (kind_) {
    case SemigroupKind::zplus_k:
      return "Z+^" + std::to_string(k_);
    case SemigroupKind::free:
      return "S_" + std::to_string(k_);
    case SemigroupKind::nat_mul:
      return "(N,*)";
    case SemigroupKind::nat_max:
      return "(N,max)";
    case SemigroupKind::nat_infty:
      return "N_inf";
    case SemigroupKind::zplus_times_z:
      return "Z+xZ";
    case SemigroupKind::rees:
      return "M(G;" + std::to_string(rees_.rows) + "," + std::to_string(rees_.cols) + ";P)";
    case SemigroupKind::partial_maps:
      return "PartialMaps";
  }
  return "?";
}

bool Semigroup::contains(Element const& x) const {
  switch (kind_) {
    case SemigroupKind::zplus_k: {
      auto const* t = std::get_if<TupleElement>(&x);
      return t && t->coords.size() == k_ &&
             std::all_of(t->coords.begin(), t->coords.end(), [](Integer const& c) { return c >= 0; });
    }
    case SemigroupKind::zplus_times_z: {
      auto const* t = std::get_if<TupleElement>(&x);
      return t && t->coords.size() == 2 && t->coords[0] >= 0;
    }
    case SemigroupKind::nat_mul:
    case SemigroupKind::nat_max: {
      auto const* t = std::get_if<TupleElement>(&x);
      return t && t->coords.size() == 1 && t->coords[0] >= 1;
    }
    case SemigroupKind::free: {
      auto const* w = std::get_if<WordElement>(&x);
      return w && !w->letters.empty() &&
             std::all_of(w->letters.begin(), w->letters.end(), [this](std::uint8_t l) { return l < k_; });
    }
    case SemigroupKind::nat_infty: {
      auto const* e = std::get_if<ExtendedNatural>(&x);
      return e && (e->infinite || e->value >= 1);
    }
    case SemigroupKind::rees: {
      auto const* r = std::get_if<ReesElement>(&x);
      if (!r) {
        return false;
      }
      if (r->zero) {
        return true;
      }
      return r->row >= 1 && r->row <= rees_.rows && r->col >= 1 && r->col <= rees_.cols &&
             rees_.group.contains(r->entry);
    }
    case SemigroupKind::partial_maps:
      return std::holds_alternative<PartialMap>(x);
  }
  return false;
}

void Semigroup::require(Element const& x) const {
  if (!contains(x)) {
    throw InstanceMismatch("element " + to_string(x) + " does not belong to " + name());
  }
}

Element Semigroup::product(Element const& x, Element const& y) const {
  require(x);
  require(y);
  switch (kind_) {
    case SemigroupKind::zplus_k:
    case SemigroupKind::zplus_times_z: {
      auto const& a = std::get<TupleElement>(x).coords;
      auto const& b = std::get<TupleElement>(y).coords;
      TupleElement out;
      out.coords.resize(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        out.coords[i] = a[i] + b[i];
      }
      return out;
    }
    case SemigroupKind::nat_mul:
      return nat(std::get<TupleElement>(x).coords[0] * std::get<TupleElement>(y).coords[0]);
    case SemigroupKind::nat_max:
      return nat(std::max(std::get<TupleElement>(x).coords[0], std::get<TupleElement>(y).coords[0]));
    case SemigroupKind::free: {
      WordElement out = std::get<WordElement>(x);
      auto const& tail = std::get<WordElement>(y).letters;
      out.letters.insert(out.letters.end(), tail.begin(), tail.end());
      return out;
    }
    case SemigroupKind::nat_infty: {
      auto const& a = std::get<ExtendedNatural>(x);
      auto const& b = std::get<ExtendedNatural>(y);
      if (a.infinite || b.infinite) {
        return ext_infinity();
      }
      return ext_nat(a.value + b.value);
    }
    case SemigroupKind::rees: {
      auto const& a = std::get<ReesElement>(x);
      auto const& b = std::get<ReesElement>(y);
      if (a.zero || b.zero) {
        return rees_zero();
      }
      auto const& p = rees_.sandwich[a.col - 1][b.row - 1];
      return semipredual::rees(rees_.group.add(rees_.group.add(a.entry, p), b.entry), a.row, b.col);
    }
    case SemigroupKind::partial_maps:
      return std::get<PartialMap>(x) * std::get<PartialMap>(y);
  }
  throw InstanceMismatch("unknown semigroup kind");
}

std::size_t Semigroup::grade(Element const& x) const {
  require(x);
  switch (kind_) {
    case SemigroupKind::zplus_k:
    case SemigroupKind::zplus_times_z:
    case SemigroupKind::nat_mul:
    case SemigroupKind::nat_max: {
      std::size_t g = 0;
      for (auto const& c : std::get<TupleElement>(x).coords) {
        g += to_size(c);
      }
      return g;
    }
    case SemigroupKind::free:
      return std::get<WordElement>(x).letters.size();
    case SemigroupKind::nat_infty: {
      auto const& e = std::get<ExtendedNatural>(x);
      return e.infinite ? 0 : to_size(e.value);
    }
    case SemigroupKind::rees: {
      auto const& r = std::get<ReesElement>(x);
      return r.zero ? 0 : rees_.group.grade(r.entry);
    }
    case SemigroupKind::partial_maps: {
      auto const& f = std::get<PartialMap>(x);
      Natural g     = f.max_value();
      for (auto const& p : f.pairs()) {
        g = std::max(g, p.first);
      }
      return static_cast<std::size_t>(g);
    }
  }
  return 0;
}

std::vector<Element> Semigroup::window(std::size_t rank) const {
  std::vector<Element> out;
  switch (kind_) {
    case SemigroupKind::zplus_k: {
      for (std::size_t total = 0; total <= rank; ++total) {
        std::vector<Integer> current(k_);
        std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t left) {
          if (i + 1 == k_) {
            current[i] = static_cast<unsigned long long>(left);
            out.push_back(tuple(current));
            return;
          }
          for (std::size_t c = left + 1; c-- > 0;) {
            current[i] = static_cast<unsigned long long>(c);
            fill(i + 1, left - c);
          }
        };
        fill(0, total);
      }
      break;
    }
    case SemigroupKind::zplus_times_z:
      for (std::size_t total = 0; total <= rank; ++total) {
        for (std::size_t a = 0; a <= total; ++a) {
          long long b = static_cast<long long>(total - a);
          out.push_back(tuple({Integer(a), Integer(-b)}));
          if (b != 0) {
            out.push_back(tuple({Integer(a), Integer(b)}));
          }
        }
      }
      break;
    case SemigroupKind::nat_mul:
    case SemigroupKind::nat_max:
      for (std::size_t n = 1; n <= rank; ++n) {
        out.push_back(nat(n));
      }
      break;
    case SemigroupKind::nat_infty:
      out.push_back(ext_infinity());
      for (std::size_t n = 1; n <= rank; ++n) {
        out.push_back(ext_nat(n));
      }
      break;
    case SemigroupKind::free: {
      std::vector<WordElement> level{WordElement{}};
      for (std::size_t len = 1; len <= rank; ++len) {
        std::vector<WordElement> next;
        next.reserve(level.size() * k_);
        for (auto const& w : level) {
          for (std::uint8_t l = 0; l < k_; ++l) {
            WordElement x = w;
            x.letters.push_back(l);
            next.push_back(std::move(x));
          }
        }
        for (auto const& w : next) {
          out.emplace_back(w);
        }
        level = std::move(next);
      }
      break;
    }
    case SemigroupKind::rees:
      if (rees_.with_zero) {
        out.push_back(rees_zero());
      }
      for (auto const& g : rees_.group.ball(rank)) {
        for (std::size_t i = 1; i <= rees_.rows; ++i) {
          for (std::size_t j = 1; j <= rees_.cols; ++j) {
            out.push_back(semipredual::rees(g, i, j));
          }
        }
      }
      break;
    case SemigroupKind::partial_maps: {
      auto maps = all_partial_maps(rank, rank);
      std::stable_sort(maps.begin(), maps.end(), [this](PartialMap const& a, PartialMap const& b) {
        return grade(a) < grade(b);
      });
      for (auto& m : maps) {
        out.emplace_back(std::move(m));
      }
      break;
    }
  }
  return out;
}

bool Semigroup::commutative() const {
  switch (kind_) {
    case SemigroupKind::zplus_k:
    case SemigroupKind::zplus_times_z:
    case SemigroupKind::nat_mul:
    case SemigroupKind::nat_max:
    case SemigroupKind::nat_infty:
      return true;
    case SemigroupKind::free:
      return k_ == 1;
    case SemigroupKind::rees:
    case SemigroupKind::partial_maps:
      return false;
  }
  return false;
}

std::optional<Element> Semigroup::zero() const {
  switch (kind_) {
    case SemigroupKind::rees:
      return rees_zero();
    case SemigroupKind::partial_maps:
      return PartialMap{};
    case SemigroupKind::nat_infty:
      return ext_infinity();
    default:
      return std::nullopt;
  }
}

std::optional<std::vector<Element>> Semigroup::generators() const {
  std::vector<Element> gens;
  switch (kind_) {
    case SemigroupKind::zplus_k:
      for (std::size_t i = 0; i < k_; ++i) {
        std::vector<Integer> e(k_, 0);
        e[i] = 1;
        gens.push_back(tuple(std::move(e)));
      }
      return gens;
    case SemigroupKind::free:
      for (std::size_t i = 0; i < k_; ++i) {
        gens.push_back(word(std::string(1, static_cast<char>('a' + i))));
      }
      return gens;
    case SemigroupKind::zplus_times_z:
      return std::vector<Element>{tuple({1, 0}), tuple({0, 1}), tuple({0, -1})};
    default:
      return std::nullopt;
  }
}

bool Semigroup::grade_monotone() const {
  return kind_ == SemigroupKind::zplus_k || kind_ == SemigroupKind::free;
}

// Structural checks ----------------------------------------------------------

namespace {

struct FibreScan {
  std::size_t largest = 0;
  std::optional<TranslationWitness> witness;
};

// Groups the translates of `window` by `translator` and returns the largest
// fibre, with a witness when it reaches `threshold`.
FibreScan scan_translation(Semigroup const& s, std::vector<Element> const& window,
                           Element const& translator, Side side, std::size_t threshold) {
  std::vector<std::pair<std::size_t, std::uint32_t>> hashed;
  hashed.reserve(window.size());
  std::vector<Element> images;
  images.reserve(window.size());
  for (std::uint32_t i = 0; i < window.size(); ++i) {
    images.push_back(side == Side::left ? s.product(translator, window[i])
                                        : s.product(window[i], translator));
    hashed.emplace_back(hash_element(images.back()), i);
  }
  std::sort(hashed.begin(), hashed.end());
  FibreScan out;
  for (std::size_t lo = 0; lo < hashed.size();) {
    std::size_t hi = lo + 1;
    while (hi < hashed.size() && hashed[hi].first == hashed[lo].first) {
      ++hi;
    }
    if (hi - lo >= 2) {
      // Partition the equal-hash run into genuine equality classes.
      std::vector<bool> taken(hi - lo, false);
      for (std::size_t a = lo; a < hi; ++a) {
        if (taken[a - lo]) {
          continue;
        }
        std::vector<std::uint32_t> cls{hashed[a].second};
        for (std::size_t b = a + 1; b < hi; ++b) {
          if (!taken[b - lo] && images[hashed[b].second] == images[hashed[a].second]) {
            taken[b - lo] = true;
            cls.push_back(hashed[b].second);
          }
        }
        if (cls.size() > out.largest) {
          out.largest = cls.size();
          if (cls.size() >= threshold) {
            std::sort(cls.begin(), cls.end());
            TranslationWitness w{translator, side, images[cls.front()], {}};
            for (auto idx : cls) {
              w.preimages.push_back(window[idx]);
            }
            out.witness = std::move(w);
          }
        }
      }
    } else if (out.largest == 0) {
      out.largest = 1;
    }
    lo = hi;
  }
  return out;
}

TranslationReport translation_check(Semigroup const& s, std::size_t rank, std::size_t threshold,
                                    std::size_t jobs) {
  auto const window = s.window(rank);
  TranslationReport report;
  report.window_rank = rank;
  report.window_size = window.size();
  std::vector<Side> sides{Side::left};
  if (!s.commutative()) {
    sides.push_back(Side::right);
  }
  std::vector<FibreScan> scans(window.size() * sides.size());
  parallel_for(scans.size(), jobs, [&](std::size_t i) {
    scans[i] = scan_translation(s, window, window[i / sides.size()], sides[i % sides.size()], threshold);
  });
  for (auto& scan : scans) {
    report.largest_fibre = std::max(report.largest_fibre, scan.largest);
    if (scan.witness && !report.witness) {
      report.witness = std::move(scan.witness);
    }
  }
  // Keep the biggest witness so failures are as explicit as possible.
  for (auto& scan : scans) {
    if (scan.witness && scan.witness->preimages.size() > report.witness->preimages.size()) {
      report.witness = std::move(scan.witness);
    }
  }
  report.verdict = report.witness ? Verdict::fail : Verdict::pass;
  return report;
}

}  // namespace

TranslationReport is_weakly_cancellative_window(Semigroup const& s, std::size_t window_rank,
                                                std::size_t blowup_threshold, std::size_t jobs) {
  if (window_rank < 1) {
    throw PreconditionError("window rank must be >= 1");
  }
  return translation_check(s, window_rank, std::max<std::size_t>(2, blowup_threshold), jobs);
}

TranslationReport is_cancellative_window(Semigroup const& s, std::size_t window_rank, std::size_t jobs) {
  if (window_rank < 1) {
    throw PreconditionError("window rank must be >= 1");
  }
  auto report = translation_check(s, window_rank, 2, jobs);
  if (report.witness && report.witness->preimages.size() > 2) {
    report.witness->preimages.resize(2);
  }
  return report;
}

std::vector<DivisorReport> left_divisor_scan(Semigroup const& s, std::vector<Element> const& targets,
                                             std::size_t window_rank, std::size_t jobs) {
  auto const window = s.window(window_rank);
  std::unordered_map<Element, std::size_t, ElementHash> target_index;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    target_index.emplace(targets[i], i);
  }
  std::vector<std::size_t> grades(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    grades[i] = s.grade(window[i]);
  }
  // For every (target, divisor) the least rank at which a cofactor appears.
  std::vector<std::unordered_map<std::uint32_t, std::size_t>> witness_rank(targets.size());
  std::vector<std::vector<std::pair<std::size_t, std::pair<std::uint32_t, std::size_t>>>> found(window.size());
  parallel_for(window.size(), jobs, [&](std::size_t ti) {
    for (std::size_t ri = 0; ri < window.size(); ++ri) {
      auto it = target_index.find(s.product(window[ti], window[ri]));
      if (it != target_index.end()) {
        found[ti].push_back({it->second, {static_cast<std::uint32_t>(ti), std::max(grades[ti], grades[ri])}});
      }
    }
  });
  for (auto const& hits : found) {
    for (auto const& [target, pr] : hits) {
      auto [it, inserted] = witness_rank[target].emplace(pr.first, pr.second);
      if (!inserted) {
        it->second = std::min(it->second, pr.second);
      }
    }
  }
  std::vector<DivisorReport> reports;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    DivisorReport r;
    r.target          = targets[i];
    r.window_rank     = window_rank;
    r.comparison_rank = std::max(s.grade(targets[i]), (window_rank + 1) / 2);
    std::vector<std::uint32_t> idx;
    for (auto const& [t, rank] : witness_rank[i]) {
      idx.push_back(t);
      if (rank <= r.comparison_rank) {
        ++r.count_at_comparison_rank;
      }
    }
    std::sort(idx.begin(), idx.end());
    for (auto t : idx) {
      r.divisors.push_back(window[t]);
    }
    if (r.comparison_rank >= window_rank) {
      r.verdict = Verdict::undetermined;
    } else {
      r.verdict = r.count_at_comparison_rank == r.divisors.size() ? Verdict::pass : Verdict::fail;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

DivisorReport is_finitely_left_divisible_window(Semigroup const& s, Element const& target,
                                                std::size_t window_rank) {
  if (s.grade(target) > window_rank) {
    throw PreconditionError("target " + to_string(target) + " is outside the window");
  }
  return left_divisor_scan(s, {target}, window_rank).front();
}

LengthResult length(Semigroup const& s, Element const& x, std::size_t max_depth) {
  auto gens = s.generators();
  if (!gens) {
    throw PreconditionError(s.name() + " declares no finite generating set");
  }
  std::size_t const bound = s.grade(x);
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> frontier;
  for (auto const& g : *gens) {
    if (seen.insert(g).second) {
      frontier.push_back(g);
    }
  }
  LengthResult out;
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    out.depth_searched = depth;
    if (std::find(frontier.begin(), frontier.end(), x) != frontier.end()) {
      out.status = Decision::yes;
      out.length = depth;
      return out;
    }
    std::vector<Element> next;
    for (auto const& f : frontier) {
      for (auto const& g : *gens) {
        Element y = s.product(f, g);
        if (s.grade_monotone() && s.grade(y) > bound) {
          continue;
        }
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    if (next.empty()) {
      out.status = Decision::no;
      return out;
    }
    frontier = std::move(next);
  }
  out.status = Decision::undetermined;
  return out;
}

Verdict check_associativity(Semigroup const& s, std::size_t window_rank,
                            std::optional<std::vector<Element>>* counterexample) {
  auto const w = s.window(window_rank);
  for (auto const& x : w) {
    for (auto const& y : w) {
      Element xy = s.product(x, y);
      for (auto const& z : w) {
        if (s.product(xy, z) != s.product(x, s.product(y, z))) {
          if (counterexample) {
            *counterexample = std::vector<Element>{x, y, z};
          }
          return Verdict::fail;
        }
      }
    }
  }
  return Verdict::pass;
}

}  // namespace semipredual
