#include "semipredual/partial_map.hpp"

#include <algorithm>
#include <functional>

#include "semipredual/verdict.hpp"

namespace semipredual {

PartialMap::PartialMap(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::set<Natural> values;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    auto const [n, v] = pairs_[i];
    if (n == 0 || v == 0) {
      throw PreconditionError("partial map: 0 is neither a point nor a value of the injective domain");
    }
    if (i > 0 && pairs_[i - 1].first == n) {
      throw PreconditionError("partial map: point " + std::to_string(n) + " listed twice");
    }
    if (!values.insert(v).second) {
      throw PreconditionError("partial map: value " + std::to_string(v) + " is hit twice");
    }
  }
}

PartialMap PartialMap::identity_on(std::set<Natural> const& points) {
  std::vector<Pair> pairs;
  for (Natural n : points) {
    pairs.emplace_back(n, n);
  }
  return PartialMap(std::move(pairs));
}

Natural PartialMap::operator()(Natural n) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{n, 0});
  if (it != pairs_.end() && it->first == n) {
    return it->second;
  }
  return 0;
}

std::set<Natural> PartialMap::domain() const {
  std::set<Natural> out;
  for (auto const& p : pairs_) {
    out.insert(p.first);
  }
  return out;
}

std::set<Natural> PartialMap::image() const {
  std::set<Natural> out;
  for (auto const& p : pairs_) {
    out.insert(p.second);
  }
  return out;
}

Natural PartialMap::max_value() const {
  Natural m = 0;
  for (auto const& p : pairs_) {
    m = std::max(m, p.second);
  }
  return m;
}

PartialMap PartialMap::inverse() const {
  std::vector<Pair> flipped;
  flipped.reserve(pairs_.size());
  for (auto const& [n, v] : pairs_) {
    flipped.emplace_back(v, n);
  }
  std::sort(flipped.begin(), flipped.end());
  return PartialMap(Unchecked{}, std::move(flipped));
}

PartialMap operator*(PartialMap const& f, PartialMap const& g) {
  // Points of g whose value lies in f's domain survive; injectivity of both
  // factors makes the composite injective.
  std::vector<PartialMap::Pair> out;
  for (auto const& [n, gn] : g.pairs_) {
    Natural fgn = f(gn);
    if (fgn != 0) {
      out.emplace_back(n, fgn);
    }
  }
  return PartialMap(PartialMap::Unchecked{}, std::move(out));
}

std::string PartialMap::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(pairs_[i].first) + "->" + std::to_string(pairs_[i].second);
  }
  return out + "}";
}

InverseCheck inverse_with_check(PartialMap const& f) {
  PartialMap inv = f.inverse();
  bool ok        = (f * inv * f == f) && (inv * f * inv == inv);
  return {std::move(inv), ok};
}

std::vector<PartialMap> all_partial_maps(Natural max_point, Natural max_value) {
  std::vector<PartialMap> out;
  std::vector<PartialMap::Pair> current;
  std::vector<bool> used(max_value + 1, false);
  std::function<void(Natural)> extend = [&](Natural point) {
    if (point > max_point) {
      out.emplace_back(current);
      return;
    }
    extend(point + 1);
    for (Natural v = 1; v <= max_value; ++v) {
      if (used[v]) {
        continue;
      }
      used[v] = true;
      current.emplace_back(point, v);
      extend(point + 1);
      current.pop_back();
      used[v] = false;
    }
  };
  extend(1);
  return out;
}

}  // namespace semipredual
