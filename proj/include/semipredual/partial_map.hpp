#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semipredual {

using Natural = std::uint64_t;

/// A map N0 -> N0 that sends a finite set F (its injective domain) injectively
/// into N = {1, 2, ...} and everything else, including 0, to 0.
///
/// Products are composition: (f * g)(n) = f(g(n)). The empty map is the zero
/// of the semigroup.
class PartialMap {
 public:
  using Pair = std::pair<Natural, Natural>;

  PartialMap() = default;

  /// Throws PreconditionError if a point or value is 0, a point repeats, or
  /// two points share a value.
  explicit PartialMap(std::vector<Pair> pairs);
  PartialMap(std::initializer_list<Pair> pairs)
      : PartialMap(std::vector<Pair>(pairs)) {}

  /// Identity on the given set.
  static PartialMap identity_on(std::set<Natural> const& points);

  Natural operator()(Natural n) const;

  bool is_zero() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  /// Sorted by point.
  std::vector<Pair> const& pairs() const { return pairs_; }
  std::set<Natural> domain() const;
  std::set<Natural> image() const;
  Natural max_value() const;

  PartialMap inverse() const;

  friend PartialMap operator*(PartialMap const& f, PartialMap const& g);

  friend bool operator==(PartialMap const&, PartialMap const&) = default;
  friend auto operator<=>(PartialMap const&, PartialMap const&) = default;

  std::string str() const;

 private:
  struct Unchecked {};
  PartialMap(Unchecked, std::vector<Pair> pairs) : pairs_(std::move(pairs)) {}

  std::vector<Pair> pairs_;
};

/// Result of checking f f^-1 f = f and f^-1 f f^-1 = f^-1.
struct InverseCheck {
  PartialMap inverse;
  bool axioms_hold;
};

InverseCheck inverse_with_check(PartialMap const& f);

/// Every partial map with injective domain inside {1..max_point} and values
/// in {1..max_value}, in a deterministic order.
std::vector<PartialMap> all_partial_maps(Natural max_point, Natural max_value);

}  // namespace semipredual
