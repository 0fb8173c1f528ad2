#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rays/angle.hpp"

namespace rays {

/// Closed interval [lo, hi] with exact endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted list of pairwise disjoint closed intervals.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Throws Errc::domain unless the intervals are sorted, non-empty and disjoint.
  explicit IntervalSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  auto begin() const { return intervals_.begin(); }
  auto end() const { return intervals_.end(); }

  Rational measure() const;
  bool contains(const Rational& x) const;
  /// True iff every interval of `other` lies inside one interval of *this.
  bool covers(const IntervalSet& other) const;

  /// "lo,hi" rows with exact rational endpoints.
  std::string to_csv() const;

 private:
  std::vector<Interval> intervals_;
};

/// Number of generation-k dyadic cells [j/2^k, (j+1)/2^k) meeting the set, for
/// each k in `scales`. The last cell of [0,1] is closed. Intervals must lie in
/// [0,1].
std::vector<std::uint64_t> dyadic_cell_counts(const IntervalSet& s, std::span<const int> scales);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares of y against x. Throws Errc::degenerate_fit with
/// fewer than two distinct abscissae.
SlopeFit least_squares(std::span<const double> x, std::span<const double> y);

struct BoxCount {
  std::vector<int> scales;
  std::vector<std::uint64_t> counts;
  double slope = 0.0;
};

/// Box-counting slope of log2 N(k) against k.
BoxCount box_count(const IntervalSet& s, std::span<const int> scales);

}  // namespace rays
