#include "rays/interval_set.hpp"

#include <cmath>
#include <sstream>

#include "rays/error.hpp"

namespace rays {

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].hi < intervals_[i].lo) throw Error(Errc::domain, "interval with hi < lo");
    if (i > 0 && !(intervals_[i - 1].hi < intervals_[i].lo)) {
      throw Error(Errc::domain, "intervals must be sorted and disjoint");
    }
  }
}

Rational IntervalSet::measure() const {
  Rational m = 0;
  for (const auto& iv : intervals_) m += iv.length();
  return m;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::partition_point(intervals_.begin(), intervals_.end(),
                                 [&](const Interval& iv) { return iv.hi < x; });
  return it != intervals_.end() && it->lo <= x;
}

bool IntervalSet::covers(const IntervalSet& other) const {
  for (const auto& iv : other) {
    auto it = std::partition_point(intervals_.begin(), intervals_.end(),
                                   [&](const Interval& mine) { return mine.hi < iv.lo; });
    if (it == intervals_.end() || !(it->lo <= iv.lo && iv.hi <= it->hi)) return false;
  }
  return true;
}

std::string IntervalSet::to_csv() const {
  std::ostringstream os;
  os << "lo,hi\n";
  for (const auto& iv : intervals_) os << to_string(iv.lo) << ',' << to_string(iv.hi) << '\n';
  return os.str();
}

namespace {

Integer floor_scaled(const Rational& x, int k) {
  Integer num = x.get_num();
  num <<= static_cast<mp_bitcnt_t>(k);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  return q;
}

}  // namespace

std::vector<std::uint64_t> dyadic_cell_counts(const IntervalSet& s, std::span<const int> scales) {
  std::vector<std::uint64_t> counts;
  counts.reserve(scales.size());
  for (int k : scales) {
    if (k < 0 || k > 62) throw Error(Errc::domain, "box-count scale out of range");
    Integer last_cell = (Integer(1) << static_cast<mp_bitcnt_t>(k)) - 1;
    std::uint64_t total = 0;
    Integer prev_hi = -1;  // highest cell index already counted
    for (const auto& iv : s) {
      if (iv.lo < 0 || iv.hi > 1) throw Error(Errc::domain, "box counting needs intervals inside [0,1]");
      Integer a = floor_scaled(iv.lo, k);
      Integer b = floor_scaled(iv.hi, k);
      if (b > last_cell) b = last_cell;
      if (a > last_cell) a = last_cell;
      if (a <= prev_hi) a = prev_hi + 1;
      if (a <= b) {
        Integer n = b - a + 1;
        total += n.get_ui();
        prev_hi = b;
      }
    }
    counts.push_back(total);
  }
  return counts;
}

SlopeFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(Errc::domain, "mismatched fit data");
  const std::size_t n = x.size();
  if (n < 2) throw Error(Errc::degenerate_fit, "need at least two scales");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw Error(Errc::degenerate_fit, "abscissae are all equal");
  SlopeFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

BoxCount box_count(const IntervalSet& s, std::span<const int> scales) {
  if (s.empty()) throw Error(Errc::domain, "box count of an empty set");
  if (scales.size() < 2) throw Error(Errc::degenerate_fit, "need at least two scales");
  BoxCount out;
  out.scales.assign(scales.begin(), scales.end());
  out.counts = dyadic_cell_counts(s, scales);
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    xs.push_back(scales[i]);
    ys.push_back(std::log2(static_cast<double>(out.counts[i])));
  }
  out.slope = least_squares(xs, ys).slope;
  return out;
}

}  // namespace rays
