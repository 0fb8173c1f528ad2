#pragma once

// Angles whose parameter rays meet the real slice, and the openings of real
// hyperbolic components.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rays/angle.hpp"
#include "rays/interval_set.hpp"

namespace rays {

struct Opening {
  int period = 1;
  unsigned long index = 0;
  Angle theta_minus;  // n/(2^p-1)
  Angle omega_minus;  // (n+1)/(2^p+1)
  Rational length;    // omega_minus - theta_minus

  Angle theta_plus() const { return complement(theta_minus); }
  Angle omega_plus() const { return complement(omega_minus); }
  /// True iff t lies in the open interval ]theta_minus, omega_minus[.
  bool contains(const Rational& t) const { return theta_minus.value() < t && t < omega_minus.value(); }

  std::string to_json() const;
  friend bool operator==(const Opening&, const Opening&) = default;
};

/// Candidate opening built from (p, n) without the acceptance test.
Opening make_opening(int p, unsigned long n);
/// The acceptance test of enumerate_openings for one candidate.
bool opening_accepted(int p, unsigned long n);

/// t is in R iff no forward image d^k(t), k >= 1, lies in ]t, 1-t[. Angles above
/// 1/2 are reduced to 1-t first.
bool in_R(const Angle& t);

struct DepthVerdict {
  bool survives = true;
  std::size_t step = 0;  // first rejecting k when !survives
};

/// Finite-depth test for an angle known only through its leading bits: the
/// true value lies in [0.w, 0.w + 2^-|w|]. Throws Errc::insufficient_precision
/// when some step k <= N cannot be decided from the bits.
DepthVerdict in_R_depth(const BinaryWord& w, std::size_t N);

/// All openings of period <= P sorted by theta_minus. `jobs` worker threads
/// split the candidates; the result does not depend on it.
std::vector<Opening> enumerate_openings(int P, unsigned jobs = 1);

Rational openings_length_sum(int P, unsigned jobs = 1);
Rational openings_length_sum(std::span<const Opening> openings);

/// Closed complement of the openings inside [0, 1/2].
IntervalSet cover_R(int P, unsigned jobs = 1);
IntervalSet cover_R(std::span<const Opening> openings);

BoxCount boxcount_dimension(const IntervalSet& s, std::span<const int> scales);

/// The opening containing t (strictly), if any.
std::optional<Opening> find_opening(std::span<const Opening> openings, const Rational& t);

}  // namespace rays
