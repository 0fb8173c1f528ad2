#pragma once

// Dynamic rays of Q_c(z) = z^2 + c for real c by inverse iteration.

#include <span>
#include <string>
#include <vector>

#include "rays/angle.hpp"
#include "rays/bigfloat.hpp"
#include "rays/kneading.hpp"

namespace rays {

struct ComplexPoint {
  BigFloat re;
  BigFloat im;
  double abs() const;
};

/// points[k] lies on R_c(angles[k]), angles[k] = d^k(t), at potential
/// log(R0) / 2^(depth - k). points[k]^2 + c = points[k + 1] up to rounding;
/// points[0] is the innermost point and points[depth] the start.
struct RayPolyline {
  Rational c;
  Angle t;
  std::size_t depth = 0;
  mpfr_prec_t precision = 64;
  std::vector<ComplexPoint> points;
  std::vector<Angle> angles;

  const ComplexPoint& endpoint() const { return points.front(); }
  /// max_k |points[k]^2 + c - points[k + 1]|.
  double pullback_defect() const;
  /// "re,im,angle_num,angle_den" rows from the start inward.
  std::string to_csv() const;
};

/// Pulls R0 e^(2 pi i d^depth(t)) back depth times. The square root is picked
/// from d^k(t): R_c(s) lies in the upper half plane for 0 < s < 1/2 and on the
/// real axis beyond +-beta for s = 0, 1/2. Throws Errc::branch_ambiguity when
/// a preimage is too close to the real axis to tell the sides apart.
RayPolyline trace_ray(const RealParam& c, const Angle& t, std::size_t depth, double R0 = 100.0);

/// First root of Q_c^p(x) = x with multiplier modulus >= 1 met when moving
/// from c towards beta (above) or -beta. Above c this is the dynamic root, the
/// least point of J_c on ]c, beta]. Double precision.
double dynamic_root(const Rational& c, int period, bool above = true);

struct LandingResult {
  double residual = 0.0;  // |endpoint - target|
  double target = 0.0;    // c, or the dynamic root inside a component closure
  bool at_root = false;
  Angle tau;
};

/// Traces R_c(tau(c)). tau is exact when c lies in the closure of a table
/// component or at c = -2, else the nbits leading bits. The target is c, or
/// the dynamic root when c is a parabolic boundary point of a component.
/// Throws Errc::domain inside a hyperbolic component.
LandingResult verify_landing(const RealParam& c, std::size_t nbits, std::size_t depth,
                             std::span<const Opening> table = {});

}  // namespace rays
