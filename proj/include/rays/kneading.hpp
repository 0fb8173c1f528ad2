#pragma once

// Itineraries of real quadratics x -> x^2 + c, the angle tau(c) of the
// dynamic root, and its inverse pi by bisection.

#include <mpfr.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rays/angle.hpp"
#include "rays/realslice.hpp"

namespace rays {

/// 128 unless RAYS_PRECISION_BITS holds a value in [32, 1<<20].
mpfr_prec_t default_precision();

/// Parses "-1.401155", "1e-3", "-7/4" or "-2" into an exact rational.
Rational parse_decimal(std::string_view text);
/// Decimal rendering rounded to `digits` places after the point.
std::string to_decimal(const Rational& q, int digits);

/// A real parameter c in [-2, 1/4], held exactly.
struct RealParam {
  Rational c;
  mpfr_prec_t precision = 128;

  RealParam() = default;
  explicit RealParam(Rational value, mpfr_prec_t prec = default_precision());
  static RealParam parse(std::string_view text, mpfr_prec_t prec = default_precision());
  double to_double() const { return c.get_d(); }
  std::string str(int digits = 20) const { return to_decimal(c, digits); }
};

/// c to 20 decimals. Its tau is the Thue-Morse angle, see feigenbaum_angle.
inline constexpr const char* kFeigenbaumDecimal = "-1.40115518909205060052";
/// Leading bits of tau(c_Feig): bit i is the parity of popcount(i).
BinaryWord feigenbaum_angle(std::size_t nbits);

struct Itinerary {
  std::vector<int> signs;  // +1 or -1
  std::size_t size() const { return signs.size(); }
  std::string str() const;  // "-++++"
};

/// Certified signs of x_0 = c, x_{j+1} = x_j^2 + c for j < N. Precision
/// doubles until every sign is certified, up to 64 times the start.
Itinerary itinerary(const RealParam& c, std::size_t N);

/// First nbits binary digits t_0 t_1 ... of tau(c): t_0 = 0 and t_{j+1} is
/// t_j or 1 - t_j as the j-th sign is + or -.
BinaryWord tau(const RealParam& c, std::size_t nbits);
BinaryWord tau_from_itinerary(const Itinerary& it);

struct ParabolicAngles {
  Angle root;           // tau at the root of H, theta_minus
  Angle left_endpoint;  // tau at the other end of H on the real line, omega_minus
};
ParabolicAngles tau_parabolic(const Opening& o);

struct PiResult {
  Rational c;                      // midpoint of the final bracket
  Rational lo;                     // tau(lo) >= t
  Rational hi;                     // tau(hi) <= t
  std::size_t certified_bits = 0;  // leading bits shared by tau(lo) and tau(hi)
};

/// c with |c - pi(t)| <= tol. Bisection continues past tol until tau(lo) and
/// tau(hi) agree on `min_bits` leading bits. Throws Errc::not_in_r when t is
/// not in R.
PiResult pi(const Angle& t, double tol, std::size_t min_bits = 48);

/// Certified lower bound for min |x_n| over 1 <= n <= N, x_1 = c.
double nonrecurrence_depth(const RealParam& c, std::size_t N);

struct Component {
  Opening opening;
  double multiplier = 0.0;  // of the attracting cycle
  bool right_of_center = true;
  bool on_boundary = false;  // root or doubling point, multiplier exactly +-1
  Angle tau;  // theta_minus right of the center, omega_minus left of it
};

/// The real hyperbolic component of period <= max_period containing c, if
/// any, including its root and doubling point. Throws
/// Errc::unresolved_location when a cycle is nearly but not exactly neutral.
std::optional<Component> locate_component(const RealParam& c, int max_period,
                                          std::span<const Opening> table);

}  // namespace rays
