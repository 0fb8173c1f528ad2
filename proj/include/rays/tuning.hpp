#pragma once

// Tuning on angles: the block substitution A_H driven by the root words of a
// hyperbolic component, and its monotone left inverse psi_H.

#include <optional>
#include <vector>

#include "rays/angle.hpp"
#include "rays/interval_set.hpp"
#include "rays/realslice.hpp"

namespace rays {

struct TuningWords {
  int p = 2;
  BinaryWord theta0;
  BinaryWord theta1;

  /// Any pair of distinct length-p words with theta0 < theta1.
  static TuningWords raw(BinaryWord theta0, BinaryWord theta1);

  Rational theta_minus() const;  // 0.(theta0)^inf
  Rational theta_plus() const;   // 0.(theta1)^inf
  const BinaryWord& word(int bit) const { return bit ? theta1 : theta0; }
};

/// Throws Errc::domain for period 1 (the main cardioid acts as the identity).
TuningWords words_from_opening(const Opening& o);

/// Image of t read through one of its binary expansions. On the real line
/// 0 only has the zero tail; as an angle, 0 = 0.111... maps to theta_plus.
Rational tune_branch(const TuningWords& w, const Angle& t, DyadicTail tail);

struct TunedAngle {
  Rational lower;                // ones-tail image (the only one off dyadics)
  std::optional<Rational> upper;  // zero-tail image, dyadic t only
};
/// Both images for dyadic t (including 0), otherwise one.
TunedAngle tune_angle(const TuningWords& w, const Angle& t);

/// Lambda_b(x) = (theta_b + x) / 2^p: prepend one block.
Rational contraction(const TuningWords& w, int bit, const Rational& x);

/// psi(s) for theta_minus <= s <= theta_plus, a value in [0, 1]. Points in a
/// gap of A(T) map to the gap's dyadic label. Throws Errc::out_of_range
/// outside [theta_minus, theta_plus].
Rational staircase_psi(const TuningWords& w, const Rational& s);

/// Length of the widest gap, 0.theta1 theta0^inf - 0.theta0 theta1^inf.
Rational main_gap(const TuningWords& w);
/// C with psi(b) - psi(a) <= C (b - a)^(1/p): 4 g^(-1/p), g the main gap.
double holder_constant(const TuningWords& w);

/// The 2^(depth/p) image cylinders of words of length depth/p.
IntervalSet cantor_cylinders(const TuningWords& w, int depth);
/// Box-count slope of cantor_cylinders over scales p .. depth.
double cantor_boxdim(const TuningWords& w, int depth);

/// A_H-image of cover_R(P). With refine_bits = 0 each cover interval [a, b]
/// maps to its hull [A(a), A(b)]; with m > 0 it is first cut at the dyadics
/// of generation m.
IntervalSet tuned_R_cover(const TuningWords& w, int P, int refine_bits = 0, unsigned jobs = 1);

/// Box-count slope of tuned_R_cover(w, P, m) over scales p*P .. p*m, the
/// images of scales P .. m of the cover. Requires m > P.
double tuned_cover_slope(const TuningWords& w, int P, int refine_bits, unsigned jobs = 1);

}  // namespace rays
