#pragma once

// Biaccessible angles S_c on the real slice, the Feigenbaum-adjusted angle
// rho(c) and the explicit dimension bounds built from it.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rays/angle.hpp"
#include "rays/kneading.hpp"
#include "rays/realslice.hpp"

namespace rays {

/// t in S_c iff d^n(t) avoids ]tau_c, 1 - tau_c[ for all n >= 1. Exact.
bool s_c_membership(const Angle& t, const Rational& tau_c);

/// The same test for an angle known through its leading bits, steps 1..depth.
/// Throws Errc::insufficient_precision when a step is undecidable.
DepthVerdict s_c_membership(const BinaryWord& w, const Rational& tau_c, std::size_t depth);

struct RhoResult {
  BinaryWord word;                     // leading bits of rho(c)
  double value = 0.0;                  // rho to within 2^-|word|
  std::optional<Component> component;  // set when c lies in a closure H
};

/// tau(c*(H)) = A_H(tau_Feig) when c lies in the closure of a component H of
/// the table, tau(c) otherwise.
RhoResult rho(const RealParam& c, std::span<const Opening> table, std::size_t nbits = 64);

/// 1 - log2((16 rho - 5) / (32 rho - 13)) for 4/9 <= rho <= 1/2. Throws
/// Errc::out_of_window below 4/9 and Errc::domain above 1/2.
double ell(double rho_value);

/// Lower-bound function of Makarov's dimension theorem, 0 < delta < 1.
double makarov_lower(double delta);

struct DimBoundReport {
  RealParam c;
  Rational tau;              // exact, or the truncated word value
  bool tau_exact = false;
  double rho = 0.0;
  double sigma = 0.0;        // 1 - 2 tau
  double sigma_error = 0.0;  // twice the error in tau
  std::optional<double> ell;
  std::optional<double> ell_prime;
  std::optional<double> boxdim;  // box-count estimate of K_sigma, levels 8..20
  std::vector<std::string> flags;

  static std::string csv_header();
  std::string csv_row() const;
  std::string to_json() const;
};

DimBoundReport dim_report(const RealParam& c, std::span<const Opening> table, std::size_t nbits = 64);

}  // namespace rays
