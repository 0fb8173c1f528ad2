#pragma once

// The compact sets K_sigma of angles that keep distance >= sigma 2^-n from
// every generation-n dyadic rational, n >= 2, and their finite levels.

#include <optional>
#include <string>
#include <vector>

#include "rays/angle.hpp"
#include "rays/interval_set.hpp"

namespace rays {

class SigmaParam {
 public:
  /// Throws Errc::domain unless 0 < sigma < 1.
  explicit SigmaParam(Rational sigma);
  /// sigma = 2^-p, p >= 2.
  static SigmaParam dyadic(int p);

  const Rational& sigma() const { return sigma_; }
  std::optional<int> dyadic_exponent() const { return p_; }
  double to_double() const { return sigma_.get_d(); }

 private:
  Rational sigma_;
  std::optional<int> p_;
};

/// One level K^n. Arcs are stored lifted to the line: the arc through 0 is
/// written [lo, hi] with 1/2 < lo < 1 < hi.
struct KsigmaLevel {
  int n = 2;
  IntervalSet set;

  /// The same set cut at 0 into intervals of [0, 1].
  IntervalSet unwrapped() const;
};

/// Levels cap out when sigma's denominator times 2^n no longer fits in 60 bits.
KsigmaLevel build_level(const SigmaParam& sp, int n);
std::vector<KsigmaLevel> build_levels(const SigmaParam& sp, int n_max);
/// Number of intervals at each level 2..n_max, without materialising rationals.
std::vector<std::uint64_t> level_counts(const SigmaParam& sp, int n_max);

struct ClauseResult {
  std::string clause;  // "i" .. "v"
  int level = 0;
  std::size_t checked = 0;
  bool pass = true;
  std::string witness;  // first failing interval, or empty
};

struct StructureReport {
  int p = 2;
  int n_max = 3;
  std::vector<ClauseResult> clauses;
  bool distinguished_ratio_attained = false;  // (1-2s)/(1-s)
  bool case1_ratio_attained = false;          // (1-3s)/(1-2s)
  std::string distinguished_witness;
  std::string case1_witness;

  bool all_pass() const;
  std::string to_json() const;
};

/// Exact check of the five structure clauses at levels 2..n_max. Clauses
/// (iii) and (v) compare level n with level n+1, so they run for n < n_max.
StructureReport verify_structure(const SigmaParam& sp, int n_max);

/// lambda = (3-4s)/(3-8s).
Rational structure_lambda(const SigmaParam& sp);
/// max(0, 1 - log2 lambda). For sigma >= 3/8 returns 0, or throws
/// Errc::domain when `strict`.
double dim_lower_bound(const SigmaParam& sp, bool strict = false);

struct WeightedInterval {
  Interval interval;  // lifted, as in KsigmaLevel
  Rational weight;
};

/// Uniform-density probability measure on K^n built level by level. The
/// restricted variant starts at level p+1 from the intervals inside
/// [(1-s)/2, (1+s)/2].
std::vector<WeightedInterval> mass_distribution(const SigmaParam& sp, int n, bool restricted = false);

/// ||t||_k >= sigma 2^-k for 2 <= k <= depth.
bool membership(const Angle& t, const SigmaParam& sp, int depth);
/// Same test on the dyadic 0.w.
bool membership(const BinaryWord& w, const SigmaParam& sp, int depth);
/// Depth-free test for rational t: the orbit is finite, so checking one cycle
/// decides membership in K_sigma itself.
bool membership_exact(const Angle& t, const SigmaParam& sp);

enum class RunVerdict { member, nonmember, insufficient };
std::string_view to_string(RunVerdict v);

/// Symbolic test for sigma = 2^-p on any angle whose expansion starts with w,
/// to depth |w| - p: a maximal run of at least p equal bits may only start at
/// position 1 or 2. A run that lands exactly on a boundary point, with the
/// deciding tail beyond the word, gives `insufficient`.
RunVerdict membership_runlength(const BinaryWord& w, int p);

struct PorosityWitness {
  Interval gap;    // open interval J
  int generation;  // J is centred on a dyadic of this generation
};

/// Gap J inside I, disjoint from K_sigma, with m(J) >= (sigma/4) m(I).
/// Requires 0 < m(I) <= 1.
PorosityWitness porosity_witness(const SigmaParam& sp, const Interval& I);

/// Least-squares slope of log2 |K^n| against n for n in [lo, hi].
double boxdim_estimate(const SigmaParam& sp, int lo, int hi);

}  // namespace rays
