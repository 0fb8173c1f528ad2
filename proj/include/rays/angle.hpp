#pragma once

// Exact angles on the circle R/Z and the doubling map.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rays {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num/den" or an integer literal into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// A rational point of R/Z, stored reduced with 0 <= num < den.
class Angle {
 public:
  Angle() : q_(0) {}
  explicit Angle(Rational q);
  Angle(long num, unsigned long den);

  static Angle parse(std::string_view text) { return Angle(parse_rational(text)); }

  const Rational& value() const { return q_; }
  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  bool is_dyadic() const;
  double to_double() const { return q_.get_d(); }
  std::string str() const { return to_string(q_); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) { return a.q_ <=> b.q_; }

 private:
  Rational q_;
};

enum class DyadicTail { zeros, ones };

/// Finite word over {0,1}. Bit i is the (i+1)-th binary digit after the point.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);
  static BinaryWord parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  void push_back(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit != 0)); }
  void append(const BinaryWord& w) { bits_.insert(bits_.end(), w.bits_.begin(), w.bits_.end()); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  BinaryWord prefix(std::size_t n) const;
  BinaryWord suffix_from(std::size_t start) const;
  BinaryWord complemented() const;

  /// The p-bit block as an integer, most significant bit first.
  Integer as_integer() const;
  /// Value of 0.w with a zero tail (exact dyadic).
  Rational value() const;
  /// Value of 0.w as a double (rounded).
  double to_double() const;
  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// t -> 2t mod 1.
Angle doubled(const Angle& t);
/// t -> 1 - t mod 1.
Angle complement(const Angle& t);
/// d^k(t).
Angle doubled_n(const Angle& t, unsigned long k);

struct OrbitCycle {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::vector<Angle> orbit;  // t, d(t), ..., up to the first repetition (exclusive)
};

/// Rational orbits under doubling are eventually periodic. The preperiod is the
/// 2-adic valuation of the denominator and the period is the order of 2 modulo
/// its odd part.
OrbitCycle orbit_cycle(const Angle& t);

/// First n binary digits of t. The tail flag only matters for dyadic t.
BinaryWord binary_expansion(const Angle& t, std::size_t n, DyadicTail tail = DyadicTail::zeros);

/// Eventually periodic expansion of a rational: t = 0.prefix (repetend)^inf.
struct PeriodicExpansion {
  BinaryWord prefix;
  BinaryWord repetend;
};
PeriodicExpansion periodic_expansion(const Angle& t, DyadicTail tail = DyadicTail::zeros);
/// Inverse of periodic_expansion; the repetend must be non-empty. Result is a
/// real number in [0,1] (0.(1)^inf evaluates to 1).
Rational from_periodic(const BinaryWord& prefix, const BinaryWord& repetend);

/// Circle metric min(|a-b|, 1-|a-b|).
Rational circle_distance(const Rational& a, const Rational& b);

/// Distance from t to the nearest odd multiple of 2^-n, n >= 1.
Rational dyadic_distance(const Angle& t, unsigned n);

/// 2-adic valuation of a positive integer.
unsigned long two_adic_valuation(const Integer& n);
/// Multiplicative order of 2 modulo an odd m > 1 (returns 1 for m == 1).
unsigned long order_of_two(const Integer& m);

}  // namespace rays
