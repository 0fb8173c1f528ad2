#include "rays/angle.hpp"

#include <algorithm>

#include "rays/error.hpp"

namespace rays {

namespace {

Rational frac(Rational q) {
  q.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    v.erase(0, v.find_first_not_of(" \t"));
    v.erase(v.find_last_not_of(" \t") + 1);
  };
  trim(s);
  if (s.empty()) throw Error(Errc::parse, "empty rational");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& v, bool allow_sign) {
    if (v.empty()) return false;
    std::size_t i = (allow_sign && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    return std::all_of(v.begin() + static_cast<long>(i), v.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  if (!valid(num, true) || !valid(den, false)) throw Error(Errc::parse, "malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw Error(Errc::parse, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Angle::Angle(Rational q) : q_(frac(q)) {}

Angle::Angle(long num, unsigned long den) {
  if (den == 0) throw Error(Errc::domain, "zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  q_ = frac(q);
}

bool Angle::is_dyadic() const {
  const Integer& d = q_.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b != 0;
}

BinaryWord BinaryWord::parse(std::string_view text) {
  BinaryWord w;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw Error(Errc::parse, "binary word may only contain 0 and 1");
    w.push_back(ch - '0');
  }
  return w;
}

BinaryWord BinaryWord::prefix(std::size_t n) const {
  n = std::min(n, bits_.size());
  return BinaryWord({bits_.begin(), bits_.begin() + static_cast<long>(n)});
}

BinaryWord BinaryWord::suffix_from(std::size_t start) const {
  start = std::min(start, bits_.size());
  return BinaryWord({bits_.begin() + static_cast<long>(start), bits_.end()});
}

BinaryWord BinaryWord::complemented() const {
  BinaryWord w(*this);
  for (auto& b : w.bits_) b ^= 1U;
  return w;
}

Integer BinaryWord::as_integer() const {
  Integer v = 0;
  for (auto b : bits_) {
    v <<= 1;
    v += b;
  }
  return v;
}

Rational BinaryWord::value() const {
  Integer den = 1;
  den <<= static_cast<mp_bitcnt_t>(bits_.size());
  Rational q(as_integer(), den);
  q.canonicalize();
  return q;
}

double BinaryWord::to_double() const {
  double v = 0.0;
  double scale = 0.5;
  for (auto b : bits_) {
    if (scale == 0.0) break;
    v += b * scale;
    scale *= 0.5;
  }
  return v;
}

std::string BinaryWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Angle doubled(const Angle& t) { return Angle(t.value() * 2); }

Angle complement(const Angle& t) { return Angle(Rational(1) - t.value()); }

Angle doubled_n(const Angle& t, unsigned long k) {
  Integer num = t.numerator();
  const Integer den = t.denominator();
  Integer two_k;
  mpz_powm_ui(two_k.get_mpz_t(), Integer(2).get_mpz_t(), k, den.get_mpz_t());
  Integer r = (num * two_k) % den;
  return Angle(Rational(r, den));
}

unsigned long two_adic_valuation(const Integer& n) {
  if (n == 0) return 0;
  return mpz_scan1(n.get_mpz_t(), 0);
}

unsigned long order_of_two(const Integer& m) {
  if (m == 1) return 1;
  Integer x = 2 % m;
  unsigned long k = 1;
  while (x != 1) {
    x = (x * 2) % m;
    ++k;
  }
  return k;
}

OrbitCycle orbit_cycle(const Angle& t) {
  const Integer den = t.denominator();
  unsigned long v = two_adic_valuation(den);
  Integer odd = den >> v;
  OrbitCycle out;
  out.preperiod = v;
  out.period = order_of_two(odd);
  out.orbit.reserve(out.preperiod + out.period);
  Angle x = t;
  for (std::size_t i = 0; i < out.preperiod + out.period; ++i) {
    out.orbit.push_back(x);
    x = doubled(x);
  }
  return out;
}

BinaryWord binary_expansion(const Angle& t, std::size_t n, DyadicTail tail) {
  BinaryWord w;
  const Integer den = t.denominator();
  Integer num = t.numerator();
  if (tail == DyadicTail::ones && t.is_dyadic()) {
    // 0.b1...bk1000... = 0.b1...bk0111...; t = 0 reads as 0.111... = 1.
    if (num == 0) {
      for (std::size_t i = 0; i < n; ++i) w.push_back(1);
      return w;
    }
    // Strict comparison yields the digits of t - 0 (limit from the left).
    for (std::size_t i = 0; i < n; ++i) {
      num *= 2;
      if (num > den) {
        w.push_back(1);
        num -= den;
      } else {
        w.push_back(0);
      }
    }
    return w;
  }
  for (std::size_t i = 0; i < n; ++i) {
    num *= 2;
    if (num >= den) {
      w.push_back(1);
      num -= den;
    } else {
      w.push_back(0);
    }
  }
  return w;
}

PeriodicExpansion periodic_expansion(const Angle& t, DyadicTail tail) {
  PeriodicExpansion e;
  if (t.is_dyadic()) {
    unsigned long k = two_adic_valuation(t.denominator());
    if (tail == DyadicTail::zeros) {
      e.prefix = binary_expansion(t, k, DyadicTail::zeros);
      e.repetend = BinaryWord({0});
    } else {
      e.prefix = binary_expansion(t, k, DyadicTail::ones);
      e.repetend = BinaryWord({1});
    }
    return e;
  }
  OrbitCycle oc = orbit_cycle(t);
  BinaryWord all = binary_expansion(t, oc.preperiod + oc.period);
  e.prefix = all.prefix(oc.preperiod);
  e.repetend = all.suffix_from(oc.preperiod);
  return e;
}

Rational from_periodic(const BinaryWord& prefix, const BinaryWord& repetend) {
  if (repetend.empty()) throw Error(Errc::domain, "empty repetend");
  Integer pre_den = 1;
  pre_den <<= static_cast<mp_bitcnt_t>(prefix.size());
  Integer rep_den = 1;
  rep_den <<= static_cast<mp_bitcnt_t>(repetend.size());
  rep_den -= 1;
  Rational tail(repetend.as_integer(), rep_den);
  Rational q = (Rational(prefix.as_integer()) + tail) / Rational(pre_den);
  q.canonicalize();
  return q;
}

Rational circle_distance(const Rational& a, const Rational& b) {
  Rational d = frac(a - b);
  Rational other = Rational(1) - d;
  return d < other ? d : other;
}

Rational dyadic_distance(const Angle& t, unsigned n) {
  if (n < 1) throw Error(Errc::domain, "dyadic generation must be >= 1");
  // Scale by 2^n: the nearest odd integer to y = 2^n t (mod 2) is 1.
  Integer two_n = 1;
  two_n <<= n;
  const Integer den = t.denominator();
  Integer two_den = den * 2;
  Integer r = (t.numerator() * two_n) % two_den;  // 2^n t mod 2, scaled by den
  Integer diff = r - den;
  if (diff < 0) diff = -diff;
  Rational out(diff, den * two_n);
  out.canonicalize();
  return out;
}

}  // namespace rays
