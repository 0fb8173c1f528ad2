#include "rays/kneading.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>

#include "rays/bigfloat.hpp"
#include "rays/error.hpp"

namespace rays {

namespace {

constexpr int kPrecisionDoublings = 6;

// Closed interval with MPFR endpoints, rounded outward.
struct Enclosure {
  BigFloat lo;
  BigFloat hi;

  explicit Enclosure(mpfr_prec_t prec) : lo(prec), hi(prec) {}

  int sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }
  bool exact_zero() const { return lo.is_zero() && hi.is_zero(); }
};

Enclosure enclose(const Rational& q, mpfr_prec_t prec) {
  Enclosure e(prec);
  mpfr_set_q(e.lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(e.hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return e;
}

// x <- x^2 + c
void step(Enclosure& x, const Enclosure& c, mpfr_prec_t prec, BigFloat& t1, BigFloat& t2) {
  int s = x.sign();
  if (s > 0) {
    mpfr_sqr(t1.get(), x.lo.get(), MPFR_RNDD);
    mpfr_sqr(t2.get(), x.hi.get(), MPFR_RNDU);
  } else if (s < 0) {
    mpfr_sqr(t1.get(), x.hi.get(), MPFR_RNDD);
    mpfr_sqr(t2.get(), x.lo.get(), MPFR_RNDU);
  } else {
    mpfr_set_zero(t1.get(), 1);
    mpfr_sqr(t2.get(), x.lo.get(), MPFR_RNDU);
    BigFloat other(prec);
    mpfr_sqr(other.get(), x.hi.get(), MPFR_RNDU);
    if (cmp(other, t2) > 0) mpfr_swap(t2.get(), other.get());
  }
  mpfr_add(x.lo.get(), t1.get(), c.lo.get(), MPFR_RNDD);
  mpfr_add(x.hi.get(), t2.get(), c.hi.get(), MPFR_RNDU);
}

void check_escape(const Enclosure& x) {
  if (cmp(x.lo, 2.0) > 0 || cmp(x.hi, -2.0) < 0) throw Error(Errc::escape, "orbit left [-2, 2]");
}

void check_param(const Rational& c) {
  if (c < -2 || c > Rational(1, 4)) throw Error(Errc::domain, "c must lie in [-2, 1/4]");
}

mpfr_prec_t start_precision(const RealParam& p) {
  std::size_t need = mpz_sizeinbase(p.c.get_num_mpz_t(), 2) + mpz_sizeinbase(p.c.get_den_mpz_t(), 2) + 32;
  return std::max<mpfr_prec_t>(p.precision, static_cast<mpfr_prec_t>(need));
}

// Signs of x_0 .. x_{N-1} at one precision; returns the index of the first
// uncertain sign, or N on success.
std::size_t try_signs(const Rational& c, std::size_t N, mpfr_prec_t prec, std::vector<int>& out) {
  out.clear();
  Enclosure cc = enclose(c, prec);
  Enclosure x = cc;
  BigFloat t1(prec), t2(prec);
  for (std::size_t j = 0; j < N; ++j) {
    check_escape(x);
    int s = x.sign();
    if (s == 0) {
      if (x.exact_zero()) throw Error(Errc::hit_critical_point, "x_" + std::to_string(j) + " = 0");
      return j;
    }
    out.push_back(s);
    if (j + 1 < N) step(x, cc, prec, t1, t2);
  }
  return N;
}

// Double-precision cycle search for the plateau and location logic.
struct Cycle {
  double point = 0.0;
  double multiplier = 0.0;
  double residual = 1.0;
};

double iterate(double x, double c, int k) {
  for (int i = 0; i < k; ++i) x = x * x + c;
  return x;
}

// Fixed point of Q^d near the attractor of the critical orbit.
Cycle cycle_near_attractor(double c, int d) {
  double x = iterate(0.0, c, 20000 + (20000 % d == 0 ? 0 : d - 20000 % d));
  auto F = [&](double z) { return iterate(z, c, d) - z; };
  double r = x;
  double y = iterate(x, c, d);
  double fx = F(x), fy = F(y);
  if (fx == 0.0) {
    r = x;
  } else if (fx * fy < 0) {
    double a = x, b = y, fa = fx;
    for (int i = 0; i < 200 && a != b; ++i) {
      double m = 0.5 * (a + b);
      double fm = F(m);
      if (fm == 0.0) {
        a = b = m;
        break;
      }
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    r = 0.5 * (a + b);
  } else {
    for (int i = 0; i < 100; ++i) {
      double z = r, dz = 1.0;
      for (int k = 0; k < d; ++k) {
        dz *= 2 * z;
        z = z * z + c;
      }
      double g = z - r, dg = dz - 1.0;
      if (dg == 0.0) break;
      double next = r - g / dg;
      if (!std::isfinite(next)) break;
      if (next == r) break;
      r = next;
    }
  }
  Cycle out;
  out.point = r;
  double z = r, lam = 1.0;
  for (int k = 0; k < d; ++k) {
    lam *= 2 * z;
    z = z * z + c;
  }
  out.multiplier = lam;
  out.residual = std::fabs(z - r);
  return out;
}

// Point of the critical orbit after about 512 steps, a multiple of d. When
// tau(c) follows a period-d angle for 1024 bits this sits next to the cycle.
BigFloat lingering_point(const BigFloat& c, int d, mpfr_prec_t prec) {
  BigFloat x(prec);
  const int steps = d * std::max(1, 512 / d);
  for (int k = 0; k < steps; ++k) {
    mpfr_sqr(x.get(), x.get(), MPFR_RNDN);
    mpfr_add(x.get(), x.get(), c.get(), MPFR_RNDN);
  }
  return x;
}

// Q^d(x) with its first two derivatives.
struct Jet {
  BigFloat v, d1, d2;
};

Jet jet(const BigFloat& c, const BigFloat& x0, int d, mpfr_prec_t prec) {
  Jet j{BigFloat(prec), BigFloat(prec), BigFloat(prec)};
  BigFloat t(prec);
  mpfr_set(j.v.get(), x0.get(), MPFR_RNDN);
  mpfr_set_ui(j.d1.get(), 1, MPFR_RNDN);
  for (int k = 0; k < d; ++k) {
    // d2 <- 2 (d1^2 + v d2), d1 <- 2 v d1, v <- v^2 + c
    mpfr_mul(t.get(), j.v.get(), j.d2.get(), MPFR_RNDN);
    mpfr_fma(t.get(), j.d1.get(), j.d1.get(), t.get(), MPFR_RNDN);
    mpfr_mul_2ui(j.d2.get(), t.get(), 1, MPFR_RNDN);
    mpfr_mul(j.d1.get(), j.d1.get(), j.v.get(), MPFR_RNDN);
    mpfr_mul_2ui(j.d1.get(), j.d1.get(), 1, MPFR_RNDN);
    mpfr_sqr(j.v.get(), j.v.get(), MPFR_RNDN);
    mpfr_add(j.v.get(), j.v.get(), c.get(), MPFR_RNDN);
  }
  return j;
}

// Newton for Q^d(x) = x from x. Returns the multiplier, or nullopt when
// Newton does not settle on a real point of [-2, 2].
std::optional<BigFloat> fixed_multiplier(const BigFloat& c, BigFloat x, int d, mpfr_prec_t prec) {
  BigFloat g(prec), dg(prec);
  for (int it = 0; it < 400; ++it) {
    Jet j = jet(c, x, d, prec);
    mpfr_sub(g.get(), j.v.get(), x.get(), MPFR_RNDN);
    mpfr_sub_ui(dg.get(), j.d1.get(), 1, MPFR_RNDN);
    if (mpfr_zero_p(g.get()) || mpfr_get_exp(g.get()) < -static_cast<mpfr_exp_t>(prec) + 24) return j.d1;
    if (mpfr_zero_p(dg.get())) return std::nullopt;
    mpfr_div(g.get(), g.get(), dg.get(), MPFR_RNDN);
    mpfr_sub(x.get(), x.get(), g.get(), MPFR_RNDN);
    if (!mpfr_number_p(x.get()) || mpfr_cmpabs_ui(x.get(), 2) > 0) return std::nullopt;
  }
  return std::nullopt;
}

// True when Q^d - id has a pair of real zeros around the point near x where
// (Q^d)' = 1, i.e. c has not yet crossed the saddle-node at the root.
bool saddle_pair(const BigFloat& c, BigFloat x, int d, mpfr_prec_t prec) {
  BigFloat h(prec), g(prec);
  for (int it = 0; it < 400; ++it) {
    Jet j = jet(c, x, d, prec);
    mpfr_sub_ui(h.get(), j.d1.get(), 1, MPFR_RNDN);
    if (mpfr_zero_p(j.d2.get())) break;
    mpfr_div(h.get(), h.get(), j.d2.get(), MPFR_RNDN);
    mpfr_sub(x.get(), x.get(), h.get(), MPFR_RNDN);
    if (!mpfr_number_p(x.get()) || mpfr_cmpabs_ui(x.get(), 2) > 0) return false;
    if (mpfr_zero_p(h.get()) || mpfr_get_exp(h.get()) < -static_cast<mpfr_exp_t>(prec) + 24) break;
  }
  Jet j = jet(c, x, d, prec);
  mpfr_sub(g.get(), j.v.get(), x.get(), MPFR_RNDN);
  return mpfr_sgn(g.get()) == 0 || mpfr_sgn(g.get()) * mpfr_sgn(j.d2.get()) < 0;
}

// Direction of pi(t) from c when tau(c) agrees with the periodic angle t to
// the working depth. Inside the period-P component (right of its centre) the
// root lies to the right. Inside the period-q component that t doubles from,
// tau is its omega_minus and the doubling point lies to the left. Otherwise c
// is just outside a parabolic root on the side where tau < t. Components of
// high period are far below double resolution, so this runs in MPFR.
int plateau_side(const Rational& c, unsigned long period, int q) {
  const int d = q > 0 ? q : static_cast<int>(period);
  if (d <= 0 || d > 512) return -1;
  const mpfr_prec_t prec = 256 + 8 * static_cast<mpfr_prec_t>(d);
  BigFloat cc(prec);
  mpfr_set_q(cc.get(), c.get_mpq_t(), MPFR_RNDN);
  BigFloat y = lingering_point(cc, d, prec);
  if (q > 0) {
    auto lam = fixed_multiplier(cc, y, q, prec);
    if (!lam) return 1;
    return mpfr_cmp_si(lam->get(), -1) > 0 ? -1 : 1;
  }
  auto lam = fixed_multiplier(cc, y, d, prec);
  if (lam && mpfr_cmp_d(lam->get(), 1.0 - 1e-6) < 0 && mpfr_cmp_si(lam->get(), -1) > 0) return 1;
  return saddle_pair(cc, y, d, prec) ? 1 : -1;
}

// +1 or -1 when Q_c has a d-cycle near x0 whose multiplier is that value to
// 2^-100 at 512 bits, else 0. Newton converges linearly at a parabolic
// double root, hence the iteration budget.
int neutral_sign(const Rational& c, int d, double x0) {
  const mpfr_prec_t prec = 512;
  BigFloat cc(prec), x(x0, prec), z(prec), dz(prec), g(prec), dg(prec), t(prec);
  mpfr_set_q(cc.get(), c.get_mpq_t(), MPFR_RNDN);
  auto orbit = [&] {
    mpfr_set(z.get(), x.get(), MPFR_RNDN);
    mpfr_set_ui(dz.get(), 1, MPFR_RNDN);
    for (int k = 0; k < d; ++k) {
      mpfr_mul(dz.get(), dz.get(), z.get(), MPFR_RNDN);
      mpfr_mul_2ui(dz.get(), dz.get(), 1, MPFR_RNDN);
      mpfr_sqr(z.get(), z.get(), MPFR_RNDN);
      mpfr_add(z.get(), z.get(), cc.get(), MPFR_RNDN);
    }
    mpfr_sub(g.get(), z.get(), x.get(), MPFR_RNDN);
    mpfr_sub_ui(dg.get(), dz.get(), 1, MPFR_RNDN);
  };
  for (int it = 0; it < 1200; ++it) {
    orbit();
    if (mpfr_zero_p(g.get()) || mpfr_get_exp(g.get()) < -480 || mpfr_zero_p(dg.get())) break;
    mpfr_div(t.get(), g.get(), dg.get(), MPFR_RNDN);
    mpfr_sub(x.get(), x.get(), t.get(), MPFR_RNDN);
    if (!mpfr_number_p(x.get()) || mpfr_cmpabs_ui(x.get(), 2) > 0) return 0;
  }
  orbit();
  if (!mpfr_zero_p(g.get()) && mpfr_get_exp(g.get()) > -200) return 0;
  for (int s : {1, -1}) {
    mpfr_sub_si(t.get(), dz.get(), s, MPFR_RNDN);
    if (mpfr_zero_p(t.get()) || mpfr_get_exp(t.get()) < -100) return s;
  }
  return 0;
}

// q with t = theta_minus of the component born by doubling from a period-q
// component, or 0.
int doubling_period(const Angle& t) {
  const Integer den = t.denominator();
  if (den % 2 == 0 || den == 1) return 0;
  unsigned long period = order_of_two(den);
  if (period % 2 != 0 || period > 124) return 0;
  int q = static_cast<int>(period / 2);
  Rational scaled = t.value() * Rational((Integer(1) << q) + 1);
  if (scaled.get_den() != 1) return 0;
  Integer m = scaled.get_num() - 1;
  if (m < 0 || !m.fits_ulong_p()) return 0;
  return opening_accepted(q, m.get_ui()) ? q : 0;
}

std::size_t common_prefix(const BinaryWord& a, const BinaryWord& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

}  // namespace

mpfr_prec_t default_precision() {
  if (const char* env = std::getenv("RAYS_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 32 && v <= (1L << 20)) return static_cast<mpfr_prec_t>(v);
  }
  return 128;
}

Rational parse_decimal(std::string_view text) {
  std::string s(text);
  if (s.find('/') != std::string::npos) return parse_rational(s);
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  std::string digits;
  long exp10 = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --exp10;
      any = true;
    }
  }
  if (!any) throw Error(Errc::parse, "malformed decimal '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t dstart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == dstart || i - start > 6) throw Error(Errc::parse, "malformed exponent in '" + s + "'");
    exp10 += std::stol(s.substr(start, i - start));
  }
  if (i != s.size()) throw Error(Errc::parse, "malformed decimal '" + s + "'");
  Integer num(digits, 10);
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  Rational q = exp10 >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * Rational(scale) + Rational(1, 2);
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string s = n.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  bool zero = n == 0;
  return (q < 0 && !zero ? "-" : "") + out;
}

RealParam::RealParam(Rational value, mpfr_prec_t prec) : c(std::move(value)), precision(prec) {
  c.canonicalize();
  check_param(c);
}

RealParam RealParam::parse(std::string_view text, mpfr_prec_t prec) { return RealParam(parse_decimal(text), prec); }

BinaryWord feigenbaum_angle(std::size_t nbits) {
  BinaryWord w;
  for (std::size_t i = 0; i < nbits; ++i) w.push_back(__builtin_popcountll(i) & 1);
  return w;
}

std::string Itinerary::str() const {
  std::string s;
  for (int v : signs) s.push_back(v > 0 ? '+' : '-');
  return s;
}

Itinerary itinerary(const RealParam& p, std::size_t N) {
  check_param(p.c);
  mpfr_prec_t prec = start_precision(p);
  Itinerary it;
  for (int round = 0; round <= kPrecisionDoublings; ++round, prec *= 2) {
    std::size_t got = try_signs(p.c, N, prec, it.signs);
    if (got == N) return it;
    if (round == kPrecisionDoublings) {
      throw Error(Errc::hit_critical_point,
                  "sign of x_" + std::to_string(got) + " not certified at " + std::to_string(prec) + " bits");
    }
  }
  return it;
}

BinaryWord tau_from_itinerary(const Itinerary& it) {
  BinaryWord w;
  int bit = 0;
  w.push_back(bit);
  for (int s : it.signs) {
    if (s < 0) bit = 1 - bit;
    w.push_back(bit);
  }
  return w;
}

BinaryWord tau(const RealParam& c, std::size_t nbits) {
  if (nbits == 0) return {};
  return tau_from_itinerary(itinerary(c, nbits - 1));
}

ParabolicAngles tau_parabolic(const Opening& o) { return {o.theta_minus, o.omega_minus}; }

PiResult pi(const Angle& t, double tol, std::size_t min_bits) {
  if (!(tol > 0)) throw Error(Errc::domain, "tolerance must be positive");
  if (!in_R(t)) throw Error(Errc::not_in_r, t.str() + " is not in R");
  const Rational& target = t.value();
  if (target > Rational(1, 2)) throw Error(Errc::not_in_r, "pi expects t in [0, 1/2]");
  const std::size_t cap = 1024;
  const std::size_t base = std::max<std::size_t>(64, min_bits + 16);
  const int dq = doubling_period(t);
  const unsigned long period = t.denominator() % 2 == 1 ? order_of_two(t.denominator()) : 0;
  const Rational tol_q(tol);

  Rational lo(-2), hi(1, 4);
  BinaryWord wlo = tau(RealParam(lo), base);
  BinaryWord whi = tau(RealParam(hi), base);

  for (int iter = 0; iter < 600; ++iter) {
    if (hi - lo <= tol_q && common_prefix(wlo, whi) >= min_bits) {
      PiResult r;
      r.lo = lo;
      r.hi = hi;
      r.c = (lo + hi) / 2;
      r.certified_bits = common_prefix(wlo, whi);
      return r;
    }
    Rational mid = (lo + hi) / 2;
    BinaryWord w;
    for (int nudge = 0;; ++nudge) {
      try {
        w = tau(RealParam(mid), base);
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::hit_critical_point || nudge > 8) throw;
        mid += (hi - lo) / Rational(Integer(1) << (14 + nudge));
      }
    }
    int side = 0;  // +1: tau(mid) > t, -1: tau(mid) < t
    for (std::size_t n = base;; n *= 2) {
      Rational v = w.value();
      Rational ulp(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(n));
      if (target < v) {
        side = 1;
        break;
      }
      if (target > v + ulp) {
        side = -1;
        break;
      }
      if (n * 2 > cap) break;
      w = tau(RealParam(mid), n * 2);
    }
    if (side == 0) {
      // tau(mid) agrees with t to the cap.
      side = plateau_side(mid, period, dq);
    }
    if (side > 0) {
      lo = mid;
      wlo = w;
    } else {
      hi = mid;
      whi = w;
    }
  }
  throw Error(Errc::non_convergence, "bisection for " + t.str() + " did not settle");
}

double nonrecurrence_depth(const RealParam& p, std::size_t N) {
  check_param(p.c);
  if (N < 1) throw Error(Errc::domain, "N must be >= 1");
  mpfr_prec_t prec = std::max<mpfr_prec_t>(start_precision(p), static_cast<mpfr_prec_t>(3 * N + 64));
  for (int round = 0; round <= kPrecisionDoublings; ++round, prec *= 2) {
    Enclosure cc = enclose(p.c, prec);
    Enclosure x = cc;
    BigFloat t1(prec), t2(prec);
    double best = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (std::size_t n = 1; n <= N; ++n) {
      check_escape(x);
      int s = x.sign();
      if (s == 0) {
        if (x.exact_zero()) return 0.0;
        ok = false;
        break;
      }
      double m = s > 0 ? mpfr_get_d(x.lo.get(), MPFR_RNDD) : -mpfr_get_d(x.hi.get(), MPFR_RNDU);
      best = std::min(best, m);
      step(x, cc, prec, t1, t2);
    }
    if (ok) return best;
  }
  return 0.0;
}

std::optional<Component> locate_component(const RealParam& p, int max_period, std::span<const Opening> table) {
  check_param(p.c);
  const double c = p.c.get_d();
  for (int d = 1; d <= max_period; ++d) {
    Cycle cy = cycle_near_attractor(c, d);
    if (!(cy.residual < 1e-9)) continue;
    double a = std::fabs(cy.multiplier);
    const int s = std::fabs(a - 1.0) < 1e-3 ? neutral_sign(p.c, d, cy.point) : 0;
    if (s == 0 && std::fabs(a - 1.0) < 1e-7) {
      throw Error(Errc::unresolved_location, "cycle of period " + std::to_string(d) + " is nearly neutral");
    }
    if (s != 0) {
      // Root (+1) or doubling point (-1) of the period-d component.
      const std::size_t nbits = static_cast<std::size_t>(8 * d + 64);
      BinaryWord w = tau(p, nbits);
      for (const Opening& o : table) {
        if (o.period != d) continue;
        const Angle& target = s > 0 ? o.theta_minus : o.omega_minus;
        if (binary_expansion(target, nbits) == w) {
          Component comp;
          comp.opening = o;
          comp.multiplier = s;
          comp.right_of_center = s > 0;
          comp.on_boundary = true;
          comp.tau = target;
          return comp;
        }
      }
      throw Error(Errc::unresolved_location,
                  "neutral cycle of period " + std::to_string(d) + " matches no opening in the table");
    }
    if (a >= 1.0) continue;
    Component comp;
    comp.multiplier = cy.multiplier;
    comp.right_of_center = cy.multiplier >= 0;
    // Match the itinerary word against the candidate openings of period d.
    RealParam probe = p;
    std::size_t nbits = static_cast<std::size_t>(8 * d + 64);
    BinaryWord w;
    for (int k = 0;; ++k) {
      try {
        w = tau(probe, nbits);
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::hit_critical_point || k > 4) throw;
        // At the centre: step just to the right, where tau is theta_minus.
        probe.c += Rational(Integer(1), Integer(1) << (100 + 40 * k));
        comp.right_of_center = true;
      }
    }
    for (const Opening& o : table) {
      if (o.period != d) continue;
      const Angle& target = comp.right_of_center ? o.theta_minus : o.omega_minus;
      if (binary_expansion(target, nbits) == w) {
        comp.opening = o;
        comp.tau = target;
        return comp;
      }
    }
    throw Error(Errc::unresolved_location,
                "attracting cycle of period " + std::to_string(d) + " matches no opening in the table");
  }
  return std::nullopt;
}

}  // namespace rays
