#include "rays/biaccess.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rays/error.hpp"
#include "rays/ksigma.hpp"
#include "rays/tuning.hpp"

namespace rays {

namespace {

using i128 = __int128;

void check_tau(const Rational& tau_c) {
  if (tau_c < 0 || tau_c > Rational(1, 2)) throw Error(Errc::domain, "tau_c must lie in [0, 1/2]");
}

bool fits(const Integer& z, std::size_t bits) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= bits; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : std::string(); }

const Rational& feigenbaum_parameter() {
  static const Rational c = parse_decimal(kFeigenbaumDecimal);
  return c;
}

}  // namespace

bool s_c_membership(const Angle& t, const Rational& tau_c) {
  check_tau(tau_c);
  const Integer& b = t.denominator();
  const unsigned long v = two_adic_valuation(b);
  if (fits(b, 40) && fits(tau_c.get_den(), 40)) {
    const i128 den = b.get_si();
    const i128 tn = tau_c.get_num().get_si();
    const i128 td = tau_c.get_den().get_si();
    const i128 lo = tn * den;         // x / den > tau  <=>  x td > lo
    const i128 hi = (td - tn) * den;  // x / den < 1 - tau  <=>  x td < hi
    i128 x = t.numerator().get_si();
    i128 anchor = x;
    for (unsigned long k = 1;; ++k) {
      x = (2 * x) % den;
      if (x * td > lo && x * td < hi) return false;
      if (k == v) anchor = x;
      if (k > v && x == anchor) return true;
    }
  }
  Integer x = t.numerator();
  Integer anchor = x;
  const Rational upper = 1 - tau_c;
  for (unsigned long k = 1;; ++k) {
    x *= 2;
    if (x >= b) x -= b;
    Rational y(x, b);
    y.canonicalize();
    if (tau_c < y && y < upper) return false;
    if (k == v) anchor = x;
    if (k > v && x == anchor) return true;
  }
}

DepthVerdict s_c_membership(const BinaryWord& w, const Rational& tau_c, std::size_t depth) {
  check_tau(tau_c);
  if (depth < 1) throw Error(Errc::domain, "depth must be >= 1");
  const std::size_t L = w.size();
  if (L <= depth) throw Error(Errc::insufficient_precision, "word shorter than depth");
  const Integer full = Integer(1) << static_cast<mp_bitcnt_t>(L);
  const Integer& tn = tau_c.get_num();
  const Integer& td = tau_c.get_den();
  const Integer below = tn * full;         // y > tau        <=>  y td > below
  const Integer above = (td - tn) * full;  // y < 1 - tau    <=>  y td < above
  for (std::size_t k = 1; k <= depth; ++k) {
    // d^k(t) lies in [lo, hi] / 2^L.
    Integer B = w.suffix_from(k).as_integer();
    Integer lo = B << static_cast<mp_bitcnt_t>(k);
    Integer hi = (B + 1) << static_cast<mp_bitcnt_t>(k);
    if (lo * td > below && hi * td < above) return {false, k};
    if (!(hi * td <= below || lo * td >= above)) {
      throw Error(Errc::insufficient_precision, "step " + std::to_string(k) + " is undecidable from " +
                                                    std::to_string(L) + " bits");
    }
  }
  return {true, 0};
}

RhoResult rho(const RealParam& c, std::span<const Opening> table, std::size_t nbits) {
  int max_period = 0;
  for (const auto& o : table) max_period = std::max(max_period, o.period);
  RhoResult out;
  out.component = locate_component(c, max_period, table);
  if (out.component) {
    const Opening& h = out.component->opening;
    BinaryWord base = feigenbaum_angle(nbits);
    if (h.period == 1) {
      out.word = base;
    } else {
      TuningWords w = words_from_opening(h);
      BinaryWord tuned;
      for (std::size_t i = 0; tuned.size() < nbits; ++i) tuned.append(w.word(base[i]));
      out.word = tuned.prefix(nbits);
    }
  } else {
    out.word = tau(c, nbits);
  }
  out.value = out.word.to_double();
  return out;
}

double ell(double rho_value) {
  if (!(rho_value <= 0.5)) throw Error(Errc::domain, "rho must be <= 1/2");
  if (rho_value < 4.0 / 9.0) throw Error(Errc::out_of_window, "no bound for rho below 4/9");
  return 1.0 - std::log2((16.0 * rho_value - 5.0) / (32.0 * rho_value - 13.0));
}

double makarov_lower(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(Errc::domain, "delta must lie in ]0, 1[");
  if (delta < 11.0 / 12.0) return delta / 2.0;
  return delta / (1.0 + std::sqrt(12.0 * (1.0 - delta)));
}

std::string DimBoundReport::csv_header() { return "c,rho,sigma,ell,ell_prime,boxdim_estimate,flags"; }

std::string DimBoundReport::csv_row() const {
  std::string joined;
  for (const auto& f : flags) joined += (joined.empty() ? "" : ";") + f;
  return c.str() + "," + fmt(rho) + "," + fmt(sigma) + "," + fmt(ell) + "," + fmt(ell_prime) + "," +
         fmt(boxdim) + "," + joined;
}

std::string DimBoundReport::to_json() const {
  auto opt = [](const std::optional<double>& x) { return x ? fmt(*x) : std::string("null"); };
  std::string out = "{\"c\":\"" + c.str() + "\",\"tau\":\"" + to_string(tau) + "\",\"tau_exact\":" +
                    (tau_exact ? "true" : "false") + ",\"rho\":" + fmt(rho) + ",\"sigma\":" + fmt(sigma) +
                    ",\"sigma_error\":" + fmt(sigma_error) + ",\"ell\":" + opt(ell) +
                    ",\"ell_prime\":" + opt(ell_prime) + ",\"boxdim_estimate\":" + opt(boxdim) + ",\"flags\":[";
  for (std::size_t i = 0; i < flags.size(); ++i) out += (i ? ",\"" : "\"") + flags[i] + "\"";
  return out + "]}";
}

DimBoundReport dim_report(const RealParam& c, std::span<const Opening> table, std::size_t nbits) {
  DimBoundReport r;
  r.c = c;
  RhoResult rh = rho(c, table, nbits);
  r.rho = rh.value;
  if (rh.component) {
    r.tau = rh.component->tau.value();
    r.tau_exact = true;
  } else {
    r.tau = rh.word.value();
    r.sigma_error = 2.0 * std::ldexp(1.0, -static_cast<int>(nbits));
  }
  Rational sigma = 1 - 2 * r.tau;
  r.sigma = sigma.get_d();

  if (c.c > feigenbaum_parameter()) {
    r.boxdim = 0.0;
    r.flags.push_back("dimension-zero");
    return r;
  }
  if (c.c == -2) {
    r.tau = Rational(1, 2);
    r.tau_exact = true;
    r.sigma = 0.0;
    r.sigma_error = 0.0;
    r.ell = 1.0;
    r.ell_prime = 1.0;
    r.boxdim = 1.0;
    r.flags.push_back("full-circle");
    return r;
  }
  if (c.c <= Rational(-7, 4)) {
    r.ell = ell(r.rho);
    r.ell_prime = makarov_lower(*r.ell);
    r.flags.push_back("ell:bound");
  } else {
    r.flags.push_back("no-lower-bound");
  }
  r.flags.push_back("upper:porosity<1");
  // K_sigma shrinks as sigma grows, so rounding sigma down keeps a superset.
  Rational grid(Integer(1), Integer(1) << 20);
  Integer m;
  Rational scaled = sigma / grid;
  mpz_fdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  if (m > 0) {
    r.boxdim = boxdim_estimate(SigmaParam(Rational(m) * grid), 8, 20);
    r.flags.push_back("boxdim:estimate");
  }
  if (c.c == feigenbaum_parameter()) r.flags.push_back("open-problem");
  return r;
}

}  // namespace rays
