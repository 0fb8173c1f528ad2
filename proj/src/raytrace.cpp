#include "rays/raytrace.hpp"

#include <algorithm>
#include <cmath>

#include "rays/error.hpp"

namespace rays {

namespace {

constexpr mpfr_rnd_t N = MPFR_RNDN;

// Principal square root of x + iy.
void csqrt(ComplexPoint& out, const BigFloat& x, const BigFloat& y, mpfr_prec_t prec) {
  BigFloat r(prec), t(prec);
  mpfr_hypot(r.get(), x.get(), y.get(), N);
  if (mpfr_zero_p(r.get())) {
    mpfr_set_zero(out.re.get(), 1);
    mpfr_set_zero(out.im.get(), 1);
    return;
  }
  if (x.sign() >= 0) {
    mpfr_add(t.get(), r.get(), x.get(), N);
    mpfr_div_2ui(t.get(), t.get(), 1, N);
    mpfr_sqrt(out.re.get(), t.get(), N);
    mpfr_div(out.im.get(), y.get(), out.re.get(), N);
    mpfr_div_2ui(out.im.get(), out.im.get(), 1, N);
  } else {
    mpfr_sub(t.get(), r.get(), x.get(), N);
    mpfr_div_2ui(t.get(), t.get(), 1, N);
    mpfr_sqrt(out.im.get(), t.get(), N);
    if (y.sign() < 0) mpfr_neg(out.im.get(), out.im.get(), N);
    mpfr_div(out.re.get(), y.get(), out.im.get(), N);
    mpfr_div_2ui(out.re.get(), out.re.get(), 1, N);
  }
}

void negate(ComplexPoint& z) {
  mpfr_neg(z.re.get(), z.re.get(), N);
  mpfr_neg(z.im.get(), z.im.get(), N);
}

// |im| below 2^(-guard) |z| counts as on the axis.
bool near_axis(const BigFloat& part, const ComplexPoint& z, long guard) {
  if (mpfr_zero_p(part.get())) return true;
  BigFloat m(64);
  mpfr_hypot(m.get(), z.re.get(), z.im.get(), N);
  return mpfr_get_exp(part.get()) < mpfr_get_exp(m.get()) - guard;
}

std::string digits(const BigFloat& x) {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.20Rg", x.get());
  return buf;
}

}  // namespace

double ComplexPoint::abs() const { return std::hypot(re.to_double(), im.to_double()); }

double RayPolyline::pullback_defect() const {
  double worst = 0.0;
  BigFloat x(precision), y(precision), t(precision);
  BigFloat cc(precision);
  mpfr_set_q(cc.get(), c.get_mpq_t(), N);
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const ComplexPoint& z = points[k];
    // z^2 + c = (re^2 - im^2 + c) + 2 re im i
    mpfr_sqr(x.get(), z.re.get(), N);
    mpfr_sqr(t.get(), z.im.get(), N);
    mpfr_sub(x.get(), x.get(), t.get(), N);
    mpfr_add(x.get(), x.get(), cc.get(), N);
    mpfr_mul(y.get(), z.re.get(), z.im.get(), N);
    mpfr_mul_2ui(y.get(), y.get(), 1, N);
    mpfr_sub(x.get(), x.get(), points[k + 1].re.get(), N);
    mpfr_sub(y.get(), y.get(), points[k + 1].im.get(), N);
    worst = std::max(worst, std::hypot(x.to_double(), y.to_double()));
  }
  return worst;
}

std::string RayPolyline::to_csv() const {
  std::string out = "re,im,angle_num,angle_den\n";
  for (std::size_t i = points.size(); i-- > 0;) {
    out += digits(points[i].re) + "," + digits(points[i].im) + "," + angles[i].numerator().get_str() + "," +
           angles[i].denominator().get_str() + "\n";
  }
  return out;
}

RayPolyline trace_ray(const RealParam& c, const Angle& t, std::size_t depth, double R0) {
  if (c.c < -2 || c.c > Rational(1, 4)) throw Error(Errc::domain, "c must lie in [-2, 1/4]");
  if (depth < 1) throw Error(Errc::domain, "depth must be >= 1");
  if (!(R0 >= 4.0)) throw Error(Errc::domain, "R0 must be >= 4");
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(c.precision, 64 + 2 * static_cast<mpfr_prec_t>(depth));
  RayPolyline ray;
  ray.c = c.c;
  ray.t = t;
  ray.depth = depth;
  ray.precision = prec;
  ray.angles.reserve(depth + 1);
  ray.angles.push_back(t);
  for (std::size_t k = 0; k < depth; ++k) ray.angles.push_back(doubled(ray.angles.back()));
  ray.points.resize(depth + 1, ComplexPoint{BigFloat(prec), BigFloat(prec)});

  // Start far out, where the Boettcher map is close to the identity.
  BigFloat phase(prec), radius(R0, prec);
  mpfr_const_pi(phase.get(), N);
  mpfr_mul_2ui(phase.get(), phase.get(), 1, N);
  mpfr_mul_q(phase.get(), phase.get(), ray.angles[depth].value().get_mpq_t(), N);
  ComplexPoint& start = ray.points[depth];
  mpfr_sin_cos(start.im.get(), start.re.get(), phase.get(), N);
  mpfr_mul(start.re.get(), start.re.get(), radius.get(), N);
  mpfr_mul(start.im.get(), start.im.get(), radius.get(), N);

  BigFloat cc(prec), x(prec);
  mpfr_set_q(cc.get(), c.c.get_mpq_t(), N);
  const Rational half(1, 2);
  const long guard = static_cast<long>(prec) - 16;
  for (std::size_t k = depth; k-- > 0;) {
    mpfr_sub(x.get(), ray.points[k + 1].re.get(), cc.get(), N);
    ComplexPoint& z = ray.points[k];
    csqrt(z, x, ray.points[k + 1].im, prec);
    const Rational& a = ray.angles[k].value();
    if (a == 0 || a == half) {
      // On the real axis beyond beta or -beta.
      mpfr_set_zero(z.im.get(), 1);
      if ((z.re.sign() < 0) != (a == half)) negate(z);
      continue;
    }
    if (near_axis(z.im, z, guard)) {
      throw Error(Errc::branch_ambiguity, "preimage at step " + std::to_string(k) + " is on the real axis");
    }
    if ((z.im.sign() > 0) != (a < half)) negate(z);
  }
  return ray;
}

double dynamic_root(const Rational& c, int period, bool above) {
  if (period < 1 || period > 24) throw Error(Errc::domain, "period must be in [1, 24]");
  const double cd = c.get_d();
  const double beta = 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * cd));
  auto F = [&](double x) {
    double z = x, dz = 1.0;
    for (int k = 0; k < period; ++k) {
      dz *= 2.0 * z;
      z = z * z + cd;
    }
    return std::pair{z - x, dz};
  };
  auto repelling = [&](double x) { return std::fabs(F(x).second) >= 1.0 - 1e-6; };
  // Scan away from c. Sign changes give simple roots; a parabolic double root
  // only touches 0, so small local minima of |F| are refined as well.
  const int cells = 1 << 16;
  const double end = above ? beta : -beta;
  const double h = (end - cd) / cells;
  double prev_x = cd + (above ? 1e-12 : -1e-12), prev = F(prev_x).first;
  double before = std::fabs(prev);
  for (int i = 1; i <= cells; ++i) {
    double x = (i == cells) ? end : cd + i * h;
    double f = F(x).first;
    if (f == 0.0 && repelling(x)) return x;
    if ((f < 0) != (prev < 0)) {
      double a = prev_x, b = x, fa = prev;
      for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        double fm = F(m).first;
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      double r = 0.5 * (a + b);
      if (repelling(r)) return r;
    } else if (i >= 2 && std::fabs(prev) <= before && std::fabs(prev) <= std::fabs(f) && std::fabs(prev) < 1e-3) {
      double a = std::min(x - 2 * h, x), b = std::max(x - 2 * h, x);
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      for (int it = 0; it < 120; ++it) {
        double u = b - g * (b - a), v = a + g * (b - a);
        if (std::fabs(F(u).first) < std::fabs(F(v).first)) b = v; else a = u;
      }
      double r = 0.5 * (a + b);
      if (std::fabs(F(r).first) < 1e-12 && repelling(r)) return r;
    }
    before = std::fabs(prev);
    prev_x = x;
    prev = f;
  }
  return end;
}

LandingResult verify_landing(const RealParam& c, std::size_t nbits, std::size_t depth, std::span<const Opening> table) {
  LandingResult out;
  out.target = c.to_double();
  if (c.c == -2) {
    out.tau = Angle(Rational(1, 2));
  } else {
    int max_period = 0;
    for (const auto& o : table) max_period = std::max(max_period, o.period);
    std::optional<Component> comp;
    if (max_period > 0) comp = locate_component(c, max_period, table);
    if (comp) {
      out.tau = comp->tau;
      if (!comp->on_boundary) {
        throw Error(Errc::domain, "c is interior to a hyperbolic component, where tau is only extended");
      }
      out.target = dynamic_root(c.c, comp->opening.period);
      out.at_root = true;
    } else {
      out.tau = Angle(tau(c, nbits).value());
    }
  }
  RayPolyline ray = trace_ray(c, out.tau, depth);
  const ComplexPoint& e = ray.endpoint();
  out.residual = std::hypot(e.re.to_double() - out.target, e.im.to_double());
  return out;
}

}  // namespace rays
