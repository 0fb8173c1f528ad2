#pragma once

// Thin RAII handle over an MPFR number. Arithmetic is exposed as free
// functions taking an explicit rounding mode so that interval code can round
// outward.

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

namespace rays {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(double x, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(const BigFloat& o) : BigFloat(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept : BigFloat(mpfr_prec_t{MPFR_PREC_MIN}) { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  /// Parses a decimal string, rounding in the given direction.
  static BigFloat parse(std::string_view text, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  /// Changes precision, rounding the current value to nearest.
  void set_precision(mpfr_prec_t prec) { mpfr_prec_round(v_, prec, MPFR_RNDN); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  /// Fixed-point decimal rendering with `digits` digits after the point.
  std::string str(int digits = 20) const;

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend int cmp(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b); }

 private:
  mpfr_t v_;
};

inline BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat r(prec);
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}
inline BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat r(prec);
  mpfr_sub(r.get(), a.get(), b.get(), rnd);
  return r;
}
inline BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat r(prec);
  mpfr_mul(r.get(), a.get(), b.get(), rnd);
  return r;
}
inline BigFloat sqr(const BigFloat& a, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat r(prec);
  mpfr_sqr(r.get(), a.get(), rnd);
  return r;
}
inline BigFloat midpoint(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec) {
  BigFloat r = add(a, b, prec);
  mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDN);
  return r;
}

}  // namespace rays
