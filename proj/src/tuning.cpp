#include "rays/tuning.hpp"

#include <cmath>
#include <map>

#include "rays/error.hpp"

namespace rays {

namespace {

BinaryWord substitute(const TuningWords& w, const BinaryWord& bits) {
  BinaryWord out;
  for (std::size_t i = 0; i < bits.size(); ++i) out.append(w.word(bits[i]));
  return out;
}

Rational block_scale(int p) { return Rational(Integer(1) << p); }

// Image of a point of [0, 1] on the real line: `upper` picks the zero tail at
// dyadics in ]0, 1[ and the ones tail is used otherwise, with 1 = 0.111...
Rational image_of_real(const TuningWords& w, const Rational& x, bool upper) {
  if (x == 1) return w.theta_plus();
  Angle a(x);
  if (x == 0 || !a.is_dyadic()) return tune_branch(w, a, DyadicTail::zeros);
  return tune_branch(w, a, upper ? DyadicTail::zeros : DyadicTail::ones);
}

}  // namespace

TuningWords TuningWords::raw(BinaryWord theta0, BinaryWord theta1) {
  if (theta0.size() != theta1.size() || theta0.size() < 2) {
    throw Error(Errc::domain, "tuning words need a common length >= 2");
  }
  if (!(theta0.as_integer() < theta1.as_integer())) throw Error(Errc::domain, "theta0 must precede theta1");
  TuningWords w;
  w.p = static_cast<int>(theta0.size());
  w.theta0 = std::move(theta0);
  w.theta1 = std::move(theta1);
  return w;
}

Rational TuningWords::theta_minus() const { return from_periodic({}, theta0); }
Rational TuningWords::theta_plus() const { return from_periodic({}, theta1); }

TuningWords words_from_opening(const Opening& o) {
  if (o.period < 2) throw Error(Errc::domain, "period-1 component tunes as the identity");
  BinaryWord t0 = binary_expansion(o.theta_minus, static_cast<std::size_t>(o.period));
  return TuningWords::raw(t0, t0.complemented());
}

Rational tune_branch(const TuningWords& w, const Angle& t, DyadicTail tail) {
  PeriodicExpansion e = periodic_expansion(t, tail);
  return from_periodic(substitute(w, e.prefix), substitute(w, e.repetend));
}

TunedAngle tune_angle(const TuningWords& w, const Angle& t) {
  TunedAngle out;
  if (t.is_dyadic()) {
    out.lower = tune_branch(w, t, DyadicTail::ones);
    out.upper = tune_branch(w, t, DyadicTail::zeros);
    if (t.value() == 0) std::swap(out.lower, *out.upper);
  } else {
    out.lower = tune_branch(w, t, DyadicTail::zeros);
  }
  return out;
}

Rational contraction(const TuningWords& w, int bit, const Rational& x) {
  Rational r = (Rational(w.word(bit).as_integer()) + x) / block_scale(w.p);
  r.canonicalize();
  return r;
}

Rational staircase_psi(const TuningWords& w, const Rational& s) {
  const Rational lo = w.theta_minus();
  const Rational hi = w.theta_plus();
  if (s < lo || s > hi) throw Error(Errc::out_of_range, "psi is defined on [theta_minus, theta_plus]");
  const Rational scale = block_scale(w.p);
  const Rational t0(w.theta0.as_integer());
  const Rational t1(w.theta1.as_integer());
  // The level-1 gap ]0.theta0 theta1^inf, 0.theta1 theta0^inf[.
  const Rational gap_lo = (t0 + hi) / scale;
  const Rational gap_hi = (t1 + lo) / scale;
  // r = N / D with D fixed; the orbit stays over the same denominator.
  Rational q = s;
  q.canonicalize();
  const Integer D = q.get_den();
  const Integer shift = scale.get_num();
  const Integer sub0 = t0.get_num() * D, sub1 = t1.get_num() * D;
  const Integer lo_cut = gap_lo.get_num() * D, hi_cut = gap_hi.get_num() * D;
  const Integer& lo_den = gap_lo.get_den();
  const Integer& hi_den = gap_hi.get_den();
  std::map<Integer, std::size_t> seen;
  BinaryWord bits;
  Integer N = q.get_num(), tmp;
  while (true) {
    auto [it, fresh] = seen.emplace(N, bits.size());
    if (!fresh) {
      std::size_t start = it->second;
      return from_periodic(bits.prefix(start), bits.suffix_from(start));
    }
    if (tmp = N * lo_den, tmp <= lo_cut) {
      bits.push_back(0);
      N = N * shift - sub0;
    } else if (tmp = N * hi_den, tmp >= hi_cut) {
      bits.push_back(1);
      N = N * shift - sub1;
    } else {
      bits.push_back(1);
      return bits.value();
    }
  }
}

Rational main_gap(const TuningWords& w) {
  const Rational scale = block_scale(w.p);
  Rational g = (Rational(w.theta1.as_integer()) + w.theta_minus()) / scale -
               (Rational(w.theta0.as_integer()) + w.theta_plus()) / scale;
  g.canonicalize();
  return g;
}

double holder_constant(const TuningWords& w) {
  return 4.0 * std::pow(main_gap(w).get_d(), -1.0 / static_cast<double>(w.p));
}

IntervalSet cantor_cylinders(const TuningWords& w, int depth) {
  if (depth < 4 * w.p) throw Error(Errc::domain, "depth must be at least 4p");
  const int m = depth / w.p;
  if (m > 20) throw Error(Errc::domain, "depth / p must be <= 20");
  const Rational lo = w.theta_minus();
  const Rational hi = w.theta_plus();
  const Rational scale(Integer(1) << (w.p * m));
  std::vector<Interval> out;
  out.reserve(std::size_t{1} << m);
  for (unsigned long u = 0; u < (1UL << m); ++u) {
    BinaryWord bits;
    for (int i = m - 1; i >= 0; --i) bits.push_back(static_cast<int>((u >> i) & 1UL));
    Rational base(substitute(w, bits).as_integer());
    out.push_back({(base + lo) / scale, (base + hi) / scale});
  }
  for (auto& iv : out) {
    iv.lo.canonicalize();
    iv.hi.canonicalize();
  }
  return IntervalSet(std::move(out));
}

double cantor_boxdim(const TuningWords& w, int depth) {
  IntervalSet s = cantor_cylinders(w, depth);
  std::vector<int> scales;
  for (int k = w.p; k <= depth; ++k) scales.push_back(k);
  return box_count(s, scales).slope;
}

IntervalSet tuned_R_cover(const TuningWords& w, int P, int refine_bits, unsigned jobs) {
  if (refine_bits < 0 || refine_bits > 24) throw Error(Errc::domain, "refine_bits must be in [0, 24]");
  IntervalSet cover = cover_R(P, jobs);
  std::vector<Interval> pieces;
  const Rational cell(Integer(1), Integer(1) << refine_bits);
  for (const auto& iv : cover) {
    if (refine_bits == 0 || iv.lo == iv.hi) {
      pieces.push_back(iv);
      continue;
    }
    // Cut [lo, hi] at the multiples of 2^-m strictly inside it.
    Rational x = iv.lo;
    while (x < iv.hi) {
      Rational q = x / cell;
      Integer next;
      mpz_fdiv_q(next.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      Rational y = Rational(next + 1) * cell;
      if (y > iv.hi) y = iv.hi;
      pieces.push_back({x, y});
      x = y;
    }
  }
  std::vector<Interval> out;
  for (const auto& piece : pieces) {
    Interval img{image_of_real(w, piece.lo, true), image_of_real(w, piece.hi, false)};
    if (!out.empty() && img.lo <= out.back().hi) {
      if (img.hi > out.back().hi) out.back().hi = img.hi;
    } else {
      out.push_back(img);
    }
  }
  return IntervalSet(std::move(out));
}

double tuned_cover_slope(const TuningWords& w, int P, int refine_bits, unsigned jobs) {
  if (refine_bits <= P) throw Error(Errc::domain, "refine_bits must exceed P");
  if (w.p * refine_bits > 62) throw Error(Errc::domain, "p * refine_bits must be <= 62");
  IntervalSet s = tuned_R_cover(w, P, refine_bits, jobs);
  std::vector<int> scales;
  for (int k = w.p * P; k <= w.p * refine_bits; ++k) scales.push_back(k);
  return box_count(s, scales).slope;
}

}  // namespace rays
