#include "rays/ksigma.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "rays/error.hpp"

namespace rays {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct Arc {
  i64 lo;
  i64 hi;
};

// All levels up to N share one integer grid: the circle has length D = b 2^N
// where sigma = a/b.
struct Grid {
  i64 D = 0;
  i64 a = 0;
  i64 b = 0;
  int N = 2;
  int log2D = -1;  // only when D is a power of two
};

Grid make_grid(const SigmaParam& sp, int N) {
  if (N < 2) throw Error(Errc::domain, "level must be >= 2");
  const Rational& s = sp.sigma();
  std::size_t bits = mpz_sizeinbase(s.get_den_mpz_t(), 2);
  if (bits + static_cast<std::size_t>(N) > 60) throw Error(Errc::domain, "level too deep for this sigma");
  Grid g;
  g.a = s.get_num().get_si();
  g.b = s.get_den().get_si();
  g.N = N;
  g.D = g.b << N;
  if (auto p = sp.dyadic_exponent()) g.log2D = *p + N;
  return g;
}

std::vector<Arc> level2(const Grid& g) {
  i64 s = g.b << (g.N - 2);
  i64 r = g.a << (g.N - 2);
  return {{s + r, 3 * s - r}, {3 * s + r, 5 * s - r}};
}

// Removes the open generation-k neighbourhoods from every arc. When `first`
// is given, children of in[i] are out[first[i] .. first[i+1]).
void refine(const Grid& g, const std::vector<Arc>& in, int k, std::vector<Arc>& out,
            std::vector<std::size_t>* first) {
  const i64 s = g.b << (g.N - k);
  const i64 r = g.a << (g.N - k);
  out.clear();
  if (first) first->assign(1, 0);
  for (const Arc& arc : in) {
    i64 j = (arc.lo - r) / s;  // arc.lo - r > 0 always
    while (j * s + r <= arc.lo) ++j;
    if (j % 2 == 0) ++j;
    i64 cur = arc.lo;
    for (; j * s - r < arc.hi; j += 2) {
      i64 c = j * s;
      if (c - r >= cur) out.push_back({cur, c - r});
      cur = std::max(cur, c + r);
    }
    if (cur <= arc.hi) out.push_back({cur, arc.hi});
    if (first) first->push_back(out.size());
  }
}

Rational unit(const Grid& g, i64 x) {
  Rational q(Integer(static_cast<long>(x)), Integer(static_cast<long>(g.D)));
  q.canonicalize();
  return q;
}

IntervalSet to_set(const Grid& g, const std::vector<Arc>& arcs) {
  std::vector<Interval> v;
  v.reserve(arcs.size());
  for (const Arc& arc : arcs) v.push_back({unit(g, arc.lo), unit(g, arc.hi)});
  return IntervalSet(std::move(v));
}

std::string arc_str(const Grid& g, const Arc& arc) {
  return "[" + to_string(unit(g, arc.lo)) + "," + to_string(unit(g, arc.hi)) + "]";
}

std::vector<std::vector<Arc>> all_levels(const Grid& g, int n_max) {
  std::vector<std::vector<Arc>> levels;
  levels.push_back(level2(g));
  for (int k = 3; k <= n_max; ++k) {
    std::vector<Arc> next;
    refine(g, levels.back(), k, next, nullptr);
    levels.push_back(std::move(next));
  }
  return levels;
}

int ctz64(i64 x) { return __builtin_ctzll(static_cast<unsigned long long>(x)); }

bool fits62(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62; }

// |d^j(t) - 1/2| >= sigma/2 for j = 1 .. jmax, stopping once the orbit closes.
bool orbit_keeps_away(const Angle& t, const SigmaParam& sp, long jmax) {
  const Integer den = t.denominator();
  const Rational& s = sp.sigma();
  const unsigned long v = two_adic_valuation(den);
  if (fits62(den) && fits62(s.get_num()) && fits62(s.get_den())) {
    const i64 b = den.get_si();
    const i128 sn = s.get_num().get_si();
    const i128 sd = s.get_den().get_si();
    const i64 a = t.numerator().get_si();
    i64 x = a;
    i64 anchor = a;
    for (long j = 1; j <= jmax; ++j) {
      x = (2 * x) % b;
      i128 dist = 2 * static_cast<i128>(x) - b;
      if (dist < 0) dist = -dist;
      if (dist * sd < sn * b) return false;
      if (static_cast<unsigned long>(j) == v) anchor = x;
      if (static_cast<unsigned long>(j) > v && x == anchor) return true;
    }
    return true;
  }
  Integer x = t.numerator();
  Integer anchor = x;
  for (long j = 1; j <= jmax; ++j) {
    x *= 2;
    if (x >= den) x -= den;
    Integer dist = 2 * x - den;
    if (dist < 0) dist = -dist;
    if (dist * s.get_den() < s.get_num() * den) return false;
    if (static_cast<unsigned long>(j) == v) anchor = x;
    if (static_cast<unsigned long>(j) > v && x == anchor) return true;
  }
  return true;
}

}  // namespace

SigmaParam::SigmaParam(Rational sigma) : sigma_(std::move(sigma)) {
  sigma_.canonicalize();
  if (sigma_ <= 0 || sigma_ >= 1) throw Error(Errc::domain, "sigma must lie in ]0,1[");
  const Integer& d = sigma_.get_den();
  if (sigma_.get_num() == 1 && mpz_popcount(d.get_mpz_t()) == 1) {
    int p = static_cast<int>(mpz_scan1(d.get_mpz_t(), 0));
    if (p >= 2) p_ = p;
  }
}

SigmaParam SigmaParam::dyadic(int p) {
  if (p < 2 || p > 40) throw Error(Errc::domain, "dyadic exponent must be in [2, 40]");
  return SigmaParam(Rational(Integer(1), Integer(1) << p));
}

IntervalSet KsigmaLevel::unwrapped() const {
  std::vector<Interval> v;
  for (const auto& iv : set) {
    if (iv.hi <= 1) {
      v.push_back(iv);
    } else if (iv.lo >= 1) {
      v.push_back({iv.lo - 1, iv.hi - 1});
    } else {
      v.push_back({iv.lo, Rational(1)});
      v.push_back({Rational(0), iv.hi - 1});
    }
  }
  std::sort(v.begin(), v.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return IntervalSet(std::move(v));
}

KsigmaLevel build_level(const SigmaParam& sp, int n) {
  Grid g = make_grid(sp, n);
  auto levels = all_levels(g, n);
  return {n, to_set(g, levels.back())};
}

std::vector<KsigmaLevel> build_levels(const SigmaParam& sp, int n_max) {
  Grid g = make_grid(sp, n_max);
  auto levels = all_levels(g, n_max);
  std::vector<KsigmaLevel> out;
  for (std::size_t i = 0; i < levels.size(); ++i) out.push_back({static_cast<int>(i) + 2, to_set(g, levels[i])});
  return out;
}

std::vector<std::uint64_t> level_counts(const SigmaParam& sp, int n_max) {
  Grid g = make_grid(sp, n_max);
  std::vector<std::uint64_t> counts;
  std::vector<Arc> cur = level2(g), next;
  counts.push_back(cur.size());
  for (int k = 3; k <= n_max; ++k) {
    refine(g, cur, k, next, nullptr);
    std::swap(cur, next);
    counts.push_back(cur.size());
  }
  return counts;
}

bool StructureReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.pass; }) &&
         distinguished_ratio_attained && case1_ratio_attained;
}

std::string StructureReport::to_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p << ",\"n_max\":" << n_max << ",\"pass\":" << (all_pass() ? "true" : "false")
     << ",\"ratio_distinguished\":{\"attained\":" << (distinguished_ratio_attained ? "true" : "false")
     << ",\"interval\":\"" << distinguished_witness << "\"}"
     << ",\"ratio_case1\":{\"attained\":" << (case1_ratio_attained ? "true" : "false") << ",\"interval\":\""
     << case1_witness << "\"},\"clauses\":[";
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& c = clauses[i];
    if (i) os << ',';
    os << "{\"clause\":\"" << c.clause << "\",\"level\":" << c.level << ",\"intervals\":" << c.checked
       << ",\"pass\":" << (c.pass ? "true" : "false") << ",\"witness\":\"" << c.witness << "\"}";
  }
  os << "]}";
  return os.str();
}

StructureReport verify_structure(const SigmaParam& sp, int n_max) {
  auto pe = sp.dyadic_exponent();
  if (!pe) throw Error(Errc::domain, "structure checks need sigma = 2^-p with p >= 2");
  if (n_max < 3) throw Error(Errc::domain, "n_max must be >= 3");
  const int p = *pe;
  Grid g = make_grid(sp, n_max);
  auto levels = all_levels(g, n_max);
  StructureReport rep;
  rep.p = p;
  rep.n_max = n_max;
  const i64 two_p = i64{1} << p;

  auto fail = [](ClauseResult& c, std::string w) {
    if (c.pass) c.witness = std::move(w);
    c.pass = false;
  };

  for (int n = 2; n <= n_max; ++n) {
    const auto& arcs = levels[n - 2];
    const i64 max_len = (g.D >> (n - 1)) - (g.D >> (n - 1 + p));  // 2^{-n+1}(1-s)

    ClauseResult c1{"i", n, arcs.size(), true, ""};
    ClauseResult c2{"ii", n, 2, true, ""};
    ClauseResult c4{"iv", n, arcs.size(), true, ""};
    int seen_half = 0, seen_zero = 0;
    for (const Arc& arc : arcs) {
      for (i64 e : {arc.lo, arc.hi}) {
        i64 m = e % g.D;
        int gen = m == 0 ? 0 : g.log2D - ctz64(m);
        if (gen < 2 + p || gen > n + p) fail(c1, arc_str(g, arc));
      }
      i64 len = arc.hi - arc.lo;
      if (len <= 0 || len > max_len) fail(c4, arc_str(g, arc));
      if (arc.lo + arc.hi == g.D) seen_half += len == max_len;
      if (arc.lo + arc.hi == 2 * g.D) seen_zero += len == max_len;
    }
    if (seen_half != 1 || seen_zero != 1) fail(c2, "distinguished interval missing");
    rep.clauses.push_back(c1);
    rep.clauses.push_back(c2);

    if (n < n_max) {
      std::vector<Arc> children;
      std::vector<std::size_t> first;
      refine(g, arcs, n + 1, children, &first);
      ClauseResult c3{"iii", n, arcs.size(), true, ""};
      ClauseResult c5{"v", n, arcs.size(), true, ""};
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& arc = arcs[i];
        std::size_t count = first[i + 1] - first[i];
        bool distinguished = arc.lo + arc.hi == g.D || arc.lo + arc.hi == 2 * g.D;
        if (count < 1 || count > 3 || (distinguished && count != 3)) fail(c3, arc_str(g, arc));
        i128 kept = 0;
        for (std::size_t c = first[i]; c < first[i + 1]; ++c) kept += children[c].hi - children[c].lo;
        i128 m = arc.hi - arc.lo;
        // kept/m >= (3 - 8s)/(3 - 4s), scaled by 2^p.
        if (kept * (3 * two_p - 4) < (3 * two_p - 8) * m) fail(c5, arc_str(g, arc));
        if (distinguished && kept * (two_p - 1) == (two_p - 2) * m && !rep.distinguished_ratio_attained) {
          rep.distinguished_ratio_attained = true;
          rep.distinguished_witness = arc_str(g, arc);
        }
        if (!distinguished && kept * (two_p - 2) == (two_p - 3) * m && !rep.case1_ratio_attained) {
          rep.case1_ratio_attained = true;
          rep.case1_witness = arc_str(g, arc);
        }
      }
      rep.clauses.push_back(c3);
      rep.clauses.push_back(c4);
      rep.clauses.push_back(c5);
    } else {
      rep.clauses.push_back(c4);
    }
  }
  return rep;
}

Rational structure_lambda(const SigmaParam& sp) {
  const Rational& s = sp.sigma();
  if (s >= Rational(3, 8)) throw Error(Errc::domain, "lambda needs sigma < 3/8");
  return (Rational(3) - 4 * s) / (Rational(3) - 8 * s);
}

double dim_lower_bound(const SigmaParam& sp, bool strict) {
  if (sp.sigma() >= Rational(3, 8)) {
    if (strict) throw Error(Errc::domain, "dimension bound needs sigma < 3/8");
    return 0.0;
  }
  Rational lambda = structure_lambda(sp);
  double v = 1.0 - std::log2(lambda.get_d());
  return std::max(0.0, v);
}

std::vector<WeightedInterval> mass_distribution(const SigmaParam& sp, int n, bool restricted) {
  auto pe = sp.dyadic_exponent();
  if (!pe) throw Error(Errc::domain, "mass distribution needs sigma = 2^-p");
  const int p = *pe;
  const int start = restricted ? p + 1 : 2;
  if (n < start) throw Error(Errc::domain, "level below the starting level of the measure");
  Grid g = make_grid(sp, n);
  auto levels = all_levels(g, n);

  std::vector<Arc> cur = levels[start - 2];
  if (restricted) {
    const i64 lo = (g.D - (g.D >> p)) / 2;
    const i64 hi = (g.D + (g.D >> p)) / 2;
    std::erase_if(cur, [&](const Arc& a) { return a.lo < lo || a.hi > hi; });
  }
  i64 total = 0;
  for (const Arc& a : cur) total += a.hi - a.lo;
  std::vector<Rational> w;
  for (const Arc& a : cur) w.emplace_back(Rational(Integer(static_cast<long>(a.hi - a.lo)), Integer(static_cast<long>(total))));
  for (auto& x : w) x.canonicalize();

  for (int k = start + 1; k <= n; ++k) {
    std::vector<Arc> next;
    std::vector<std::size_t> first;
    refine(g, cur, k, next, &first);
    std::vector<Rational> nw(next.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      i64 kept = 0;
      for (std::size_t c = first[i]; c < first[i + 1]; ++c) kept += next[c].hi - next[c].lo;
      for (std::size_t c = first[i]; c < first[i + 1]; ++c) {
        Rational f(Integer(static_cast<long>(next[c].hi - next[c].lo)), Integer(static_cast<long>(kept)));
        f.canonicalize();
        nw[c] = w[i] * f;
      }
    }
    cur = std::move(next);
    w = std::move(nw);
  }
  std::vector<WeightedInterval> out;
  out.reserve(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) out.push_back({{unit(g, cur[i].lo), unit(g, cur[i].hi)}, w[i]});
  return out;
}

bool membership(const Angle& t, const SigmaParam& sp, int depth) {
  if (depth < 2) throw Error(Errc::domain, "depth must be >= 2");
  // ||t||_k = 2^-k |2 d^{k-1}(t) - 1|, so the test reads |d^j(t) - 1/2| >= s/2.
  return orbit_keeps_away(t, sp, depth - 1);
}

bool membership(const BinaryWord& w, const SigmaParam& sp, int depth) {
  return membership(Angle(w.value()), sp, depth);
}

bool membership_exact(const Angle& t, const SigmaParam& sp) {
  return orbit_keeps_away(t, sp, std::numeric_limits<long>::max());
}

std::string_view to_string(RunVerdict v) {
  switch (v) {
    case RunVerdict::member: return "member";
    case RunVerdict::nonmember: return "nonmember";
    case RunVerdict::insufficient: return "insufficient";
  }
  return "?";
}

RunVerdict membership_runlength(const BinaryWord& w, int p) {
  const long L = static_cast<long>(w.size());
  if (p < 2) throw Error(Errc::domain, "run length must be >= 2");
  if (L < p + 2) throw Error(Errc::domain, "word shorter than p + 2");
  bool undecided[2] = {false, false};
  // 0-based start m of a maximal run w[m..m+p-1], preceded by the other bit.
  for (long m = 2; m + p <= L; ++m) {
    int bit = w[m];
    if (w[m - 1] == bit) continue;
    bool run = true;
    for (long i = m + 1; i < m + p && run; ++i) run = w[i] == bit;
    if (!run) continue;
    // A run of ones is harmless only when everything after it is 0; a run of
    // zeros only when everything after it is 1. Both are boundary points.
    bool tail_matches = true;
    for (long i = m + p; i < L && tail_matches; ++i) tail_matches = w[i] != bit;
    if (!tail_matches) return RunVerdict::nonmember;
    undecided[bit] = true;
  }
  // An undecided run of ones needs the zero tail, one of zeros the ones tail.
  if (undecided[0] && undecided[1]) return RunVerdict::nonmember;
  return undecided[0] || undecided[1] ? RunVerdict::insufficient : RunVerdict::member;
}

PorosityWitness porosity_witness(const SigmaParam& sp, const Interval& I) {
  Rational len = I.length();
  if (len <= 0 || len > 1) throw Error(Errc::domain, "porosity needs 0 < m(I) <= 1");
  int n = 2;
  // 2^-(n-1) < m(I) <= 2^-(n-2)
  while (!(len * (Integer(1) << (n - 1)) > 1)) ++n;
  Integer scale = Integer(1) << n;
  Rational x = I.lo * Rational(scale);
  Integer a;
  mpz_cdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational denom(Integer(1) << (n + 1));
  Rational center = Rational(2 * a + 1) / denom;
  Rational half = sp.sigma() / denom;
  return {{center - half, center + half}, n + 1};
}

double boxdim_estimate(const SigmaParam& sp, int lo, int hi) {
  if (lo < 2 || hi < lo) throw Error(Errc::domain, "bad level range");
  auto counts = level_counts(sp, hi);
  std::vector<double> xs, ys;
  for (int n = lo; n <= hi; ++n) {
    xs.push_back(n);
    ys.push_back(std::log2(static_cast<double>(counts[n - 2])));
  }
  return least_squares(xs, ys).slope;
}

}  // namespace rays
