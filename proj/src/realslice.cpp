#include "rays/realslice.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

#include "rays/error.hpp"

namespace rays {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool fits_u64(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62; }

// Orbit test with machine words; requires den < 2^62.
bool in_R_u64(u64 a, u64 den) {
  if (2 * a == den || a == 0) return true;
  unsigned v = static_cast<unsigned>(__builtin_ctzll(den));
  u64 x = a;
  u64 anchor = 0;
  for (unsigned k = 1;; ++k) {
    x = static_cast<u64>((static_cast<u128>(x) * 2) % den);
    if (a < x && x < den - a) return false;
    if (k == v) anchor = x;
    if (k > v && x == (v == 0 ? a : anchor)) return true;
  }
}

bool in_R_mpz(const Integer& a, const Integer& den) {
  if (a == 0 || 2 * a == den) return true;
  unsigned long v = two_adic_valuation(den);
  Integer x = a;
  Integer anchor = a;
  Integer upper = den - a;
  for (unsigned long k = 1;; ++k) {
    x *= 2;
    if (x >= den) x -= den;
    if (a < x && x < upper) return false;
    if (k == v) anchor = x;
    if (k > v && x == anchor) return true;
  }
}

bool accepts_impl(int p, unsigned long n) {
  Integer m = (Integer(1) << p) - 1;
  Angle theta(Rational(Integer(n), m));
  Integer d = theta.denominator();
  if (d == 1 ? p != 1 : order_of_two(d) != static_cast<unsigned long>(p)) return false;
  if (!in_R(theta)) return false;
  Integer mp = (Integer(1) << p) + 1;
  return in_R(Angle(Rational(Integer(n + 1), mp)));
}

}  // namespace

std::string Opening::to_json() const {
  return "{\"p\":" + std::to_string(period) + ",\"n\":" + std::to_string(index) + ",\"theta_minus\":\"" +
         theta_minus.str() + "\",\"omega_minus\":\"" + omega_minus.str() + "\",\"length\":\"" +
         to_string(length) + "\"}";
}

Opening make_opening(int p, unsigned long n) {
  if (p < 1 || p > 62) throw Error(Errc::domain, "period must be in [1, 62]");
  if (n > (1UL << (p - 1)) - 1) throw Error(Errc::domain, "index out of range for the period");
  Opening o;
  o.period = p;
  o.index = n;
  o.theta_minus = Angle(Rational(Integer(n), (Integer(1) << p) - 1));
  o.omega_minus = Angle(Rational(Integer(n + 1), (Integer(1) << p) + 1));
  o.length = o.omega_minus.value() - o.theta_minus.value();
  return o;
}

bool opening_accepted(int p, unsigned long n) {
  if (p < 1 || p > 62 || n > (1UL << (p - 1)) - 1) return false;
  return accepts_impl(p, n);
}

bool in_R(const Angle& t) {
  Integer a = t.numerator();
  const Integer den = t.denominator();
  if (2 * a > den) a = den - a;
  if (fits_u64(den)) return in_R_u64(a.get_ui(), den.get_ui());
  return in_R_mpz(a, den);
}

DepthVerdict in_R_depth(const BinaryWord& word, std::size_t N) {
  if (N < 1) throw Error(Errc::domain, "depth must be >= 1");
  const std::size_t L = word.size();
  if (L <= N) throw Error(Errc::insufficient_precision, "word shorter than depth");
  // Work with the representative in [0, 1/2]; complementing the bits maps the
  // enclosure of t onto the enclosure of 1-t.
  BinaryWord w = (word[0] == 1) ? word.complemented() : word;
  const auto Lb = static_cast<mp_bitcnt_t>(L);
  const Integer A = w.as_integer();  // t in [A, A+1] / 2^L
  const Integer full = Integer(1) << Lb;
  for (std::size_t k = 1; k <= N; ++k) {
    // d^k(t) in [B, B+1] * 2^k / 2^L.
    Integer B = w.suffix_from(k).as_integer();
    Integer lo = B << static_cast<mp_bitcnt_t>(k);
    Integer hi = (B + 1) << static_cast<mp_bitcnt_t>(k);
    if (lo > A + 1 && hi < full - A - 1) return {false, k};
    bool outside = hi <= A || lo >= full - A;
    if (!outside) {
      throw Error(Errc::insufficient_precision, "step " + std::to_string(k) + " is undecidable from " +
                                                    std::to_string(L) + " bits");
    }
  }
  return {true, 0};
}

std::vector<Opening> enumerate_openings(int P, unsigned jobs) {
  if (P < 1 || P > 40) throw Error(Errc::domain, "max period must be in [1, 40]");
  jobs = std::max(1U, jobs);
  std::vector<std::pair<int, unsigned long>> candidates;
  for (int p = 1; p <= P; ++p) {
    for (unsigned long n = 0; n < (1UL << (p - 1)); ++n) candidates.emplace_back(p, n);
  }
  std::vector<std::vector<Opening>> found(jobs);
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < candidates.size(); i += jobs) {
      auto [p, n] = candidates[i];
      if (accepts_impl(p, n)) found[id].push_back(make_opening(p, n));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  std::vector<Opening> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end(),
            [](const Opening& a, const Opening& b) { return a.theta_minus < b.theta_minus; });
  return out;
}

Rational openings_length_sum(std::span<const Opening> openings) {
  Rational s = 0;
  for (const auto& o : openings) s += o.length;
  return s;
}

Rational openings_length_sum(int P, unsigned jobs) {
  auto ops = enumerate_openings(P, jobs);
  return openings_length_sum(ops);
}

IntervalSet cover_R(std::span<const Opening> openings) {
  std::vector<Interval> out;
  Rational left = 0;
  for (const auto& o : openings) {
    out.push_back({left, o.theta_minus.value()});
    left = o.omega_minus.value();
  }
  out.push_back({left, Rational(1, 2)});
  return IntervalSet(std::move(out));
}

IntervalSet cover_R(int P, unsigned jobs) {
  auto ops = enumerate_openings(P, jobs);
  return cover_R(ops);
}

BoxCount boxcount_dimension(const IntervalSet& s, std::span<const int> scales) {
  if (!std::is_sorted(scales.begin(), scales.end())) throw Error(Errc::domain, "scales must be increasing");
  return box_count(s, scales);
}

std::optional<Opening> find_opening(std::span<const Opening> openings, const Rational& t) {
  auto it = std::partition_point(openings.begin(), openings.end(),
                                 [&](const Opening& o) { return o.omega_minus.value() <= t; });
  if (it != openings.end() && it->contains(t)) return *it;
  return std::nullopt;
}

}  // namespace rays
