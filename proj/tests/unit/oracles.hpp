#pragma once

// Brute-force reference implementations on machine integers, written
// independently of the library.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

inline mpq_class frac(const mpz_class& n, const mpz_class& d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

using u64 = std::uint64_t;
using i128 = __int128;

inline void reduce(u64& n, u64& d) {
  u64 g = std::gcd(n, d);
  n /= g;
  d /= g;
}

// t = n/d in [0, 1]; t in R iff no d^k(t), k >= 1, lies in ]t, 1-t[.
inline bool in_R(u64 n, u64 d) {
  reduce(n, d);
  if (2 * n > d) n = d - n;
  std::vector<bool> seen(d, false);
  u64 x = n % d;
  while (true) {
    x = (2 * x) % d;
    if (seen[x]) return true;
    seen[x] = true;
    if (n < x && x < d - n) return false;
  }
}

// Angles t = n/d with d^j(t) outside ]a/b, 1 - a/b[ for all j >= 1.
inline bool in_S(u64 n, u64 d, u64 a, u64 b) {
  reduce(n, d);
  std::vector<bool> seen(d, false);
  u64 x = n % d;
  while (true) {
    x = (2 * x) % d;
    if (seen[x]) return true;
    seen[x] = true;
    i128 lo = i128(a) * d, v = i128(x) * b, hi = i128(b - a) * d;
    if (lo < v && v < hi) return false;
  }
}

// ||t||_k >= (a/b) 2^-k for 2 <= k <= depth, straight from the definition:
// 2^k t mod 2 lies at distance |r - 1| from the odd integers.
inline bool in_K(u64 n, u64 d, u64 a, u64 b, int depth) {
  reduce(n, d);
  u64 r = (n * 4) % (2 * d);
  for (int k = 2; k <= depth; ++k) {
    i128 dist = r > d ? i128(r - d) : i128(d - r);
    if (dist * b < i128(a) * d) return false;
    r = (2 * r) % (2 * d);
  }
  return true;
}

// in_K for every k >= 2.
inline bool in_K_all(u64 n, u64 d, u64 a, u64 b) {
  reduce(n, d);
  std::vector<bool> seen(2 * d, false);
  u64 r = (n * 4) % (2 * d);
  while (!seen[r]) {
    seen[r] = true;
    i128 dist = r > d ? i128(r - d) : i128(d - r);
    if (dist * b < i128(a) * d) return false;
    r = (2 * r) % (2 * d);
  }
  return true;
}

// Long division digits of n/d (n < d).
inline std::string digits(u64 n, u64 d, int count) {
  std::string s;
  for (int i = 0; i < count; ++i) {
    n *= 2;
    s += n >= d ? '1' : '0';
    if (n >= d) n -= d;
  }
  return s;
}

// 0.prefix (repetend)^inf as an exact rational.
inline mpq_class periodic_value(const std::string& prefix, const std::string& repetend) {
  mpz_class p(prefix.empty() ? "0" : prefix, 2), r(repetend, 2);
  mpz_class block = (mpz_class(1) << repetend.size()) - 1;
  mpq_class v = mpq_class(p) + frac(r, block);
  v /= mpq_class(mpz_class(1) << prefix.size());
  v.canonicalize();
  return v;
}

// Preperiod and period of n/d under doubling by iteration.
inline std::pair<u64, u64> cycle(u64 n, u64 d) {
  reduce(n, d);
  std::vector<long> first(d, -1);
  u64 x = n % d;
  for (long k = 0;; ++k) {
    if (first[x] >= 0) return {u64(first[x]), u64(k - first[x])};
    first[x] = k;
    x = (2 * x) % d;
  }
}

// Exact preperiodic expansion of n/d in [0, 1): prefix and repetend strings.
inline std::pair<std::string, std::string> expansion(u64 n, u64 d) {
  auto [pre, per] = cycle(n, d);
  std::string all = digits(n % d, d, int(pre + per));
  return {all.substr(0, pre), all.substr(pre)};
}

inline std::string substitute(const std::string& s, const std::string& w0, const std::string& w1) {
  std::string out;
  for (char ch : s) out += ch == '1' ? w1 : w0;
  return out;
}

}  // namespace oracle
