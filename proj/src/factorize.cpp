#include "trigroup/factorize.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace trigroup {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 1 << 16;
constexpr u64 kRhoBudget = 1ull << 26;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Brent's cycle variant with batched gcds.
u64 pollard_brent(u64 n, u64 c) {
  if (n % 2 == 0) return 2;
  auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
  u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
  const u64 m = 128;
  u64 r = 1;
  u64 iterations = 0;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (u64 i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    }
    r <<= 1;
    iterations += r;
    if (iterations > kRhoBudget) throw ResourceLimit("Pollard rho budget exhausted");
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split_u64(u64 n, Factorization& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[Integer(n)];
    return;
  }
  for (u64 c = 1;; ++c) {
    u64 d = pollard_brent(n, c);
    if (d != n && d != 1) {
      split_u64(d, out);
      split_u64(n / d, out);
      return;
    }
  }
}

// Floor of the e-th root by bisection.
Integer kth_root(const Integer& n, unsigned e) {
  Integer lo = 1, hi = Integer(1) << (msb(n) / e + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (pow(mid, e) <= n) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

// Rho cannot split p^e quickly when p is large, so perfect powers are peeled first.
std::optional<std::pair<Integer, unsigned>> perfect_power(const Integer& n) {
  for (unsigned e = msb(n); e >= 2; --e) {
    Integer r = kth_root(n, e);
    if (r > 1 && pow(r, e) == n) return std::make_pair(r, e);
  }
  return std::nullopt;
}

// Rho over arbitrary precision for cofactors that exceed 64 bits.
void split_big(const Integer& n, Factorization& out) {
  if (n <= std::numeric_limits<u64>::max()) {
    split_u64(static_cast<u64>(n), out);
    return;
  }
  std::mt19937_64 rng(0x7269616e676c65ULL);
  if (boost::multiprecision::miller_rabin_test(n, 32, rng)) {
    ++out[n];
    return;
  }
  if (auto pp = perfect_power(n)) {
    Factorization inner;
    split_big(pp->first, inner);
    for (const auto& [p, e] : inner) out[p] += e * pp->second;
    return;
  }
  for (unsigned c = 1; c < 64; ++c) {
    Integer x = 2, y = 2, d = 1;
    u64 steps = 0;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(x > y ? Integer(x - y) : Integer(y - x), n);
      if (++steps > kRhoBudget / 64) throw ResourceLimit("factorization budget exhausted");
    }
    if (d != n) {
      split_big(d, out);
      split_big(n / d, out);
      return;
    }
  }
  throw ResourceLimit("factorization failed for " + n.str());
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for every 64-bit n.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(const Integer& k) {
  if (k < 1) throw InvalidInput("factorize needs k >= 1, got " + k.str());
  Factorization out;
  if (k <= std::numeric_limits<u64>::max()) {
    u64 n = static_cast<u64>(k);
    for (u64 p = 2; p < kTrialBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
      while (n % p == 0) {
        ++out[Integer(p)];
        n /= p;
      }
    }
    split_u64(n, out);
    return out;
  }
  Integer n = k;
  for (u64 p = 2; p < kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n > 1) split_big(n, out);
  return out;
}

Integer divisor_count(const Integer& k) {
  Integer count = 1;
  for (const auto& [p, e] : factorize(k)) count *= (e + 1);
  return count;
}

}  // namespace trigroup
