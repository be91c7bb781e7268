#pragma once

// Brute-force references used only by the tests. None of these call into the
// library code paths they are compared against.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Tuple = std::array<std::int64_t, 4>;

inline bool satisfies(const Tuple& t) {
  std::int64_t sq = 0, s = 0;
  for (auto v : t) {
    sq += v * v;
    s += v;
  }
  return 3 * sq == s * s && s > 0;
}

inline std::int64_t height_squared(const Tuple& t) {
  return t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3];
}

inline std::int64_t max_entry(const Tuple& t) { return *std::max_element(t.begin(), t.end()); }

inline bool primitive(const Tuple& t) {
  std::int64_t g = 0;
  for (auto v : t) g = std::gcd(g, v);
  return g == 1;
}

/// Every ordered quadruple with all entries <= limit, by a plain 4-fold loop.
inline std::vector<Tuple> all_ordered(std::int64_t limit) {
  std::vector<Tuple> out;
  for (std::int64_t a = 0; a <= limit; ++a)
    for (std::int64_t b = 0; b <= limit; ++b)
      for (std::int64_t c = 0; c <= limit; ++c)
        for (std::int64_t d = 0; d <= limit; ++d) {
          Tuple t{a, b, c, d};
          if (satisfies(t)) out.push_back(t);
        }
  return out;
}

inline Tuple sorted_desc(Tuple t) {
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

/// Integer solutions of z^2 - zw + w^2 = k with |z|, |w| <= box.
inline std::vector<std::pair<std::int64_t, std::int64_t>> norm_form_box(std::int64_t k, std::int64_t box) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t z = -box; z <= box; ++z)
    for (std::int64_t w = -box; w <= box; ++w)
      if (z * z - z * w + w * w == k) out.emplace_back(z, w);
  return out;
}

inline std::int64_t divisor_count(std::int64_t k) {
  std::int64_t c = 0;
  for (std::int64_t d = 1; d <= k; ++d)
    if (k % d == 0) ++c;
  return c;
}

/// Sum over divisors of the nontrivial character mod 3.
inline std::int64_t chi_sum(std::int64_t m) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    if (d % 3 == 1) ++s;
    if (d % 3 == 2) --s;
  }
  return s;
}

}  // namespace oracle
