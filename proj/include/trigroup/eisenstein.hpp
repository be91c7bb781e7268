#pragma once

#include <cstdint>
#include <vector>

#include "trigroup/core.hpp"

namespace trigroup {

/// Integer (z, w) with z^2 - zw + w^2 = k.
struct NormFormSolution {
  std::int64_t z;
  std::int64_t w;
  auto operator<=>(const NormFormSolution&) const = default;
};

/// A triangle quadruple (p, q, c, d) extending a fixed positive pair.
struct PairExtension {
  std::int64_t p;
  std::int64_t q;
  std::int64_t c;
  std::int64_t d;
  Vec4 entries() const { return {p, q, c, d}; }
};

/// Largest k accepted by solve_norm_form (keeps 4k inside int64).
inline constexpr std::int64_t kMaxNormFormTarget = std::int64_t{1} << 60;

/// All solutions of z^2 - zw + w^2 = k, lexicographically sorted.
/// Scans |w| <= 2 sqrt(k/3) with exact integer square roots.
std::vector<NormFormSolution> solve_norm_form(std::int64_t k);

/// B(m) = sum over d | m of chi(d), chi the nontrivial character mod 3;
/// evaluated multiplicatively from the factorization of m.
Integer b_function(const Integer& m);

/// A(k) = 6 B(k): number of representations by the Eisenstein norm form.
Integer repr_count(const Integer& k);

/// Every (p, q, p+q-z, p+q-w) for (z, w) solving z^2 - zw + w^2 = 3pq.
std::vector<PairExtension> quadruples_with_pair(std::int64_t p, std::int64_t q);

}  // namespace trigroup
