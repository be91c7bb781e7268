#include "trigroup/eisenstein.hpp"

#include <algorithm>
#include <cassert>

#include "trigroup/factorize.hpp"

namespace trigroup {

std::vector<NormFormSolution> solve_norm_form(std::int64_t k) {
  if (k < 0) throw InvalidInput("norm form target must be nonnegative");
  if (k > kMaxNormFormTarget) throw InvalidInput("norm form target too large");
  std::vector<NormFormSolution> out;
  // (2z - w)^2 + 3w^2 = 4k, so 3w^2 <= 4k.
  const std::int64_t w_max = isqrt(4 * k / 3);
  for (std::int64_t w = -w_max; w <= w_max; ++w) {
    const std::int64_t disc = 4 * k - 3 * w * w;
    auto root = exact_sqrt(disc);
    if (!root) continue;
    for (std::int64_t s : {-*root, *root}) {
      if ((w + s) % 2 != 0) continue;
      out.push_back({(w + s) / 2, w});
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer b_function(const Integer& m) {
  if (m < 1) throw InvalidInput("b_function needs m >= 1");
  Integer b = 1;
  for (const auto& [p, e] : factorize(m)) {
    const int residue = static_cast<int>(p % 3);
    if (residue == 0) continue;  // chi(3^j) = 0 for j >= 1
    if (residue == 1) {
      b *= (e + 1);
    } else if (e % 2 == 1) {
      return 0;
    }
  }
  return b;
}

Integer repr_count(const Integer& k) { return 6 * b_function(k); }

std::vector<PairExtension> quadruples_with_pair(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw InvalidInput("pair entries must be positive");
  std::int64_t target = checked_mul(3, checked_mul(p, q));
  std::vector<PairExtension> out;
  for (const auto& s : solve_norm_form(target)) {
    PairExtension ext{p, q, p + q - s.z, p + q - s.w};
    // Any solution yields a nonnegative quadruple.
    assert(ext.c >= 0 && ext.d >= 0);
    out.push_back(ext);
  }
  return out;
}

}  // namespace trigroup
