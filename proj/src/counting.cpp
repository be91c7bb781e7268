#include "trigroup/counting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include "trigroup/reduction.hpp"

namespace trigroup {

namespace {

using Tuple = std::array<std::int64_t, 4>;

struct Filter {
  CensusBound kind;
  std::int64_t bound;
  bool primitive_only;
};

bool primitive(const Tuple& t) {
  std::int64_t g = 0;
  for (auto v : t) g = std::gcd(g, v);
  return g == 1;
}

// Canonical quadruples a >= b >= c >= d with the given leading-triple entry b.
void scan_leading(std::int64_t b, const Filter& f, std::vector<Tuple>& out) {
  const std::int64_t height_sq = f.bound * f.bound;
  for (std::int64_t c = 0; c <= b; ++c) {
    for (std::int64_t d = 0; d <= c; ++d) {
      if (f.kind == CensusBound::Height && b * b + c * c + d * d > height_sq) break;
      // 4a^2 - 4a(b+c+d) + ... = 0 gives 2a = (b+c+d) + sqrt(disc).
      const std::int64_t disc = 6 * (b * c + c * d + d * b) - 3 * (b * b + c * c + d * d);
      auto s = exact_sqrt(disc);
      if (!s) continue;
      const std::int64_t twice_a = b + c + d + *s;
      if (twice_a % 2 != 0) continue;
      const std::int64_t a = twice_a / 2;
      if (a < b || a == 0) continue;
      if (f.kind == CensusBound::Height) {
        if (a * a + b * b + c * c + d * d > height_sq) continue;
      } else if (a > f.bound) {
        continue;
      }
      Tuple t{a, b, c, d};
      if (f.primitive_only && !primitive(t)) continue;
      out.push_back(t);
    }
  }
}

std::vector<Tuple> canonical_census(const Filter& f, unsigned workers) {
  const std::int64_t leading_max = f.bound;
  workers = std::max(1u, workers);
  std::vector<std::vector<Tuple>> partial(workers);
  auto run = [&](unsigned w) {
    for (std::int64_t b = w; b <= leading_max; b += workers) scan_leading(b, f, partial[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Tuple> merged;
  for (auto& p : partial) merged.insert(merged.end(), p.begin(), p.end());
  std::sort(merged.begin(), merged.end());
  return merged;
}

Vec4 to_vec(const Tuple& t) { return {t[0], t[1], t[2], t[3]}; }

CensusReport run_census(CensusBound kind, std::int64_t bound, const CensusOptions& options) {
  if (bound < 1) throw InvalidInput("census bound must be positive");
  if (bound > options.feasibility_cap)
    throw ResourceLimit("census bound " + std::to_string(bound) + " exceeds cap " +
                        std::to_string(options.feasibility_cap));
  Filter f{kind, bound, options.primitive_only};
  std::vector<Tuple> canon = canonical_census(f, options.workers);

  CensusReport report;
  report.bound = bound;
  report.kind = kind;
  report.mode = options.mode;
  for (const auto& t : canon) {
    if (kind == CensusBound::MaxEntry) {
      const std::int64_t m = t[0];
      const std::int64_t h2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3];
      if (!(m * m <= h2 && h2 <= 4 * m * m)) throw std::logic_error("max/height sandwich violated");
    }
    Vec4 v = to_vec(t);
    if (options.mode == CountMode::Canonical) {
      report.count += 1;
      if (options.materialize) report.quadruples.emplace_back(v);
    } else {
      report.count += distinct_permutations(v);
      if (options.materialize) {
        Vec4 perm = v;
        std::sort(perm.begin(), perm.end());
        do {
          report.quadruples.emplace_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  if (options.materialize) {
    std::sort(report.quadruples.begin(), report.quadruples.end());
  }
  return report;
}

std::optional<double> log_ratio(const Integer& value, double n, double power_of_n) {
  const double l = std::log(n);
  if (l == 0.0) return std::nullopt;
  return static_cast<double>(value) / (std::pow(n, power_of_n) * l * l * l);
}

}  // namespace

std::string to_string(CountMode mode) { return mode == CountMode::Canonical ? "canonical" : "ordered"; }

CountMode parse_count_mode(const std::string& text) {
  if (text == "canonical") return CountMode::Canonical;
  if (text == "ordered") return CountMode::Ordered;
  throw InvalidInput("mode must be 'canonical' or 'ordered', got '" + text + "'");
}

CensusReport enumerate_all(std::int64_t height_bound, CensusOptions options) {
  options.materialize = true;
  return run_census(CensusBound::Height, height_bound, options);
}

CensusReport count_by_height(std::int64_t n, CensusOptions options) {
  return run_census(CensusBound::Height, n, options);
}

CensusReport count_by_max(std::int64_t n, CensusOptions options) {
  return run_census(CensusBound::MaxEntry, n, options);
}

std::vector<SweepRow> height_sweep(std::int64_t max_n, CensusOptions options) {
  options.materialize = false;
  if (max_n < 1) throw InvalidInput("sweep bound must be positive");
  if (max_n > options.feasibility_cap) throw ResourceLimit("sweep bound exceeds census cap");
  Filter f{CensusBound::Height, max_n, options.primitive_only};
  // first_n[n] = contribution of quadruples whose smallest admissible bound is n.
  std::vector<Integer> first_n(static_cast<std::size_t>(max_n) + 1, 0);
  for (const auto& t : canonical_census(f, options.workers)) {
    const std::int64_t h2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3];
    std::int64_t n = isqrt(h2);
    if (n * n < h2) ++n;
    first_n[static_cast<std::size_t>(n)] +=
        options.mode == CountMode::Canonical ? 1 : distinct_permutations(to_vec(t));
  }
  std::vector<SweepRow> rows;
  Integer running = 0;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    running += first_n[static_cast<std::size_t>(n)];
    rows.push_back({n, running, log_ratio(running, static_cast<double>(n), 2.0)});
  }
  return rows;
}

DivisorSquareSum divisor_square_sum(std::int64_t n) {
  if (n < 1) throw InvalidInput("divisor_square_sum needs n >= 1");
  if (n > kDivisorSieveCap) throw ResourceLimit("divisor sieve bound exceeds cap");
  std::vector<std::uint32_t> d(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = i; j <= n; j += i) ++d[static_cast<std::size_t>(j)];
  Integer sum = 0;
  std::uint64_t chunk = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::uint64_t dk = d[static_cast<std::size_t>(k)];
    chunk += dk * dk;
    if (chunk > (std::uint64_t{1} << 62)) {
      sum += chunk;
      chunk = 0;
    }
  }
  sum += chunk;
  return {sum, log_ratio(sum, static_cast<double>(n), 1.0)};
}

}  // namespace trigroup
