#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigroup/core.hpp"

namespace trigroup {

enum class CountMode { Canonical, Ordered };
enum class CensusBound { Height, MaxEntry };

std::string to_string(CountMode mode);
CountMode parse_count_mode(const std::string& text);

inline constexpr std::int64_t kDefaultCensusCap = 2000;

struct CensusOptions {
  CountMode mode = CountMode::Canonical;
  bool primitive_only = false;
  bool materialize = false;
  unsigned workers = 1;
  std::int64_t feasibility_cap = kDefaultCensusCap;
};

struct CensusReport {
  std::int64_t bound = 0;
  CensusBound kind = CensusBound::Height;
  CountMode mode = CountMode::Canonical;
  Integer count = 0;
  /// Filled when materialized: canonical mode holds sorted-nonincreasing
  /// tuples; ordered mode holds every distinct ordering. Sorted either way.
  std::vector<Quadruple> quadruples;
};

/// Quadruples with height sqrt(a^2+b^2+c^2+d^2) <= height_bound, listed.
CensusReport enumerate_all(std::int64_t height_bound, CensusOptions options = {});

/// Count-only census by height.
CensusReport count_by_height(std::int64_t n, CensusOptions options = {});

/// Census of quadruples whose largest entry is <= n. Every enumerated
/// quadruple is checked against max <= H <= 2 max.
CensusReport count_by_max(std::int64_t n, CensusOptions options = {});

struct SweepRow {
  std::int64_t n;
  Integer count;
  /// count / (n^2 ln^3 n); empty at n = 1 where the log vanishes.
  std::optional<double> ratio;
};

/// count_by_height for every n in 1..max_n from a single enumeration.
std::vector<SweepRow> height_sweep(std::int64_t max_n, CensusOptions options = {});

struct DivisorSquareSum {
  Integer sum;
  /// sum / (n ln^3 n); empty at n = 1.
  std::optional<double> ratio;
};

inline constexpr std::int64_t kDivisorSieveCap = 100'000'000;

/// Exact sum of d(k)^2 for k = 1..n via a divisor-count sieve.
DivisorSquareSum divisor_square_sum(std::int64_t n);

}  // namespace trigroup
