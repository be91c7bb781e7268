#include "trigroup/simplex.hpp"

#include <algorithm>
#include <functional>

namespace trigroup {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Rational sum_of(const RationalVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

RationalVector subtract(const RationalVector& x, const RationalVector& y) {
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

// Solves m x = rhs for a nonsingular m by Gauss-Jordan elimination.
RationalVector solve(RationalSquare m, RationalVector rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InvalidInput("singular metric");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

void check_shape(const PointConfiguration& cfg) {
  const std::size_t n = cfg.n;
  if (n < 1) throw InvalidInput("dimension must be positive");
  if (cfg.metric.size() != n || cfg.vertices.size() != n + 1 || cfg.point.size() != n)
    throw InvalidInput("configuration shape does not match dimension");
  for (const auto& row : cfg.metric)
    if (row.size() != n) throw InvalidInput("metric must be n x n");
  for (const auto& v : cfg.vertices)
    if (v.size() != n) throw InvalidInput("vertex has wrong dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cfg.metric[i][j] != cfg.metric[j][i]) throw InvalidInput("metric must be symmetric");
}

}  // namespace

SimplexTuple::SimplexTuple(std::size_t dim, RationalVector values) : n(dim), entries(std::move(values)) {
  if (n < 2) throw InvalidInput("simplex dimension must be at least 2");
  if (entries.size() != n + 2) throw InvalidInput("simplex tuple needs n + 2 entries");
}

Rational PointConfiguration::inner(const RationalVector& x, const RationalVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * metric[i][j] * y[j];
  }
  return s;
}

Rational PointConfiguration::distance_squared(const RationalVector& x, const RationalVector& y) const {
  const RationalVector d = subtract(x, y);
  return inner(d, d);
}

PointConfiguration regular_simplex(std::size_t n, const Rational& side_squared) {
  if (n < 1) throw InvalidInput("dimension must be positive");
  if (side_squared <= 0) throw InvalidInput("squared side must be positive");
  PointConfiguration cfg;
  cfg.n = n;
  cfg.metric.assign(n, RationalVector(n, side_squared / 2));
  for (std::size_t i = 0; i < n; ++i) cfg.metric[i][i] = side_squared;
  cfg.vertices.assign(n + 1, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) cfg.vertices[i + 1][i] = 1;
  cfg.point.assign(n, 0);
  return cfg;
}

bool is_regular(const PointConfiguration& cfg) {
  check_shape(cfg);
  const Rational side = cfg.distance_squared(cfg.vertices[0], cfg.vertices[1]);
  if (side == 0) return false;
  for (std::size_t i = 0; i < cfg.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.vertices.size(); ++j)
      if (cfg.distance_squared(cfg.vertices[i], cfg.vertices[j]) != side) return false;
  return true;
}

SimplexTuple tuple_from_configuration(const PointConfiguration& cfg) {
  if (!is_regular(cfg)) throw InvalidInput("vertices do not form a regular simplex");
  RationalVector entries;
  entries.push_back(cfg.distance_squared(cfg.vertices[0], cfg.vertices[1]));
  for (const auto& v : cfg.vertices) entries.push_back(cfg.distance_squared(cfg.point, v));
  return SimplexTuple(cfg.n, std::move(entries));
}

PointConfiguration configuration_from_tuple(const SimplexTuple& t) {
  if (verify_identity(t) != 0) throw InvalidInput("tuple does not satisfy the simplex identity");
  const std::size_t n = t.n;
  PointConfiguration cfg = regular_simplex(n, t.side_squared());
  // |P - e_j|^2 = |P|^2 - 2<P, e_j> + a_0 gives <P, e_j> = (a_1 + a_0 - a_{j+1}) / 2.
  RationalVector rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = (t.entries[1] + t.entries[0] - t.entries[j + 2]) / 2;
  cfg.point = solve(cfg.metric, rhs);
  if (tuple_from_configuration(cfg) != t) throw std::logic_error("realized point misses the requested distances");
  return cfg;
}

Rational verify_identity(const SimplexTuple& t) {
  Rational squares = 0;
  for (const auto& a : t.entries) squares += a * a;
  const Rational total = sum_of(t.entries);
  return Rational(t.n + 1) * squares - total * total;
}

RationalSquare gram_matrix(const SimplexTuple& t) {
  const std::size_t m = t.n + 1;
  RationalSquare g(m, RationalVector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      g[i][j] = (i == j) ? 2 * t.entries[i + 1] : t.entries[i + 1] + t.entries[j + 1] - t.entries[0];
  return g;
}

Rational determinant(const RationalSquare& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer common = 1;
  for (const auto& row : m)
    for (const auto& x : row) common = boost::multiprecision::lcm(common, Integer(denominator(x)));
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = numerator(m[i][j] * Rational(common));

  // Bareiss elimination: a[n-1][n-1] ends up as the determinant.
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  Integer scale = boost::multiprecision::pow(common, static_cast<unsigned>(n));
  return Rational(sign * a[n - 1][n - 1], scale);
}

GramResidual gram_residual(const SimplexTuple& t) {
  Rational squares = 0;
  for (const auto& a : t.entries) squares += a * a;
  const Rational total = sum_of(t.entries);
  Rational power = 1;
  for (std::size_t k = 1; k < t.n; ++k) power *= t.side_squared();
  return {determinant(gram_matrix(t)), power * (total * total - Rational(t.n + 1) * squares)};
}

GramResidual gram_residual(const PointConfiguration& cfg) { return gram_residual(tuple_from_configuration(cfg)); }

ReflectResult simplex_reflect(const SimplexTuple& t, std::size_t index) {
  if (index < 1 || index > t.n + 1) throw InvalidInput("reflection index must be in 1..n+1");
  Rational others = sum_of(t.entries) - t.entries[index];
  ReflectResult out{t, false};
  out.tuple.entries[index] = Rational(2, t.n) * others - t.entries[index];
  out.negative_entry = out.tuple.entries[index] < 0;
  return out;
}

bool is_integral(const SimplexTuple& t) {
  return std::all_of(t.entries.begin(), t.entries.end(), [](const Rational& x) { return denominator(x) == 1; });
}

std::optional<std::pair<SimplexTuple, std::size_t>> nonintegral_reflection_example(std::size_t n, int max_entry) {
  const std::size_t len = n + 2;
  std::optional<std::pair<SimplexTuple, std::size_t>> best;
  int best_sum = 0;
  std::vector<int> cur(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int partial) {
    if (best && partial > best_sum) return;
    if (pos == len) {
      if (cur[0] == 0) return;
      RationalVector entries(cur.begin(), cur.end());
      SimplexTuple t(n, entries);
      if (verify_identity(t) != 0) return;
      for (std::size_t idx = 1; idx <= n + 1; ++idx) {
        if (is_integral(simplex_reflect(t, idx).tuple)) continue;
        if (!best || partial < best_sum) {
          best = std::make_pair(t, idx);
          best_sum = partial;
        }
        return;
      }
      return;
    }
    for (int v = 0; v <= max_entry; ++v) {
      cur[pos] = v;
      rec(pos + 1, partial + v);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace trigroup
