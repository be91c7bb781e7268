#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "trigroup/orbit.hpp"
#include "trigroup/reduction.hpp"

using namespace trigroup;

namespace {

using M = std::array<std::int64_t, 16>;

M gen(int i) {
  M m{};
  for (int r = 0; r < 4; ++r) m[static_cast<std::size_t>(5 * r)] = 1;
  for (int c = 0; c < 4; ++c) m[static_cast<std::size_t>(4 * (i - 1) + c)] = 1;
  m[static_cast<std::size_t>(5 * (i - 1))] = -1;
  return m;
}

M mul(const M& x, const M& y) {
  M z{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) z[static_cast<std::size_t>(4 * i + j)] += x[static_cast<std::size_t>(4 * i + k)] * y[static_cast<std::size_t>(4 * k + j)];
  return z;
}

// Plain set-based BFS over matrices: distinct elements per word length.
std::vector<std::uint64_t> oracle_growth(std::size_t depth, std::vector<int> gens = {1, 2, 3, 4}) {
  M id{};
  for (int r = 0; r < 4; ++r) id[static_cast<std::size_t>(5 * r)] = 1;
  std::set<M> seen{id};
  std::vector<M> frontier{id};
  std::vector<std::uint64_t> sizes{1};
  for (std::size_t n = 1; n <= depth; ++n) {
    std::set<M> next;
    for (const auto& w : frontier)
      for (int g : gens) {
        M m = mul(w, gen(g));
        if (!seen.count(m)) next.insert(m);
      }
    seen.insert(next.begin(), next.end());
    frontier.assign(next.begin(), next.end());
    sizes.push_back(next.size());
  }
  return sizes;
}

}  // namespace

TEST_CASE("Word rendering") {
  CHECK(Word{}.str() == "I");
  CHECK(extremal_word(4).str() == "S4S3S2S1");
  CHECK(extremal_word(0).length() == 0);
  CHECK(extremal_word(6).str() == "S2S1S4S3S2S1");
  for (std::size_t n = 0; n < 20; ++n) CHECK(extremal_word(n).length() == n);
}

TEST_CASE("element BFS matches a set-based oracle") {
  auto expect = oracle_growth(6);
  ElementSearch s = bfs_elements(6);
  CHECK(s.layer_sizes == expect);
  CHECK(s.layer_sizes == std::vector<std::uint64_t>{1, 4, 12, 30, 72, 168, 390});
  CHECK(s.cumulative(2) == 17);
}

TEST_CASE("BFS layers do not depend on worker count") {
  SearchOptions one, three;
  three.workers = 3;
  ElementSearch a = bfs_elements(6, one, true);
  ElementSearch b = bfs_elements(6, three, true);
  REQUIRE(a.layers.size() == b.layers.size());
  for (std::size_t n = 0; n < a.layers.size(); ++n) {
    REQUIRE(a.layers[n].size() == b.layers[n].size());
    for (std::size_t k = 0; k < a.layers[n].size(); ++k) {
      CHECK(a.layers[n][k].matrix == b.layers[n][k].matrix);
      CHECK(a.layers[n][k].word == b.layers[n][k].word);
    }
  }
}

TEST_CASE("stored words evaluate to their matrices and have minimal length") {
  ElementSearch s = bfs_elements(5, {}, true);
  for (std::size_t n = 0; n < s.layers.size(); ++n)
    for (const auto& e : s.layers[n]) {
      CHECK(e.word.length() == n);
      CHECK(word_matrix(e.word) == unpack(e.matrix));
    }
}

TEST_CASE("descent enumerator agrees with BFS") {
  auto d = count_elements_by_descent(9);
  CHECK(d == bfs_elements(9).layer_sizes);
}

TEST_CASE("growth recurrence") {
  CHECK(growth_recurrence(0) == 1);
  CHECK(growth_recurrence(1) == 4);
  CHECK(growth_recurrence(2) == 12);
  CHECK(growth_recurrence(3) == 29);
  CHECK(growth_recurrence(4) == 70);
  // With the measured G_3 = 30 seeded, the same three-term rule reproduces BFS from n = 4.
  auto g = count_elements_by_descent(12);
  for (std::size_t n = 4; n <= 12; ++n)
    CHECK(static_cast<std::int64_t>(g[n]) == 2 * static_cast<std::int64_t>(g[n - 1]) + 2 * static_cast<std::int64_t>(g[n - 2]) - 3 * static_cast<std::int64_t>(g[n - 3]));
}

TEST_CASE("element cap raises ResourceLimit") {
  SearchOptions tiny;
  tiny.element_cap = 100;
  CHECK_THROWS_AS(bfs_elements(8, tiny), ResourceLimit);
}

TEST_CASE("orbit vectors match a set-based oracle") {
  std::set<oracle::Tuple> seen{{0, 1, 1, 1}};
  std::vector<oracle::Tuple> frontier{{0, 1, 1, 1}};
  std::vector<std::uint64_t> cumulative{1};
  for (int n = 1; n <= 8; ++n) {
    std::vector<oracle::Tuple> next;
    for (const auto& t : frontier)
      for (int i = 0; i < 4; ++i) {
        oracle::Tuple u = t;
        u[static_cast<std::size_t>(i)] = t[0] + t[1] + t[2] + t[3] - 2 * t[static_cast<std::size_t>(i)];
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = next;
    cumulative.push_back(seen.size());
  }
  OrbitSearch o = orbit_vectors(Quadruple(0, 1, 1, 1), 8);
  CHECK(o.cumulative_sizes == cumulative);
  CHECK(o.cumulative_sizes[3] == 11);
  for (const auto& q : o.all()) {
    CHECK(is_triangle_quadruple(q.entries()));
    CHECK(same_ordered_orbit(q, Quadruple(0, 1, 1, 1)));
  }
}

TEST_CASE("height pruning keeps exactly the low-height part of the orbit") {
  OrbitOptions opts;
  opts.height_squared_bound = 30 * 30;
  OrbitSearch pruned = orbit_vectors(Quadruple(0, 1, 1, 1), 30, opts);
  std::set<Quadruple> got;
  for (const auto& q : pruned.all()) got.insert(q);
  std::set<Quadruple> expect;
  for (const auto& t : oracle::all_ordered(30))
    if (oracle::height_squared(t) <= 900 && oracle::primitive(t) && t[0] % 3 == 0)
      expect.insert(Quadruple(Vec4{t[0], t[1], t[2], t[3]}));
  CHECK(got == expect);
}

TEST_CASE("stabilizer growth") {
  StabilizerCounts s = stabilizer_counts(10);
  CHECK(s.layer_sizes[0] == 1);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(s.layer_sizes[n] == 3 * n);
  for (std::uint64_t n = 0; n <= 5; ++n) CHECK(s.cumulative(2 * n) == stabilizer_closed_form(n));
  CHECK(stabilizer_closed_form(2) == 31);
  CHECK(oracle_growth(6, {2, 3, 4}) == std::vector<std::uint64_t>(s.layer_sizes.begin(), s.layer_sizes.begin() + 7));
  for (const auto& g : {2, 3, 4}) CHECK(apply_generator(Quadruple(0, 5, 5, 5), GeneratorIndex(g)) == Quadruple(0, 5, 5, 5));
}

TEST_CASE("extremal words") {
  const Quadruple r(0, 1, 1, 1);
  CHECK(word_norm(extremal_word(4), r) == 13);
  CHECK(apply_word(extremal_word(1), r) == Quadruple(3, 1, 1, 1));
  // Rightmost letter acts first.
  Word w{{GeneratorIndex(2), GeneratorIndex(1)}};
  CHECK(apply_word(w, r) == apply_generator(apply_generator(r, GeneratorIndex(1)), GeneratorIndex(2)));
  CHECK(word_matrix(w).apply(r.entries()) == apply_word(w, r).entries());
}

TEST_CASE("exhaustive norm maximum against brute-force words") {
  const Quadruple r(0, 1, 1, 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    // All 4^n words; keep those whose matrix is not reached by any shorter word.
    const M id{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
    std::map<M, std::size_t> shortest{{id, 0}};
    std::vector<M> words{id};
    for (std::size_t len = 1; len <= n; ++len) {
      std::vector<M> next;
      for (const auto& m : words)
        for (int g = 1; g <= 4; ++g) {
          M x = mul(m, gen(g));
          next.push_back(x);
          shortest.emplace(x, len);
        }
      words = std::move(next);
    }
    std::int64_t best = 0;
    for (const auto& m : words) {
      if (shortest[m] != n) continue;
      for (int i = 0; i < 4; ++i) {
        std::int64_t v = m[static_cast<std::size_t>(4 * i + 1)] + m[static_cast<std::size_t>(4 * i + 2)] + m[static_cast<std::size_t>(4 * i + 3)];
        best = std::max(best, std::abs(v));
      }
    }
    NormMaximum got = max_norm_over_reduced_words(n, r);
    CHECK(got.max_norm == best);
    CHECK(got.max_norm <= word_norm(extremal_word(n), r));
    CHECK(word_norm(got.attained_by, r) == got.max_norm);
    CHECK(got.attained_by.length() == n);
    CHECK(got.maximizers >= 1);
  }
}

TEST_CASE("characteristic polynomial and gamma") {
  CHECK(char_poly_s4321() == std::array<Integer, 5>{1, -7, -15, -7, 1});
  CHECK(characteristic_polynomial(IntMatrix4::identity()) == std::array<Integer, 5>{1, -4, 6, -4, 1});
  // Cayley-Hamilton on the product itself.
  IntMatrix4 m = word_matrix(extremal_word(4));
  IntMatrix4 m2 = m * m, m3 = m2 * m, m4 = m3 * m;
  CHECK((m4 - m3.scaled(7) - m2.scaled(15) - m.scaled(7) + IntMatrix4::identity()).is_zero());

  SpectralRadius sr = spectral_radius(64);
  CHECK(sr.lower < sr.upper);
  CHECK(sr.upper - sr.lower < Rational(1, Integer(1) << 64));
  auto p = [](const Rational& t) { return (((t - 7) * t - 15) * t - 7) * t + 1; };
  CHECK(p(sr.lower) * p(sr.upper) <= 0);

  // Power iteration in floating point as an independent estimate.
  std::array<double, 4> v{1, 1, 1, 1};
  double lambda = 0;
  for (int it = 0; it < 200; ++it) {
    std::array<double, 4> w{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) w[static_cast<std::size_t>(i)] += m(i, j).convert_to<double>() * v[static_cast<std::size_t>(j)];
    double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3]);
    lambda = norm / std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    for (auto& x : w) x /= norm;
    v = w;
  }
  CHECK(std::abs(sr.value().convert_to<double>() - lambda) < 1e-9);
  CHECK(std::abs(sr.value().convert_to<double>() - 8.794621047462459) < 1e-12);

  CHECK(abs(gamma_closed_form() - sr.value()) < HighReal("1e-15"));
  CHECK(std::abs(gamma_closed_form_as_printed().convert_to<double>() - 6.99184) < 1e-4);
  CHECK(std::abs(growth_rate_lambda().convert_to<double>() - (1 + std::sqrt(13.0)) / 2) < 1e-15);
}

TEST_CASE("extremal norm ratios approach gamma") {
  const Quadruple r(0, 1, 1, 1);
  const double gamma = spectral_radius().value().convert_to<double>();
  double ratio = (word_norm(extremal_word(32), r).convert_to<double>()) / word_norm(extremal_word(28), r).convert_to<double>();
  CHECK(std::abs(ratio - gamma) / gamma < 0.05);
}

TEST_CASE("alpha") {
  CHECK_FALSE(alpha(Quadruple(0, 1, 1, 1)).has_value());
  CHECK(alpha(Quadruple(3, 1, 1, 1)) == 1u);
  CHECK(alpha(Quadruple(7, 4, 3, 1)) == 4u);  // 7 * 2^2 * 3
  auto small = search_small_alpha(20, 2);
  for (const auto& q : small) {
    CHECK(q.is_canonical());
    CHECK(is_primitive(q));
    CHECK(*alpha(q) <= 2u);
    CHECK(q.height_squared() <= 400);
  }
  CHECK(std::find(small.begin(), small.end(), Quadruple(3, 1, 1, 1)) != small.end());
}

TEST_CASE("growth table rows are consistent") {
  auto rows = growth_table(6, Quadruple(0, 1, 1, 1));
  REQUIRE(rows.size() == 7);
  std::uint64_t running = 0;
  for (const auto& row : rows) {
    CHECK(row.bfs_layer == row.descent_layer);
    running += row.bfs_layer;
    CHECK(row.cumulative == running);
    CHECK(row.orbit_size <= row.cumulative);
  }
}
