#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trigroup/core.hpp"
#include "trigroup/simplex.hpp"

using namespace trigroup;

namespace {

SimplexTuple tup(std::size_t n, std::vector<Rational> v) { return SimplexTuple(n, std::move(v)); }

}  // namespace

TEST_CASE("tuple validation") {
  CHECK_THROWS_AS(tup(1, {1, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(tup(2, {1, 1, 1}), InvalidInput);
  CHECK_NOTHROW(tup(2, {0, 1, 1, 1}));
}

TEST_CASE("identity") {
  CHECK(verify_identity(tup(3, {1, Rational(3, 8), Rational(3, 8), Rational(3, 8), Rational(3, 8)})) == 0);
  CHECK(verify_identity(tup(2, {7, 4, 3, 1})) == 0);
  CHECK(verify_identity(tup(2, {1, 1, 1, 1})) != 0);
}

TEST_CASE("reflection") {
  const auto t = tup(3, {1, Rational(3, 8), Rational(3, 8), Rational(3, 8), Rational(3, 8)});
  ReflectResult r = simplex_reflect(t, 4);
  CHECK(r.tuple.entries[4] == Rational(25, 24));
  CHECK_FALSE(r.negative_entry);
  CHECK(verify_identity(r.tuple) == 0);
  CHECK(simplex_reflect(r.tuple, 4).tuple == t);
  CHECK_FALSE(is_integral(r.tuple));
  CHECK_THROWS_AS(simplex_reflect(t, 0), InvalidInput);
  CHECK_THROWS_AS(simplex_reflect(t, 5), InvalidInput);
}

TEST_CASE("n = 2 reflection is the quadruple generator") {
  for (const auto& o : oracle::all_ordered(25)) {
    const Quadruple q(Vec4{o[0], o[1], o[2], o[3]});
    const auto t = tup(2, {o[0], o[1], o[2], o[3]});
    for (std::size_t i = 1; i <= 3; ++i) {
      const Quadruple image = apply_generator(q, GeneratorIndex(static_cast<int>(i) + 1));
      ReflectResult r = simplex_reflect(t, i);
      for (std::size_t k = 0; k < 4; ++k) CHECK(r.tuple.entries[k] == Rational(image[k]));
    }
  }
}

TEST_CASE("negative entries are flagged") {
  bool seen = false;
  for (const auto& o : oracle::all_ordered(10))
    for (std::size_t i = 1; i <= 3; ++i) {
      ReflectResult r = simplex_reflect(tup(2, {o[0], o[1], o[2], o[3]}), i);
      CHECK(r.negative_entry == (r.tuple.entries[i] < 0));
      seen = seen || r.negative_entry;
    }
  // With a_0 fixed, the n = 2 reflection never leaves the nonnegative quadruples.
  CHECK_FALSE(seen);
  ReflectResult neg = simplex_reflect(tup(3, {0, 0, 0, 0, 3}), 4);
  CHECK(neg.negative_entry);
}

TEST_CASE("regular simplex and configurations") {
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    PointConfiguration cfg = regular_simplex(n, 3);
    CHECK(is_regular(cfg));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) CHECK(cfg.distance_squared(cfg.vertices[i], cfg.vertices[j]) == 3);
  }
  PointConfiguration cfg = regular_simplex(3, 1);
  SimplexTuple t = tuple_from_configuration(cfg);
  CHECK(t.entries == std::vector<Rational>{1, 0, 1, 1, 1});
  CHECK(verify_identity(t) == 0);
  PointConfiguration bad = cfg;
  bad.vertices[1][0] = 2;
  CHECK_FALSE(is_regular(bad));
  CHECK_THROWS_AS(tuple_from_configuration(bad), InvalidInput);
}

TEST_CASE("configuration_from_tuple round trips") {
  const auto t = tup(3, {1, Rational(3, 8), Rational(3, 8), Rational(3, 8), Rational(3, 8)});
  PointConfiguration cfg = configuration_from_tuple(t);
  CHECK(tuple_from_configuration(cfg) == t);
  CHECK_THROWS_AS(configuration_from_tuple(tup(2, {1, 1, 1, 1})), InvalidInput);
  const auto q = tup(2, {7, 4, 3, 1});
  CHECK(tuple_from_configuration(configuration_from_tuple(q)) == q);
}

TEST_CASE("gram matrix and determinant") {
  auto g = gram_matrix(tup(2, {1, 2, 3, 4}));
  REQUIRE(g.size() == 3);
  CHECK(g[0][0] == 4);
  CHECK(g[0][1] == 4);
  CHECK(g[1][2] == 6);
  CHECK(determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(determinant({{Rational(1, 2), 0}, {0, Rational(2, 3)}}) == Rational(1, 3));
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("gram residual two paths") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int k = 0; k < 30; ++k) {
      std::vector<Rational> v;
      for (std::size_t i = 0; i < n + 2; ++i) v.emplace_back(num(rng), den(rng));
      GramResidual r = gram_residual(tup(n, v));
      CHECK(r.agree());
    }
    GramResidual zero = gram_residual(regular_simplex(n, 2));
    CHECK(zero.agree());
    CHECK(zero.determinant == 0);
  }
}

TEST_CASE("a non-integral reflection exists in dimension 3") {
  auto ex = nonintegral_reflection_example(3);
  REQUIRE(ex);
  const auto& [t, index] = *ex;
  CHECK(is_integral(t));
  CHECK(verify_identity(t) == 0);
  CHECK_FALSE(is_integral(simplex_reflect(t, index).tuple));
  CHECK_FALSE(nonintegral_reflection_example(2).has_value());
}
