#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trigroup/integer.hpp"

namespace trigroup {

using RationalVector = std::vector<Rational>;
using RationalSquare = std::vector<RationalVector>;

/// (a_0, ..., a_{n+1}): squared side of a regular n-simplex followed by the
/// squared distances from a point to its n+1 vertices.
struct SimplexTuple {
  std::size_t n = 2;
  RationalVector entries;

  SimplexTuple() = default;
  SimplexTuple(std::size_t dim, RationalVector values);

  const Rational& side_squared() const { return entries.front(); }
  bool operator==(const SimplexTuple&) const = default;
};

/// Vertices and a point in rational coordinates with respect to a basis whose
/// Gram matrix is `metric` (symmetric positive definite). With the identity
/// metric these are ordinary Euclidean coordinates.
struct PointConfiguration {
  std::size_t n = 2;
  RationalSquare metric;
  std::vector<RationalVector> vertices;  // n + 1 of them
  RationalVector point;

  Rational inner(const RationalVector& x, const RationalVector& y) const;
  Rational distance_squared(const RationalVector& x, const RationalVector& y) const;
};

/// Vertices 0, e_1, ..., e_n under the metric side_sq (I + J) / 2, which makes
/// every pairwise squared distance equal side_sq. The point starts at the origin.
PointConfiguration regular_simplex(std::size_t n, const Rational& side_squared);

bool is_regular(const PointConfiguration& cfg);

/// Throws InvalidInput unless the vertices form a regular simplex.
SimplexTuple tuple_from_configuration(const PointConfiguration& cfg);

/// Places a point at the given squared vertex distances inside a regular
/// simplex of squared side a_0. Throws InvalidInput when the tuple does not
/// satisfy the identity (then no such point exists).
PointConfiguration configuration_from_tuple(const SimplexTuple& t);

/// (n+1) sum a_i^2 - (sum a_i)^2, zero iff the identity holds.
Rational verify_identity(const SimplexTuple& t);

/// G_ij = a_i + a_j - a_0 (i != j), G_ii = 2 a_i over i, j = 1..n+1.
RationalSquare gram_matrix(const SimplexTuple& t);

/// Determinant by fraction-free elimination after clearing denominators.
Rational determinant(const RationalSquare& m);

struct GramResidual {
  Rational determinant;   // det(G)
  Rational closed_form;   // a_0^(n-1) [(sum a)^2 - (n+1) sum a^2]
  bool agree() const { return determinant == closed_form; }
};

GramResidual gram_residual(const SimplexTuple& t);
GramResidual gram_residual(const PointConfiguration& cfg);

struct ReflectResult {
  SimplexTuple tuple;
  /// The reflected entry came out negative (not a squared distance).
  bool negative_entry = false;
};

/// Replaces entry `index` (1..n+1) by (2/n)(sum of the other entries) - entry.
ReflectResult simplex_reflect(const SimplexTuple& t, std::size_t index);

bool is_integral(const SimplexTuple& t);

/// Smallest (by entry sum, then lexicographic) nonnegative integer tuple in
/// dimension n that satisfies the identity yet reflects to a non-integer at
/// some index. Searches entries up to max_entry.
std::optional<std::pair<SimplexTuple, std::size_t>> nonintegral_reflection_example(std::size_t n,
                                                                                   int max_entry = 6);

}  // namespace trigroup
