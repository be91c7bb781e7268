#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "trigroup/integer.hpp"
#include "trigroup/matrix.hpp"

namespace trigroup {

using Vec4 = std::array<Integer, 4>;
using IntMatrix4 = Matrix4<Integer>;

/// Index of one of the four reflections S1..S4 (1-based, as in the literature).
class GeneratorIndex {
 public:
  explicit GeneratorIndex(int i);
  int value() const { return value_; }
  std::size_t position() const { return static_cast<std::size_t>(value_ - 1); }
  auto operator<=>(const GeneratorIndex&) const = default;

 private:
  int value_;
};

/// An ordered nonnegative integer 4-tuple with 3(a^2+b^2+c^2+d^2) = (a+b+c+d)^2,
/// excluding the all-zero tuple. Construction validates.
class Quadruple {
 public:
  explicit Quadruple(Vec4 entries);
  Quadruple(Integer a, Integer b, Integer c, Integer d);

  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  const Vec4& entries() const { return entries_; }

  Integer sum() const;
  Integer max() const;
  /// a^2 + b^2 + c^2 + d^2, i.e. the squared height.
  Integer height_squared() const;
  /// Entries sorted nonincreasing (multiset identity for censuses).
  Quadruple canonical() const;
  bool is_canonical() const;

  std::string str() const;

  auto operator<=>(const Quadruple&) const = default;

 private:
  struct Trusted {};
  Quadruple(Vec4 entries, Trusted) : entries_(std::move(entries)) {}
  friend Quadruple apply_generator(const Quadruple& q, GeneratorIndex i);

  Vec4 entries_;
};

/// Q(x) = 3 sum x_i^2 - (sum x_i)^2 = x A x^T.
Integer q_form(const Vec4& x);

bool is_triangle_quadruple(const Vec4& x);

/// Replaces entry i by (sum of the other three) - (entry i).
Quadruple apply_generator(const Quadruple& q, GeneratorIndex i);

/// The literal reflection matrix S_i acting on column vectors.
const IntMatrix4& generator_matrix(GeneratorIndex i);

/// Symmetric form matrix with 2 on the diagonal and -1 elsewhere.
const IntMatrix4& cartan_form();

struct RelationCheck {
  std::string name;
  bool holds;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_hold() const;
};

/// S_i^2 = I for each i and (S_i S_j)^3 = I for each ordered pair i != j.
RelationReport verify_coxeter_relations();

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  auto operator<=>(const Signature&) const = default;
};

/// Signature of the form matrix, from an exhibited eigenbasis:
/// A(1,1,1,1) = -(1,1,1,1) and A v = 3v for three independent zero-sum v.
Signature cartan_signature();

/// (a,b,c,d) sorted nonincreasing maps to (x,y,z,w) = (a, b, a+b-c, a+b-d),
/// which satisfies -6xy + 2z^2 - 2zw + 2w^2 = Q(q) = 0.
/// Throws InvalidInput when q is not sorted nonincreasing.
std::array<Integer, 4> substitution_map(const Quadruple& q);

/// Number of distinct orderings of the entries (4!/prod of multiplicity!).
int distinct_permutations(const Vec4& x);

}  // namespace trigroup
