#include <doctest.h>

#include "trigroup/lie_verify.hpp"

using namespace trigroup;

namespace {

IntMatrix4 s(int i) { return generator_matrix(GeneratorIndex(i)); }

}  // namespace

TEST_CASE("A1 matches its display") {
  CHECK_NOTHROW(compute_a1());
  CHECK(s(1) * s(2) * s(1) * s(3) == a1_display());
  CHECK(a1_display().determinant() == 1);
}

TEST_CASE("A1 is unipotent and B1 is its logarithm") {
  const IntMatrix4 id = IntMatrix4::identity();
  const IntMatrix4 nil = a1_display() - id;
  CHECK_FALSE((nil * nil).is_zero());
  CHECK((nil * nil * nil).is_zero());
  RationalMatrix log = a1_logarithm();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(log(i, j) == Rational(b1_display()(i, j)));
  CHECK(closed_form_derivative_at_zero() == b1_display());
}

TEST_CASE("powers of A1") {
  CHECK(a1_power(0) == IntMatrix4::identity());
  CHECK(a1_power(1) == a1_display());
  IntMatrix4 m = IntMatrix4::identity();
  for (unsigned n = 0; n <= 20; ++n) {
    CHECK(a1_power(n) == m);
    const Integer nn = n;
    CHECK(m(2, 3) == 3 * nn * nn - 2 * nn);
    // Every other entry of the displayed closed form is right.
    IntMatrix4 cf = a1_power_closed_form(n);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!(i == 2 && j == 3)) CHECK(cf(i, j) == m(i, j));
    m = m * a1_display();
  }
}

TEST_CASE("closed form report records the (3,4) entry") {
  PowerFormulaReport r = a1_power_formula_check(20);
  CHECK(r.entries.size() == 21 * 16);
  CHECK(r.mismatches() == 20);
  auto first = r.first_mismatch();
  REQUIRE(first);
  CHECK(first->n == 1);
  CHECK(first->row == 3);
  CHECK(first->col == 4);
  CHECK(first->computed == 1);
  CHECK(first->closed_form == 4);
}

TEST_CASE("form algebra") {
  CHECK(in_form_algebra(b1_display()));
  CHECK_FALSE(in_form_algebra(IntMatrix4::identity()));
  CHECK(in_form_algebra(IntMatrix4{}));
  for (const auto& c : six_candidates()) {
    INFO(c.name);
    CHECK(c.matches_display());
    CHECK(c.in_algebra());
  }
  CHECK(six_candidates().size() == 6);
  CHECK(six_matrix_rank() == 6);
}

TEST_CASE("bracket and conjugation") {
  const IntMatrix4 b = b1_display();
  CHECK(bracket(b, b).is_zero());
  const IntMatrix4 c = conjugate_b1({GeneratorIndex(4)});
  CHECK(c == s(4) * b * s(4));
  CHECK(bracket(b, c) == (b * c - c * b));
  CHECK(bracket(c, b) == (b * c - c * b).scaled(-1));
}

TEST_CASE("matrix_span_rank") {
  CHECK(matrix_span_rank({}) == 0);
  CHECK(matrix_span_rank({IntMatrix4{}}) == 0);
  const IntMatrix4 b = b1_display();
  CHECK(matrix_span_rank({b, b.scaled(3), b + b}) == 1);
  CHECK(matrix_span_rank({s(1), s(2), s(3), s(4), IntMatrix4::identity()}) == 5);
  // so(3,1) is 6-dimensional, so seven algebra elements are dependent.
  std::vector<IntMatrix4> seven;
  for (const auto& c : six_candidates()) seven.push_back(c.computed);
  seven.push_back(b);
  CHECK(matrix_span_rank(seven) == 6);
}

TEST_CASE("ledger") {
  auto ledger = lie_ledger(20);
  CHECK_FALSE(ledger.empty());
  std::size_t failing = 0;
  for (const auto& line : ledger)
    if (!line.pass) ++failing;
  CHECK(failing >= 1);
}
