#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigroup/core.hpp"

namespace trigroup {

using RationalMatrix = Matrix4<Rational>;

/// The translation matrix exactly as displayed in the literature.
const IntMatrix4& a1_display();
/// The derivative matrix B1 exactly as displayed.
const IntMatrix4& b1_display();

/// S1 S2 S1 S3. Throws std::logic_error if it differs from the display.
IntMatrix4 compute_a1();

/// A1^n by repeated exact multiplication.
IntMatrix4 a1_power(unsigned n);

/// The displayed closed form for A1^n, each entry c0 + c1 n + c2 n^2.
IntMatrix4 a1_power_closed_form(unsigned n);

/// Entrywise d/dn at n = 0 of the displayed closed form (the c1 coefficients).
IntMatrix4 closed_form_derivative_at_zero();

/// log(A1) = N - N^2/2 + N^3/3 with N = A1 - I nilpotent; equals d/dn A1^n at 0.
RationalMatrix a1_logarithm();

struct PowerEntryCheck {
  unsigned n;
  int row;  // 1-based
  int col;  // 1-based
  Integer computed;
  Integer closed_form;
  bool match() const { return computed == closed_form; }
};

struct PowerFormulaReport {
  std::vector<PowerEntryCheck> entries;
  std::optional<PowerEntryCheck> first_mismatch() const;
  std::size_t mismatches() const;
};

/// Compares A1^n against the displayed closed form for n = 0..max_n, entry by entry.
PowerFormulaReport a1_power_formula_check(unsigned max_n);

/// X^T A + A X = 0 for the form matrix A.
bool in_form_algebra(const IntMatrix4& x);

/// [X, Y] = XY - YX.
IntMatrix4 bracket(const IntMatrix4& x, const IntMatrix4& y);

/// g B1 g^-1 for a product of generators g (each its own inverse).
IntMatrix4 conjugate_b1(const std::vector<GeneratorIndex>& g);

struct LieCandidate {
  std::string name;
  IntMatrix4 computed;
  IntMatrix4 displayed;
  bool matches_display() const { return computed == displayed; }
  bool in_algebra() const { return in_form_algebra(computed); }
};

/// The two conjugates and four brackets, recomputed from S_i and B1.
std::vector<LieCandidate> six_candidates();

/// Exact rank over the rationals of 4x4 matrices flattened to 16-vectors,
/// by fraction-free elimination.
std::size_t matrix_span_rank(const std::vector<IntMatrix4>& matrices);

std::size_t six_matrix_rank();

struct LedgerLine {
  std::string identity;
  bool pass;
  std::string detail;
};

/// Pass/fail line for every displayed identity around the closure argument.
std::vector<LedgerLine> lie_ledger(unsigned max_power = 20);

}  // namespace trigroup
