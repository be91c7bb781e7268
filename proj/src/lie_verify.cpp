#include "trigroup/lie_verify.hpp"

#include <array>
#include <sstream>

namespace trigroup {

namespace {

IntMatrix4 from_rows(std::array<std::array<int, 4>, 4> rows) {
  IntMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

struct Poly2 {
  int c0, c1, c2;
};

// Displayed closed form of A1^n.
constexpr std::array<std::array<Poly2, 4>, 4> kPowerForm = {{
    {{{1, 1, 0}, {0, 1, 0}, {0, -2, 0}, {0, 1, 3}}},
    {{{0, 1, 0}, {1, 1, 0}, {0, -2, 0}, {0, 1, 3}}},
    {{{0, 1, 0}, {0, 1, 0}, {1, -2, 0}, {0, -2, 6}}},
    {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, 0, 0}}},
}};

IntMatrix4 product(const std::vector<GeneratorIndex>& g) {
  IntMatrix4 m = IntMatrix4::identity();
  for (const auto& s : g) m = m * generator_matrix(s);
  return m;
}

std::vector<GeneratorIndex> gens(std::initializer_list<int> ids) {
  std::vector<GeneratorIndex> out;
  for (int i : ids) out.emplace_back(i);
  return out;
}

RationalMatrix to_rational(const IntMatrix4& m) {
  RationalMatrix r;
  for (std::size_t k = 0; k < 16; ++k) r.a[k] = Rational(m.a[k]);
  return r;
}

}  // namespace

const IntMatrix4& a1_display() {
  static const IntMatrix4 m = from_rows({{{2, 1, -2, 4}, {1, 2, -2, 4}, {1, 1, -1, 1}, {0, 0, 0, 1}}});
  return m;
}

const IntMatrix4& b1_display() {
  static const IntMatrix4 m = from_rows({{{1, 1, -2, 1}, {1, 1, -2, 1}, {1, 1, -2, -2}, {0, 0, 0, 0}}});
  return m;
}

IntMatrix4 compute_a1() {
  IntMatrix4 a1 = product(gens({1, 2, 1, 3}));
  if (a1 != a1_display()) throw std::logic_error("S1S2S1S3 differs from the displayed translation matrix");
  return a1;
}

IntMatrix4 a1_power(unsigned n) {
  const IntMatrix4 a1 = product(gens({1, 2, 1, 3}));
  IntMatrix4 m = IntMatrix4::identity();
  for (unsigned k = 0; k < n; ++k) m = m * a1;
  return m;
}

IntMatrix4 a1_power_closed_form(unsigned n) {
  IntMatrix4 m;
  const Integer nn = n;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Poly2& p = kPowerForm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      m(i, j) = p.c0 + p.c1 * nn + p.c2 * nn * nn;
    }
  return m;
}

IntMatrix4 closed_form_derivative_at_zero() {
  IntMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = kPowerForm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].c1;
  return m;
}

RationalMatrix a1_logarithm() {
  const RationalMatrix n = to_rational(product(gens({1, 2, 1, 3})) - IntMatrix4::identity());
  const RationalMatrix n2 = n * n;
  const RationalMatrix n3 = n2 * n;
  if (!(n3 * n).is_zero()) throw std::logic_error("A1 - I is not nilpotent");
  return n - n2.scaled(Rational(1, 2)) + n3.scaled(Rational(1, 3));
}

std::optional<PowerEntryCheck> PowerFormulaReport::first_mismatch() const {
  for (const auto& e : entries)
    if (!e.match()) return e;
  return std::nullopt;
}

std::size_t PowerFormulaReport::mismatches() const {
  std::size_t count = 0;
  for (const auto& e : entries)
    if (!e.match()) ++count;
  return count;
}

PowerFormulaReport a1_power_formula_check(unsigned max_n) {
  PowerFormulaReport report;
  const IntMatrix4 a1 = product(gens({1, 2, 1, 3}));
  IntMatrix4 power = IntMatrix4::identity();
  for (unsigned n = 0; n <= max_n; ++n) {
    if (n > 0) power = power * a1;
    const IntMatrix4 formula = a1_power_closed_form(n);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) report.entries.push_back({n, i + 1, j + 1, power(i, j), formula(i, j)});
  }
  return report;
}

bool in_form_algebra(const IntMatrix4& x) {
  const IntMatrix4& a = cartan_form();
  return (x.transpose() * a + a * x).is_zero();
}

IntMatrix4 bracket(const IntMatrix4& x, const IntMatrix4& y) { return x * y - y * x; }

IntMatrix4 conjugate_b1(const std::vector<GeneratorIndex>& g) {
  std::vector<GeneratorIndex> inverse(g.rbegin(), g.rend());
  return product(g) * b1_display() * product(inverse);
}

std::vector<LieCandidate> six_candidates() {
  const IntMatrix4 c1 = conjugate_b1(gens({1}));
  const IntMatrix4 c2 = conjugate_b1(gens({2}));
  const IntMatrix4 c4 = conjugate_b1(gens({4}));
  const IntMatrix4 c14 = conjugate_b1(gens({1, 4}));
  const IntMatrix4 c24 = conjugate_b1(gens({2, 4}));
  return {
      {"S1 B1 S1^-1", c1,
       from_rows({{{-1, 2, -1, -1}, {-1, 2, -1, 2}, {-1, 2, -1, -1}, {0, 0, 0, 0}}})},
      {"S2 B1 S2^-1", c2,
       from_rows({{{2, -1, -1, 2}, {2, -1, -1, -1}, {2, -1, -1, -1}, {0, 0, 0, 0}}})},
      {"[S1 B1 S1^-1, S4 B1 S4^-1]", bracket(c1, c4),
       from_rows({{{3, -6, 12, -6}, {12, 3, -6, -6}, {-6, 12, 3, -6}, {0, 0, 0, -9}}})},
      {"[S2 B1 S2^-1, S4 B1 S4^-1]", bracket(c2, c4),
       from_rows({{{3, 12, -6, -6}, {-6, 3, 12, -6}, {12, -6, 3, -6}, {0, 0, 0, -9}}})},
      {"[S1S4 B1 (S1S4)^-1, S4 B1 S4^-1]", bracket(c14, c4),
       from_rows({{{30, 12, 12, -24}, {12, -6, -6, -6}, {12, -6, -6, -6}, {36, -18, -18, -18}}})},
      {"[S2S4 B1 (S2S4)^-1, S4 B1 S4^-1]", bracket(c24, c4),
       from_rows({{{-6, 12, -6, -6}, {12, 30, 12, -24}, {-6, 12, -6, -6}, {-18, 36, -18, -18}}})},
  };
}

std::size_t matrix_span_rank(const std::vector<IntMatrix4>& matrices) {
  std::vector<std::array<Integer, 16>> rows;
  for (const auto& m : matrices) rows.push_back(m.a);
  const std::size_t nrows = rows.size();
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < 16 && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[pivot], rows[rank]);
    // Bareiss step: the division by the previous pivot is exact.
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      for (std::size_t c = col + 1; c < 16; ++c)
        rows[r][c] = (rows[rank][col] * rows[r][c] - rows[r][col] * rows[rank][c]) / prev_pivot;
      rows[r][col] = 0;
    }
    prev_pivot = rows[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t six_matrix_rank() {
  std::vector<IntMatrix4> mats;
  for (const auto& c : six_candidates()) mats.push_back(c.computed);
  return matrix_span_rank(mats);
}

std::vector<LedgerLine> lie_ledger(unsigned max_power) {
  std::vector<LedgerLine> lines;
  const IntMatrix4 a1 = product(gens({1, 2, 1, 3}));
  lines.push_back({"A1 = S1S2S1S3 matches display", a1 == a1_display(), ""});
  lines.push_back({"A1 preserves the form", (a1.transpose() * cartan_form() * a1) == cartan_form(), ""});

  const PowerFormulaReport powers = a1_power_formula_check(max_power);
  for (const auto& e : powers.entries) {
    std::ostringstream id;
    id << "A1^" << e.n << " entry (" << e.row << "," << e.col << ") closed form";
    std::ostringstream detail;
    detail << "computed " << e.computed << ", closed form " << e.closed_form;
    lines.push_back({id.str(), e.match(), detail.str()});
  }

  lines.push_back({"B1 = d/dn A1^n at n=0 of closed form", closed_form_derivative_at_zero() == b1_display(), ""});
  RationalMatrix log_a1 = a1_logarithm();
  lines.push_back({"B1 = log(A1)", log_a1 == to_rational(b1_display()), ""});
  lines.push_back({"B1 in form algebra", in_form_algebra(b1_display()), ""});

  std::vector<IntMatrix4> mats;
  for (const auto& c : six_candidates()) {
    lines.push_back({c.name + " matches display", c.matches_display(), ""});
    lines.push_back({c.name + " in form algebra", c.in_algebra(), ""});
    mats.push_back(c.computed);
  }
  const std::size_t rank = matrix_span_rank(mats);
  lines.push_back({"six matrices have rank 6", rank == 6, "rank " + std::to_string(rank)});
  return lines;
}

}  // namespace trigroup
