#include "trigroup/core.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>

namespace trigroup {

namespace {

// Rows of the integer change of variables used by substitution_map.
constexpr std::array<std::array<int, 4>, 4> kSubstitution = {{
    {1, 0, 0, 0},
    {0, 1, 0, 0},
    {1, 1, -1, 0},
    {1, 1, 0, -1},
}};

constexpr int det3(int a, int b, int c, int d, int e, int f, int g, int h, int i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

constexpr int substitution_det() {
  const auto& m = kSubstitution;
  int det = 0;
  for (int col = 0; col < 4; ++col) {
    int c[3]{};
    int k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != col) c[k++] = j;
    int minor = det3(m[1][c[0]], m[1][c[1]], m[1][c[2]], m[2][c[0]], m[2][c[1]], m[2][c[2]],
                     m[3][c[0]], m[3][c[1]], m[3][c[2]]);
    det += (col % 2 == 0 ? 1 : -1) * m[0][col] * minor;
  }
  return det;
}

// A unit determinant keeps the substitution a bijection on integer points.
static_assert(substitution_det() == 1);

IntMatrix4 make_generator(int position) {
  IntMatrix4 m = IntMatrix4::identity();
  for (int j = 0; j < 4; ++j) m(position, j) = 1;
  m(position, position) = -1;
  return m;
}

}  // namespace

GeneratorIndex::GeneratorIndex(int i) : value_(i) {
  if (i < 1 || i > 4) throw InvalidInput("generator index must be in 1..4, got " + std::to_string(i));
}

Quadruple::Quadruple(Vec4 entries) : entries_(std::move(entries)) {
  if (!is_triangle_quadruple(entries_)) throw InvalidInput("not a triangle quadruple: " + str());
}

Quadruple::Quadruple(Integer a, Integer b, Integer c, Integer d)
    : Quadruple(Vec4{std::move(a), std::move(b), std::move(c), std::move(d)}) {}

Integer Quadruple::sum() const { return entries_[0] + entries_[1] + entries_[2] + entries_[3]; }

Integer Quadruple::max() const { return *std::max_element(entries_.begin(), entries_.end()); }

Integer Quadruple::height_squared() const {
  Integer s = 0;
  for (const auto& x : entries_) s += x * x;
  return s;
}

Quadruple Quadruple::canonical() const {
  Vec4 sorted = entries_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return Quadruple(std::move(sorted), Trusted{});
}

bool Quadruple::is_canonical() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

std::string Quadruple::str() const {
  std::ostringstream os;
  os << '(' << entries_[0] << ',' << entries_[1] << ',' << entries_[2] << ',' << entries_[3] << ')';
  return os.str();
}

Integer q_form(const Vec4& x) {
  Integer squares = 0;
  Integer total = 0;
  for (const auto& v : x) {
    squares += v * v;
    total += v;
  }
  return 3 * squares - total * total;
}

bool is_triangle_quadruple(const Vec4& x) {
  bool nonzero = false;
  for (const auto& v : x) {
    if (v < 0) return false;
    if (v != 0) nonzero = true;
  }
  return nonzero && q_form(x) == 0;
}

Quadruple apply_generator(const Quadruple& q, GeneratorIndex i) {
  Vec4 out = q.entries();
  const std::size_t p = i.position();
  out[p] = q.sum() - 2 * q[p];
  // d(a+b+c-d) = (a-b)^2+(b-c)^2+(c-a)^2 >= 0 keeps the image nonnegative.
  assert(out[p] >= 0);
  return Quadruple(std::move(out), Quadruple::Trusted{});
}

const IntMatrix4& generator_matrix(GeneratorIndex i) {
  static const std::array<IntMatrix4, 4> kGenerators = {make_generator(0), make_generator(1),
                                                        make_generator(2), make_generator(3)};
  return kGenerators[i.position()];
}

const IntMatrix4& cartan_form() {
  static const IntMatrix4 kForm = [] {
    IntMatrix4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = (i == j) ? 2 : -1;
    return m;
  }();
  return kForm;
}

bool RelationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

RelationReport verify_coxeter_relations() {
  RelationReport report;
  const IntMatrix4 id = IntMatrix4::identity();
  for (int i = 1; i <= 4; ++i) {
    const auto& s = generator_matrix(GeneratorIndex(i));
    report.checks.push_back({"S" + std::to_string(i) + "^2 = I", s * s == id});
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      IntMatrix4 p = generator_matrix(GeneratorIndex(i)) * generator_matrix(GeneratorIndex(j));
      report.checks.push_back(
          {"(S" + std::to_string(i) + "S" + std::to_string(j) + ")^3 = I", p * p * p == id});
    }
  return report;
}

Signature cartan_signature() {
  const IntMatrix4& form = cartan_form();
  const std::array<Vec4, 4> basis = {Vec4{1, 1, 1, 1}, Vec4{1, -1, 0, 0}, Vec4{0, 1, -1, 0},
                                     Vec4{0, 0, 1, -1}};
  Signature sig;
  IntMatrix4 columns;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Vec4& v = basis[k];
    for (int r = 0; r < 4; ++r) columns(r, static_cast<int>(k)) = v[static_cast<std::size_t>(r)];
    Vec4 image = form.apply(v);
    // Find the eigenvalue from a nonzero coordinate and confirm it on all four.
    std::size_t pivot = 0;
    while (v[pivot] == 0) ++pivot;
    if (image[pivot] % v[pivot] != 0) throw std::logic_error("basis vector is not an eigenvector");
    Integer eigenvalue = image[pivot] / v[pivot];
    for (std::size_t r = 0; r < 4; ++r)
      if (image[r] != eigenvalue * v[r]) throw std::logic_error("basis vector is not an eigenvector");
    if (eigenvalue > 0)
      ++sig.positive;
    else if (eigenvalue < 0)
      ++sig.negative;
    else
      ++sig.zero;
  }
  if (columns.determinant() == 0) throw std::logic_error("eigenvectors are dependent");
  return sig;
}

std::array<Integer, 4> substitution_map(const Quadruple& q) {
  if (!q.is_canonical()) throw InvalidInput("substitution_map needs a nonincreasing quadruple: " + q.str());
  std::array<Integer, 4> out;
  for (std::size_t r = 0; r < 4; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < 4; ++c) s += kSubstitution[r][c] * q[c];
    out[r] = s;
  }
  return out;
}

int distinct_permutations(const Vec4& x) {
  std::map<Integer, int> multiplicity;
  for (const auto& v : x) ++multiplicity[v];
  int denom = 1;
  for (const auto& [value, count] : multiplicity)
    for (int k = 2; k <= count; ++k) denom *= k;
  return 24 / denom;
}

}  // namespace trigroup
