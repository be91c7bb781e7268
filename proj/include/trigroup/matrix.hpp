#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <ostream>

namespace trigroup {

/// Dense row-major 4x4 matrix over an exact ring.
template <typename T>
struct Matrix4 {
  std::array<T, 16> a{};

  static Matrix4 identity() {
    Matrix4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix4 from_rows(const std::array<std::array<T, 4>, 4>& rows) {
    Matrix4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    return m;
  }

  T& operator()(int r, int c) { return a[static_cast<std::size_t>(4 * r + c)]; }
  const T& operator()(int r, int c) const { return a[static_cast<std::size_t>(4 * r + c)]; }

  Matrix4 operator*(const Matrix4& rhs) const {
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        T s(0);
        for (int k = 0; k < 4; ++k) s += (*this)(i, k) * rhs(k, j);
        out(i, j) = s;
      }
    return out;
  }

  Matrix4 operator+(const Matrix4& rhs) const {
    Matrix4 out;
    for (std::size_t k = 0; k < 16; ++k) out.a[k] = a[k] + rhs.a[k];
    return out;
  }

  Matrix4 operator-(const Matrix4& rhs) const {
    Matrix4 out;
    for (std::size_t k = 0; k < 16; ++k) out.a[k] = a[k] - rhs.a[k];
    return out;
  }

  Matrix4 scaled(const T& s) const {
    Matrix4 out;
    for (std::size_t k = 0; k < 16; ++k) out.a[k] = a[k] * s;
    return out;
  }

  std::array<T, 4> apply(const std::array<T, 4>& v) const {
    std::array<T, 4> out{};
    for (int i = 0; i < 4; ++i) {
      T s(0);
      for (int k = 0; k < 4; ++k) s += (*this)(i, k) * v[static_cast<std::size_t>(k)];
      out[static_cast<std::size_t>(i)] = s;
    }
    return out;
  }

  Matrix4 transpose() const {
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

  /// Cofactor expansion; exact for any commutative ring.
  T determinant() const {
    const auto& m = *this;
    auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
      return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
             m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
             m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * minor3(1, 2, 3, 1, 2, 3) - m(0, 1) * minor3(1, 2, 3, 0, 2, 3) +
           m(0, 2) * minor3(1, 2, 3, 0, 1, 3) - m(0, 3) * minor3(1, 2, 3, 0, 1, 2);
  }

  bool operator==(const Matrix4&) const = default;
};

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix4<T>& m) {
  os << '[';
  for (int i = 0; i < 4; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace trigroup
