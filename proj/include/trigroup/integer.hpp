#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace trigroup {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Malformed or out-of-domain input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size/element cap was exceeded (CLI exit code 3).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fixed-width intermediate would have overflowed.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Floor square root of a nonnegative integer.
Integer isqrt(const Integer& n);
std::int64_t isqrt(std::int64_t n);

/// Exact square root, or nothing if `n` is not a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);
std::optional<std::int64_t> exact_sqrt(std::int64_t n);

Integer gcd(const Integer& a, const Integer& b);

/// Parses a base-10 integer with optional sign; throws InvalidInput.
Integer parse_integer(const std::string& text);

/// Parses "p", "p/q" or a decimal such as "0.375"; throws InvalidInput.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

/// Checked 64-bit helpers; throw ArithmeticOverflow instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 add overflow");
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 sub overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 mul overflow");
  return r;
}

/// Narrowing conversion that throws if the value does not fit.
std::int64_t to_int64(const Integer& n);

}  // namespace trigroup
