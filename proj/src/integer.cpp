#include "trigroup/integer.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include <boost/multiprecision/integer.hpp>

namespace trigroup {

Integer isqrt(const Integer& n) {
  if (n < 0) throw InvalidInput("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw InvalidInput("isqrt of negative value");
  using Wide = __int128;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  // long double rounding can be off by one near 2^63.
  while (r > 0 && Wide(r) * r > n) --r;
  while (Wide(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer rem;
  Integer r = boost::multiprecision::sqrt(n, rem);
  if (rem != 0) return std::nullopt;
  return r;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  std::int64_t r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw InvalidInput("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw InvalidInput("not an integer: '" + text + "'");
  }
  Integer value(text.substr(i));
  return text[0] == '-' ? Integer(-value) : value;
}

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator: '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("not a rational: '" + text + "'");
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer w = parse_integer(whole);
    Integer f(frac);
    Rational magnitude = Rational(boost::multiprecision::abs(w)) + Rational(f, scale);
    return negative ? Rational(-magnitude) : magnitude;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw ArithmeticOverflow("value does not fit in int64: " + n.str());
  return static_cast<std::int64_t>(n);
}

}  // namespace trigroup
