#include "toughcycle/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "toughcycle/graph.hpp"

namespace toughcycle {

namespace {

std::int64_t parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw PreconditionError("not an integer: \"" + std::string(text) + "\"");
  return value;
}

std::int64_t narrow(wide_int value) {
  if (value > INT64_MAX || value < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(value);
}

Rational make(wide_int num, wide_int den) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide_int a = num < 0 ? -num : num;
  wide_int b = den;
  while (b != 0) {
    const wide_int r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<wide_int>(a.num_) * b.den_ + static_cast<wide_int>(b.num_) * a.den_,
              static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<wide_int>(a.num_) * b.den_ - static_cast<wide_int>(b.num_) * a.den_,
              static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<wide_int>(a.num_) * b.num_, static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return make(static_cast<wide_int>(a.num_) * b.den_, static_cast<wide_int>(a.den_) * b.num_);
}

std::string ToughnessValue::to_string() const {
  return infinite_ ? std::string("inf") : value_.to_string();
}

}  // namespace toughcycle
