#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace toughcycle {

__extension__ typedef __int128 wide_int;

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// "p/q" or an integer.
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
    const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Toughness value: a finite positive rational, or +infinity for complete
/// graphs. Finite values order below Infinite.
class ToughnessValue {
 public:
  static ToughnessValue infinite() { return ToughnessValue(); }
  static ToughnessValue finite(Rational value) { return ToughnessValue(value); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful for finite values.
  const Rational& value() const noexcept { return value_; }
  std::string to_string() const;

  /// Whether this value is at least t (Infinite is at least everything).
  bool at_least(const Rational& t) const { return infinite_ || value_ >= t; }

  friend bool operator==(const ToughnessValue&, const ToughnessValue&) = default;
  friend std::strong_ordering operator<=>(const ToughnessValue& a,
                                          const ToughnessValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  ToughnessValue() : infinite_(true) {}
  explicit ToughnessValue(Rational value) : value_(value) {}

  bool infinite_ = false;
  Rational value_;
};

}  // namespace toughcycle
