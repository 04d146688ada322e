#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace graphmetric {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Arithmetic is carried out in 128-bit intermediates; a result that does
/// not fit back into 64-bit numerator/denominator throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "12", "-3", "2.30", ".5" or "5/2". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t ceil() const;

  /// Shortest exact text: "3", "2.3" for finite decimals, otherwise "1/3".
  /// Always accepted by parse().
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace graphmetric

template <>
struct std::hash<graphmetric::Rational> {
  std::size_t operator()(const graphmetric::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.numerator()) * 31u ^
           std::hash<std::int64_t>{}(r.denominator());
  }
};
