#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace surreal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational i / 2^j, always kept in lowest terms (j == 0 or i odd).
///
/// Dyadics never take part in surreal arithmetic. They name the nodes of the
/// genealogy tree, convert calculator literals, and serve as the exact oracle
/// in tests.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value);  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt numerator, std::uint32_t exponent);

  /// Parses "i" or "i/d" with an optional leading '-'. Throws
  /// std::invalid_argument when d is not a positive power of two.
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }
  bool isInteger() const { return exp_ == 0; }
  int sign() const { return num_.sign(); }

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  /// (a + b) / 2
  static Dyadic midpoint(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "0", "-3", "3/4", "-5/8".
  std::string toString() const;

 private:
  void normalize();

  BigInt num_ = 0;
  std::uint32_t exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

}  // namespace surreal
