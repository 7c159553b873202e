#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wvd {

using BigInt = boost::multiprecision::cpp_int;

/// Exact value num / 2^exp with minimal exponent (num odd whenever exp > 0,
/// zero is stored as 0/2^0). This is the value domain of every core quantity
/// computed by the library: Lebesgue constants, van der Corput points,
/// kernel integrals. Keeping the denominator a power of two means arithmetic
/// is shift-and-add only, with no gcd in the hot loops.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long v) : num_(v) {}
  Dyadic(BigInt numerator, unsigned exponent);

  /// Exact conversion; every finite double is a dyadic rational.
  static Dyadic from_double(double v);
  /// Accepts the strings produced by to_fraction(): "p" or "p/2^e".
  static Dyadic parse(std::string_view s);

  const BigInt& num() const { return num_; }
  unsigned exp() const { return exp_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return num_.sign(); }

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  /// Value times 2^s for signed s (division by powers of two stays exact).
  Dyadic mul_pow2(int s) const;
  /// Value times an integer.
  Dyadic times(const BigInt& f) const { return Dyadic(num_ * f, exp_); }

  std::strong_ordering operator<=>(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const {
    return exp_ == o.exp_ && num_ == o.num_;
  }

  double to_double() const;

  /// Lossless "p" (integer) or "p/2^e".
  std::string to_fraction() const;

 private:
  BigInt num_ = 0;
  unsigned exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

/// Exact p/q, gcd-normalized with q >= 1. Only needed where denominators
/// leave the dyadic world: star discrepancies d_n/n, the block-maximum
/// closed form with its ninths, and running averages.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : v_(v) {}
  Rational(BigInt numerator, BigInt denominator);
  Rational(const Dyadic& d);  // lossless embedding

  static Rational parse(std::string_view s);  // "p", "p/q" or "p/2^e"

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws on zero divisor
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const { return v_ == o.v_; }

  /// True when the denominator is a power of two (includes integers).
  bool is_dyadic() const;
  /// Exact conversion; throws std::domain_error when !is_dyadic().
  Dyadic to_dyadic() const;

  double to_double() const;
  std::string to_fraction() const;  // "p" or "p/q"

 private:
  boost::multiprecision::cpp_rational v_;
};

Rational abs(const Rational& r);
Dyadic abs(const Dyadic& d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Correctly rounded fixed-point rendering with `digits` >= 1 fractional
/// digits, ties broken to even so golden-file output is deterministic.
std::string render_decimal(const Rational& r, int digits);
std::string render_decimal(const Dyadic& d, int digits);

}  // namespace wvd
