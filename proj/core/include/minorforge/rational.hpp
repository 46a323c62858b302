#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace minorforge {

// Exact rational arithmetic on 64-bit numerator/denominator, always stored
// reduced with a positive denominator. Intermediates are computed in 128-bit;
// a result that does not fit back into 64 bits throws std::overflow_error.
//
// Every threshold comparison against a decimal constant (6.929, 0.5773, ...)
// goes through this type so boundary cases are decided exactly. Floating
// point is reserved for quantities that are irrational by nature.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  // Accepts "42", "-7", "3/2", "6.291". No whitespace, no exponents.
  static Rational parse(std::string_view text);
  // Exact value of a finite double (throws if the binary expansion does not
  // fit; fine for the moderate magnitudes used here).
  static Rational from_double(double x);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws on division by zero
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  long long floor_ll() const;
  long long ceil_ll() const;
  double to_double() const;
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  // "p/q", or just "p" when the value is an integer.
  std::string str() const;

 private:
  static Rational make128(__int128 n, __int128 d);
  long long num_;
  long long den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace minorforge
