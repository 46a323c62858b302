#include "minorforge/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace minorforge {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMin64 = std::numeric_limits<long long>::min();
constexpr __int128 kMax64 = std::numeric_limits<long long>::max();

}  // namespace

Rational Rational::make128(__int128 n, __int128 d) {
  if (d == 0) throw std::invalid_argument("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n < kMin64 || n > kMax64 || d > kMax64)
    throw std::overflow_error("rational: value out of 64-bit range");
  Rational r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

Rational::Rational(long long num, long long den) { *this = make128(num, den); }

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("rational: no digits");

  auto digits = [&](__int128& out) {
    size_t start = pos;
    out = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out = out * 10 + (text[pos] - '0');
      if (out > (__int128)kMax64 * kMax64)
        throw std::overflow_error("rational: too many digits");
      ++pos;
    }
    return pos > start;
  };

  __int128 whole = 0;
  if (!digits(whole)) throw std::invalid_argument("rational: expected digits");

  __int128 num = whole, den = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    size_t frac_start = pos;
    __int128 frac = 0;
    if (!digits(frac)) throw std::invalid_argument("rational: expected fraction digits");
    for (size_t i = frac_start; i < pos; ++i) {
      den *= 10;
      if (den > kMax64) throw std::overflow_error("rational: fraction too long");
    }
    num = whole * den + frac;
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!digits(den)) throw std::invalid_argument("rational: expected denominator");
  }
  if (pos != text.size()) throw std::invalid_argument("rational: trailing characters");
  if (negative) num = -num;
  return make128(num, den);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite double");
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  while (mant != 0 && (mant & 1) == 0) {
    mant >>= 1;
    ++exp;
  }
  __int128 num = mant, den = 1;
  for (; exp > 0; --exp) {
    num *= 2;
    if (num > kMax64 || num < kMin64) throw std::overflow_error("rational: double too large");
  }
  for (; exp < 0; ++exp) {
    den *= 2;
    if (den > kMax64) throw std::overflow_error("rational: double needs too much precision");
  }
  return make128(num, den);
}

Rational Rational::operator-() const { return make128(-(__int128)num_, den_); }

Rational Rational::operator+(const Rational& o) const {
  return make128((__int128)num_ * o.den_ + (__int128)o.num_ * den_, (__int128)den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make128((__int128)num_ * o.den_ - (__int128)o.num_ * den_, (__int128)den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::invalid_argument("rational: division by zero");
  return make128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = (__int128)num_ * o.den_;
  __int128 rhs = (__int128)o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

long long Rational::floor_ll() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

long long Rational::ceil_ll() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace minorforge
