#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thetadiv {

std::string int128_str(__int128 v);

/// Exact rational on 128-bit integers, stored reduced with positive
/// denominator. Arithmetic throws std::overflow_error if a value leaves the
/// representable range; the desk-scale computations here stay far below it.
class Rational {
 public:
  using Int = __int128;

  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

  /// Accepts "p", "p/q", optional leading '-'.
  static Rational parse(std::string_view s);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  /// Throws Error unless the value is an integer fitting in long long.
  long long to_int() const;

  std::string str() const;

  Rational operator-() const { return Rational(-num_, den_, NoNormalize{}); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  struct NoNormalize {};
  Rational(Int n, Int d, NoNormalize) : num_(n), den_(d) {}
  void normalize();

  Int num_;
  Int den_;
};

/// n! as an exact rational (n <= 33 before overflow; plenty here).
Rational factorial_q(int n);

/// 2^e for any integer e, negative exponents giving exact fractions.
Rational pow2_q(int e);

/// Binomial coefficient as an exact rational.
Rational binomial_q(int n, int k);

}  // namespace thetadiv
