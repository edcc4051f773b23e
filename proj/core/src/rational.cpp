#include "thetadiv/rational.hpp"

#include "thetadiv/errors.hpp"

namespace thetadiv {

namespace {

using Int = Rational::Int;

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: add overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: mul overflow");
  return r;
}

Int gcd128(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::string int128_str(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  char buf[48];
  int i = 48;
  while (u > 0) {
    buf[--i] = char('0' + (int)(u % 10));
    u /= 10;
  }
  std::string s(buf + i, buf + 48);
  return neg ? "-" + s : s;
}

void Rational::normalize() {
  if (den_ == 0) throw Error("rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(std::string_view s) {
  auto parse_int = [](std::string_view t) -> Int {
    if (t.empty()) throw ParseError("rational: empty integer");
    bool neg = false;
    size_t i = 0;
    if (t[0] == '-' || t[0] == '+') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) throw ParseError("rational: sign without digits");
    Int v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9')
        throw ParseError("rational: bad digit in '" + std::string(t) + "'");
      v = checked_mul(v, 10);
      v = checked_add(v, t[i] - '0');
    }
    return neg ? -v : v;
  };
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s), 1);
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

long long Rational::to_int() const {
  if (den_ != 1) throw Error("rational: not an integer: " + str());
  if (num_ > (Int)INT64_MAX || num_ < (Int)INT64_MIN)
    throw std::overflow_error("rational: integer out of long long range");
  return (long long)num_;
}

std::string Rational::str() const {
  if (den_ == 1) return int128_str(num_);
  return int128_str(num_) + "/" + int128_str(den_);
}

Rational& Rational::operator+=(const Rational& o) {
  // a/b + c/d = (a d + c b) / (b d), reduced afterwards
  Int n = checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_));
  Int d = checked_mul(den_, o.den_);
  num_ = n;
  den_ = d;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  // cross-reduce first to keep intermediates small
  Int g1 = gcd128(num_, o.den_);
  Int g2 = gcd128(o.num_, den_);
  num_ = checked_mul(num_ / g1, o.num_ / g2);
  den_ = checked_mul(den_ / g2, o.den_ / g1);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error("rational: division by zero");
  return *this *= Rational(o.den_, o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

Rational factorial_q(int n) {
  if (n < 0) throw Error("factorial of negative integer");
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

Rational pow2_q(int e) {
  if (e >= 0) {
    if (e > 120) throw std::overflow_error("pow2: exponent too large");
    return Rational((Rational::Int)1 << e, 1);
  }
  if (e < -120) throw std::overflow_error("pow2: exponent too small");
  return Rational(1, (Rational::Int)1 << (-e));
}

Rational binomial_q(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

}  // namespace thetadiv
