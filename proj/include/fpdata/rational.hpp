#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fpdata {

// Reduced fraction with positive denominator. Values stay tiny everywhere in
// this project (coordinates of Platonic solids, fractions of a revolution), so
// long long with __int128 cross-multiplication is ample.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
  }

  bool is_zero() const { return num == 0; }
  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

  Rational operator-() const { return Rational(-num, den); }
  Rational operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
  }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(num * o.den, den * o.num);
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::strong_ordering operator<=>(const Rational& o) const {
    __int128 l = static_cast<__int128>(num) * o.den;
    __int128 r = static_cast<__int128>(o.num) * den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Representative in [0, 1); used for positions on a circle.
  Rational mod1() const {
    long long n = num % den;
    if (n < 0) n += den;
    return Rational(n, den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Rotation angle as a fraction of a full revolution, folded into [0, 1/2]:
// a rotation and its inverse carry the same turn. The reduced denominator of a
// non-zero turn equals the order of the rotation.
struct Turn {
  long long num = 0;
  long long den = 1;

  Turn() = default;

  static Turn of(long long p, long long q) {
    if (q <= 0) throw std::invalid_argument("Turn: non-positive denominator");
    p %= q;
    if (p < 0) p += q;
    if (2 * p > q) p = q - p;  // fold to [0, 1/2]
    long long g = std::gcd(p, q);
    if (g == 0) g = 1;
    Turn t;
    t.num = p / g;
    t.den = p == 0 ? 1 : q / g;
    return t;
  }

  bool is_zero() const { return num == 0; }
  bool is_half() const { return num * 2 == den; }
  long long rotation_order() const { return den; }

  bool operator==(const Turn&) const = default;
  auto operator<=>(const Turn& o) const {
    return Rational(num, den) <=> Rational(o.num, o.den);
  }

  std::string str() const {
    if (num == 0) return "0";
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace fpdata
