#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fpdata/rational.hpp"

namespace fpdata {

// Element of Q(sqrt 5): a + b*sqrt(5). This is the smallest field containing
// every matrix entry of the icosahedral rotation group; the tetrahedral and
// octahedral groups live in the rational part (b = 0).
struct QSqrt5 {
  Rational a;
  Rational b;

  QSqrt5() = default;
  QSqrt5(Rational ra) : a(ra) {}
  QSqrt5(Rational ra, Rational rb) : a(ra), b(rb) {}
  QSqrt5(long long n) : a(n) {}

  static QSqrt5 sqrt5() { return QSqrt5(Rational(0), Rational(1)); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  QSqrt5 operator-() const { return QSqrt5(-a, -b); }
  QSqrt5 operator+(const QSqrt5& o) const { return QSqrt5(a + o.a, b + o.b); }
  QSqrt5 operator-(const QSqrt5& o) const { return QSqrt5(a - o.a, b - o.b); }
  QSqrt5 operator*(const QSqrt5& o) const {
    return QSqrt5(a * o.a + Rational(5) * b * o.b, a * o.b + b * o.a);
  }
  QSqrt5 inverse() const {
    Rational norm = a * a - Rational(5) * b * b;  // nonzero for nonzero values
    if (norm.is_zero()) throw std::domain_error("QSqrt5: inverse of zero");
    return QSqrt5(a / norm, -b / norm);
  }
  QSqrt5 operator/(const QSqrt5& o) const { return *this * o.inverse(); }

  bool operator==(const QSqrt5& o) const { return a == o.a && b == o.b; }

  // Exact sign of a + b*sqrt(5).
  int sign() const {
    int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against 5 b^2.
    Rational d = a * a - Rational(5) * b * b;
    int sd = d.sign();
    if (sd == 0) throw std::logic_error("QSqrt5: sqrt5 is irrational");
    return sd > 0 ? sa : sb;
  }

  bool operator<(const QSqrt5& o) const { return (*this - o).sign() < 0; }

  std::string str() const {
    if (b.is_zero()) return a.str();
    return a.str() + "+" + b.str() + "*sqrt5";
  }
};

using Vec3 = std::array<QSqrt5, 3>;

inline QSqrt5 dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return Vec3{u[1] * v[2] - u[2] * v[1],
              u[2] * v[0] - u[0] * v[2],
              u[0] * v[1] - u[1] * v[0]};
}

inline bool is_zero(const Vec3& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

inline bool lex_less(const Vec3& u, const Vec3& v) {
  for (int i = 0; i < 3; ++i) {
    if (u[i] == v[i]) continue;
    return u[i] < v[i];
  }
  return false;
}

struct Mat3 {
  std::array<std::array<QSqrt5, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = QSqrt5(1);
    return r;
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        QSqrt5 s;
        for (int k = 0; k < 3; ++k) s = s + m[i][k] * o.m[k][j];
        r.m[i][j] = s;
      }
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    Vec3 r;
    for (int i = 0; i < 3; ++i)
      r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  QSqrt5 trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  bool operator==(const Mat3& o) const { return m == o.m; }
  bool operator<(const Mat3& o) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (m[i][j] == o.m[i][j]) continue;
        return m[i][j] < o.m[i][j];
      }
    return false;
  }
};

// Canonical representative of the ray through v: scaled by a positive rational
// so that the first nonzero coordinate is +1 or -1. Two rays per line.
Vec3 canonical_ray(const Vec3& v);

// Canonical representative of the (undirected) line through v: of the two ray
// representatives, the one whose first nonzero coordinate is +1.
Vec3 canonical_line(const Vec3& v);

// Fixed line of a rotation matrix != identity (the kernel of R - I).
Vec3 rotation_axis(const Mat3& r);

enum class Solid { Tet, Oct, Icos };

// All rotations of the given Platonic solid, identity first, the rest sorted
// by exact lexicographic matrix comparison. Tet: 12, Oct: 24, Icos: 60.
const std::vector<Mat3>& platonic_rotations(Solid s);

}  // namespace fpdata
