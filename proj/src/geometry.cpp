#include "fpdata/geometry.hpp"

#include <algorithm>
#include <map>

namespace fpdata {

Vec3 canonical_ray(const Vec3& v) {
  if (is_zero(v)) throw std::invalid_argument("canonical_ray: zero vector");
  for (int i = 0; i < 3; ++i) {
    if (v[i].is_zero()) continue;
    QSqrt5 s = v[i];
    if (s.sign() < 0) s = -s;
    QSqrt5 inv = s.inverse();
    return Vec3{v[0] * inv, v[1] * inv, v[2] * inv};
  }
  throw std::logic_error("canonical_ray: unreachable");
}

Vec3 canonical_line(const Vec3& v) {
  Vec3 r = canonical_ray(v);
  for (int i = 0; i < 3; ++i) {
    if (r[i].is_zero()) continue;
    if (r[i].sign() < 0) return Vec3{-r[0], -r[1], -r[2]};
    return r;
  }
  throw std::logic_error("canonical_line: unreachable");
}

Vec3 rotation_axis(const Mat3& r) {
  Mat3 d = r;
  for (int i = 0; i < 3; ++i) d.m[i][i] = d.m[i][i] - QSqrt5(1);
  // R - I has rank 2 for a nontrivial rotation; the cross product of any two
  // independent rows spans the kernel.
  std::array<Vec3, 3> rows{Vec3{d.m[0][0], d.m[0][1], d.m[0][2]},
                           Vec3{d.m[1][0], d.m[1][1], d.m[1][2]},
                           Vec3{d.m[2][0], d.m[2][1], d.m[2][2]}};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Vec3 c = cross(rows[i], rows[j]);
      if (!is_zero(c)) return c;
    }
  throw std::invalid_argument("rotation_axis: matrix is the identity");
}

namespace {

std::vector<Mat3> close_under_multiplication(std::vector<Mat3> gens) {
  std::vector<Mat3> elems{Mat3::identity()};
  auto contains = [&](const Mat3& x) {
    return std::find(elems.begin(), elems.end(), x) != elems.end();
  };
  for (const Mat3& g : gens)
    if (!contains(g)) elems.push_back(g);
  for (size_t i = 0; i < elems.size(); ++i)
    for (const Mat3& g : gens) {
      Mat3 x = elems[i] * g;
      if (!contains(x)) elems.push_back(x);
    }
  return elems;
}

Mat3 signed_diag(int a, int b, int c) {
  Mat3 r;
  r.m[0][0] = QSqrt5(a);
  r.m[1][1] = QSqrt5(b);
  r.m[2][2] = QSqrt5(c);
  return r;
}

Mat3 cycle_xyz() {
  // (x, y, z) -> (y, z, x)
  Mat3 r;
  r.m[0][1] = QSqrt5(1);
  r.m[1][2] = QSqrt5(1);
  r.m[2][0] = QSqrt5(1);
  return r;
}

Mat3 quarter_turn_z() {
  // (x, y, z) -> (-y, x, z)
  Mat3 r;
  r.m[0][1] = QSqrt5(-1);
  r.m[1][0] = QSqrt5(1);
  r.m[2][2] = QSqrt5(1);
  return r;
}

// Rotation by 2*pi/5 about the icosahedron vertex (0, 1, phi),
// phi = (1 + sqrt5)/2. Entries derived from the Rodrigues formula; they close
// over Q(sqrt 5) because sin(72deg) / |(0,1,phi)| = 1/2.
Mat3 icosahedral_five_fold() {
  const Rational q1_4(1, 4), q1_2(1, 2);
  const QSqrt5 c(Rational(-1, 4), q1_4);        // (sqrt5 - 1)/4 = cos 72deg
  const QSqrt5 phi_half(q1_4, q1_4);            // (1 + sqrt5)/4
  Mat3 r;
  r.m[0] = {c, -phi_half, QSqrt5(q1_2)};
  r.m[1] = {phi_half, QSqrt5(q1_2), c};
  r.m[2] = {QSqrt5(Rational(-1, 2)), c, phi_half};
  return r;
}

std::vector<Mat3> build_solid(Solid s) {
  std::vector<Mat3> gens;
  switch (s) {
    case Solid::Tet:
      gens = {cycle_xyz(), signed_diag(1, -1, -1)};
      break;
    case Solid::Oct:
      gens = {cycle_xyz(), quarter_turn_z()};
      break;
    case Solid::Icos:
      gens = {cycle_xyz(), signed_diag(-1, -1, 1), icosahedral_five_fold()};
      break;
  }
  std::vector<Mat3> elems = close_under_multiplication(std::move(gens));
  std::sort(elems.begin() + 1, elems.end());  // identity stays first
  size_t expected = s == Solid::Tet ? 12 : (s == Solid::Oct ? 24 : 60);
  if (elems.size() != expected)
    throw std::logic_error("platonic_rotations: closure has wrong order");
  return elems;
}

}  // namespace

const std::vector<Mat3>& platonic_rotations(Solid s) {
  static const std::vector<Mat3> tet = build_solid(Solid::Tet);
  static const std::vector<Mat3> oct = build_solid(Solid::Oct);
  static const std::vector<Mat3> icos = build_solid(Solid::Icos);
  switch (s) {
    case Solid::Tet: return tet;
    case Solid::Oct: return oct;
    default: return icos;
  }
}

}  // namespace fpdata
