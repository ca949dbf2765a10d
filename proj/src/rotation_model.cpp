#include "fpdata/rotation_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fpdata {

std::string RotationModel::label() const {
  if (group.tag.family == Family::Icos)
    return chirality == Chirality::Plus ? "A5+" : "A5-";
  return group.tag.str();
}

namespace {

RotationModel build_dihedral_model(int m) {
  if (m < 2) throw std::invalid_argument("build_model: Dihedral(m) needs m >= 2");
  RotationModel md;
  md.group = build_group(dihedral(m));
  int n = md.group.order;

  // Axis 0 is the vertical m-fold axis; axis 1+j is the horizontal axis of
  // the reflection r^j s, at angle j*pi/m.
  md.axis_count = m + 1;
  md.axis_fold.assign(md.axis_count, 2);
  md.axis_fold[0] = m;
  md.axis_of_elem.assign(n, -1);
  md.turns.assign(n, Turn());
  for (int j = 1; j < m; ++j) {
    md.axis_of_elem[j] = 0;
    md.turns[j] = Turn::of(j, m);
  }
  for (int j = 0; j < m; ++j) {
    md.axis_of_elem[m + j] = 1 + j;
    md.turns[m + j] = Turn::of(1, 2);
  }
  md.turns_plus = md.turns;

  md.perp_table.assign(md.axis_count * md.axis_count, 0);
  auto set_perp = [&](int a, int b) {
    md.perp_table[a * md.axis_count + b] = 1;
    md.perp_table[b * md.axis_count + a] = 1;
  };
  for (int j = 0; j < m; ++j) set_perp(0, 1 + j);
  if (m % 2 == 0)
    for (int i = 0; i < m; ++i) set_perp(1 + i, 1 + (i + m / 2) % m);

  // Directed horizontals are the 2m rays at angles t*pi/m, t in Z_2m; ray t
  // of axis 1+j has t = j + sign*m. Rotation r^a shifts t by 2a, the
  // reflection r^i s maps t to 2i - t and swaps the two vertical rays.
  int nd = 2 * md.axis_count;
  md.directed_act_table.assign(n * nd, 0);
  auto dir_of_t = [m](int t) {
    t %= 2 * m;
    if (t < 0) t += 2 * m;
    return 2 * (1 + t % m) + t / m;
  };
  for (int g = 0; g < n; ++g) {
    bool refl = g >= m;
    int jg = g % m;
    int* row = &md.directed_act_table[g * nd];
    row[0] = refl ? 1 : 0;
    row[1] = refl ? 0 : 1;
    for (int j = 0; j < m; ++j)
      for (int s = 0; s < 2; ++s) {
        int t = j + s * m;
        int t2 = refl ? 2 * jg - t : t + 2 * jg;
        row[2 * (1 + j) + s] = dir_of_t(t2);
      }
  }
  return md;
}

Turn turn_from_matrix(const Mat3& r, int elem_order) {
  if (elem_order == 1) return Turn();
  if (elem_order <= 4) return Turn::of(1, elem_order);
  // Order 5: the trace 1 + 2cos(2*pi*p/5) identifies p exactly.
  const QSqrt5 trace_fifth(Rational(1, 2), Rational(1, 2));    // (1+sqrt5)/2
  if (r.trace() == trace_fifth) return Turn::of(1, 5);
  const QSqrt5 trace_two_fifths(Rational(1, 2), Rational(-1, 2));
  if (r.trace() == trace_two_fifths) return Turn::of(2, 5);
  throw std::logic_error("turn_from_matrix: unexpected trace");
}

RotationModel build_platonic_model(FamilyTag tag, Solid solid, Chirality chi) {
  RotationModel md;
  md.group = build_group(tag);
  md.chirality = chi;
  const std::vector<Mat3>& mats = platonic_rotations(solid);
  int n = md.group.order;

  std::vector<Vec3> lines;  // canonical line per element, identity skipped
  std::map<std::vector<std::string>, int> line_ids;
  auto key_of = [](const Vec3& v) {
    return std::vector<std::string>{v[0].str(), v[1].str(), v[2].str()};
  };
  std::vector<Vec3> elem_line(n);
  for (int e = 1; e < n; ++e) elem_line[e] = canonical_line(rotation_axis(mats[e]));

  std::vector<Vec3> distinct;
  for (int e = 1; e < n; ++e)
    if (std::find(distinct.begin(), distinct.end(), elem_line[e]) == distinct.end())
      distinct.push_back(elem_line[e]);
  std::sort(distinct.begin(), distinct.end(), lex_less);
  md.axis_count = static_cast<int>(distinct.size());
  for (int a = 0; a < md.axis_count; ++a) line_ids.emplace(key_of(distinct[a]), a);

  md.axis_of_elem.assign(n, -1);
  md.turns_plus.assign(n, Turn());
  for (int e = 1; e < n; ++e) {
    md.axis_of_elem[e] = line_ids.at(key_of(elem_line[e]));
    md.turns_plus[e] = turn_from_matrix(mats[e], md.group.order_of(e));
  }
  md.turns = md.turns_plus;
  if (chi == Chirality::Minus)
    for (int e = 1; e < n; ++e)
      if (md.group.order_of(e) == 5)
        md.turns[e] = md.turns[e] == Turn::of(1, 5) ? Turn::of(2, 5) : Turn::of(1, 5);

  md.axis_fold.assign(md.axis_count, 1);
  for (int e = 1; e < n; ++e) {
    int a = md.axis_of_elem[e];
    md.axis_fold[a] = std::max<int>(md.axis_fold[a], md.group.order_of(e));
  }

  md.perp_table.assign(md.axis_count * md.axis_count, 0);
  for (int a = 0; a < md.axis_count; ++a)
    for (int b = 0; b < md.axis_count; ++b)
      if (a != b && dot(distinct[a], distinct[b]).is_zero())
        md.perp_table[a * md.axis_count + b] = 1;

  // Directed axes: ray 2a is the canonical line vector, ray 2a+1 its negative.
  int nd = 2 * md.axis_count;
  std::map<std::vector<std::string>, int> ray_ids;
  std::vector<Vec3> rays(nd);
  for (int a = 0; a < md.axis_count; ++a) {
    rays[2 * a] = distinct[a];
    rays[2 * a + 1] = Vec3{-distinct[a][0], -distinct[a][1], -distinct[a][2]};
    ray_ids.emplace(key_of(rays[2 * a]), 2 * a);
    ray_ids.emplace(key_of(rays[2 * a + 1]), 2 * a + 1);
  }
  md.directed_act_table.assign(n * nd, 0);
  for (int g = 0; g < n; ++g)
    for (int d = 0; d < nd; ++d) {
      Vec3 w = canonical_ray(mats[g] * rays[d]);
      md.directed_act_table[g * nd + d] = ray_ids.at(key_of(w));
    }
  return md;
}

}  // namespace

RotationModel build_model(FamilyTag tag, Chirality chi) {
  switch (tag.family) {
    case Family::Cyclic:
      throw std::invalid_argument("build_model: cyclic groups have no model here");
    case Family::Dihedral:
      if (chi != Chirality::None)
        throw std::invalid_argument("build_model: chirality only applies to Icos");
      return build_dihedral_model(tag.param);
    case Family::Tet:
    case Family::Oct:
      if (chi != Chirality::None)
        throw std::invalid_argument("build_model: chirality only applies to Icos");
      return build_platonic_model(tag, tag.family == Family::Tet ? Solid::Tet : Solid::Oct,
                                  Chirality::None);
    case Family::Icos:
      if (chi == Chirality::None)
        throw std::invalid_argument("build_model: Icos needs a chirality");
      return build_platonic_model(tag, Solid::Icos, chi);
  }
  throw std::logic_error("build_model: bad family");
}

int directed_axis_orbit_count(FamilyTag iso_type) {
  if (iso_type.is_cyclic())
    throw std::domain_error("directed_axis_orbit_count: needs a non-cyclic type");
  RotationModel md = build_model(
      iso_type, iso_type.family == Family::Icos ? Chirality::Plus : Chirality::None);
  int nd = 2 * md.axis_count;
  std::vector<int> root(nd);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int g = 0; g < md.group.order; ++g)
    for (int d = 0; d < nd; ++d) {
      int a = find(d), b = find(md.act_directed(g, d));
      if (a != b) root[a] = b;
    }
  int orbits = 0;
  for (int d = 0; d < nd; ++d)
    if (find(d) == d) ++orbits;
  return orbits;
}

}  // namespace fpdata
