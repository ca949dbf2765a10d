#include "fpdata/group_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fpdata {

int FamilyTag::group_order() const {
  switch (family) {
    case Family::Cyclic: return param;
    case Family::Dihedral: return 2 * param;
    case Family::Tet: return 12;
    case Family::Oct: return 24;
    case Family::Icos: return 60;
  }
  throw std::logic_error("FamilyTag: bad family");
}

std::string FamilyTag::str() const {
  switch (family) {
    case Family::Cyclic: return "Z" + std::to_string(param);
    case Family::Dihedral: return "D" + std::to_string(param);
    case Family::Tet: return "A4";
    case Family::Oct: return "S4";
    case Family::Icos: return "A5";
  }
  throw std::logic_error("FamilyTag: bad family");
}

namespace {

void fill_orders(GroupTable& g) {
  g.ord_table.assign(g.order, 0);
  for (int e = 0; e < g.order; ++e) {
    int x = e, n = 1;
    while (x != 0) {
      x = g.mul(x, e);
      ++n;
    }
    g.ord_table[e] = n;
  }
}

void fill_inverses(GroupTable& g) {
  g.inv_table.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mul(a, b) == 0) {
        g.inv_table[a] = b;
        break;
      }
}

GroupTable build_cyclic(int k) {
  if (k < 1) throw std::invalid_argument("build_group: Cyclic(k) needs k >= 1");
  GroupTable g;
  g.tag = cyclic(k);
  g.order = k;
  g.mul_table.resize(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) g.mul_table[a * k + b] = (a + b) % k;
  fill_inverses(g);
  fill_orders(g);
  return g;
}

GroupTable build_dihedral(int m) {
  if (m < 1) throw std::invalid_argument("build_group: Dihedral(m) needs m >= 1");
  GroupTable g;
  g.tag = dihedral(m);
  int n = 2 * m;
  g.order = n;
  g.mul_table.resize(n * n);
  // ids: j < m is r^j, m + j is r^j * s, with s r s = r^-1.
  auto id_of = [m](bool refl, long long j) {
    j %= m;
    if (j < 0) j += m;
    return static_cast<int>(j) + (refl ? m : 0);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool ra = a >= m, rb = b >= m;
      long long ja = a % m, jb = b % m;
      // (r^ja s^ea)(r^jb s^eb) = r^(ja + jb or ja - jb) s^(ea xor eb)
      long long j = ra ? ja - jb : ja + jb;
      g.mul_table[a * n + b] = id_of(ra != rb, j);
    }
  fill_inverses(g);
  fill_orders(g);
  return g;
}

GroupTable build_platonic(FamilyTag tag, Solid s) {
  const std::vector<Mat3>& mats = platonic_rotations(s);
  GroupTable g;
  g.tag = tag;
  g.order = static_cast<int>(mats.size());
  std::map<Mat3, int> index;
  for (int i = 0; i < g.order; ++i) index.emplace(mats[i], i);
  g.mul_table.resize(g.order * g.order);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      g.mul_table[a * g.order + b] = index.at(mats[a] * mats[b]);
  fill_inverses(g);
  fill_orders(g);
  return g;
}

}  // namespace

GroupTable build_group(FamilyTag tag) {
  switch (tag.family) {
    case Family::Cyclic: return build_cyclic(tag.param);
    case Family::Dihedral: return build_dihedral(tag.param);
    case Family::Tet: return build_platonic(tag, Solid::Tet);
    case Family::Oct: return build_platonic(tag, Solid::Oct);
    case Family::Icos: return build_platonic(tag, Solid::Icos);
  }
  throw std::logic_error("build_group: bad family");
}

bool is_associative(const GroupTable& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

bool has_valid_identity_and_inverses(const GroupTable& g) {
  for (int a = 0; a < g.order; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    int b = g.inv(a);
    if (b < 0 || g.mul(a, b) != 0 || g.mul(b, a) != 0) return false;
  }
  return true;
}

}  // namespace fpdata
