#include "fpdata/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fpdata {

bool set_contains(const ElementSet& s, int e) {
  return std::binary_search(s.begin(), s.end(), e);
}

ElementSet whole_group(const GroupTable& g) {
  ElementSet s(g.order);
  for (int i = 0; i < g.order; ++i) s[i] = i;
  return s;
}

ElementSet closure(const GroupTable& g, const ElementSet& seeds) {
  std::vector<char> in(g.order, 0);
  std::vector<int> list;
  auto add = [&](int e) {
    if (!in[e]) {
      in[e] = 1;
      list.push_back(e);
    }
  };
  add(0);
  for (int e : seeds) add(e);
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      add(g.mul(list[i], list[j]));
      add(g.mul(list[j], list[i]));
    }
  std::sort(list.begin(), list.end());
  return list;
}

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (s.empty() || !set_contains(s, 0)) return false;
  for (int a : s)
    for (int b : s)
      if (!set_contains(s, g.mul(a, b))) return false;
  return true;
}

ElementSet conjugate_set(const GroupTable& g, int x, const ElementSet& s) {
  ElementSet r;
  r.reserve(s.size());
  for (int e : s) r.push_back(g.conj(x, e));
  std::sort(r.begin(), r.end());
  return r;
}

ElementSet centralizer(const GroupTable& g, const ElementSet& s) {
  ElementSet r;
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int e : s)
      if (g.mul(x, e) != g.mul(e, x)) {
        ok = false;
        break;
      }
    if (ok) r.push_back(x);
  }
  return r;
}

ElementSet normalizer(const GroupTable& g, const ElementSet& h) {
  ElementSet r;
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int e : h)
      if (!set_contains(h, g.conj(x, e))) {
        ok = false;
        break;
      }
    if (ok) r.push_back(x);
  }
  return r;
}

namespace {

std::map<int, int> order_profile(const GroupTable& g, const ElementSet& h) {
  std::map<int, int> p;
  for (int e : h) ++p[g.order_of(e)];
  return p;
}

std::map<int, int> dihedral_profile(int k) {
  std::map<int, int> p;
  for (int j = 0; j < k; ++j) ++p[k / std::gcd(j, k)];
  p[2] += k;
  return p;
}

}  // namespace

FamilyTag iso_type_of(const GroupTable& g, const ElementSet& h) {
  int n = static_cast<int>(h.size());
  int max_order = 1;
  for (int e : h) max_order = std::max(max_order, g.order_of(e));
  if (max_order == n) return cyclic(n);
  std::map<int, int> p = order_profile(g, h);
  if (n % 2 == 0 && p == dihedral_profile(n / 2)) return dihedral(n / 2);
  if (n == 12 && p == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}}) return tet();
  if (n == 24 && p == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) return oct();
  if (n == 60 && p == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}) return icos();
  throw std::domain_error("iso_type_of: not a rotation-group subgroup type");
}

std::string SubgroupClass::label() const {
  std::string s = iso.str();
  if (marker) s += marker;
  return s;
}

std::string SubgroupClass::pretty_label() const {
  std::string s = iso.str();
  switch (marker) {
    case 'u': s += "△"; break;
    case 'd': s += "▽"; break;
    case 's': s += "✱"; break;
    default: break;
  }
  return s;
}

std::vector<ElementSet> all_subgroups(const GroupTable& g) {
  // Cyclic subgroups first, then closures of pairs of them. Every subgroup of
  // a finite rotation group is generated by at most two elements.
  std::set<ElementSet> cyclics;
  cyclics.insert(ElementSet{0});
  for (int e = 1; e < g.order; ++e) cyclics.insert(closure(g, {e}));
  std::set<ElementSet> subs(cyclics.begin(), cyclics.end());
  std::vector<ElementSet> cyc(cyclics.begin(), cyclics.end());
  for (size_t i = 0; i < cyc.size(); ++i)
    for (size_t j = i + 1; j < cyc.size(); ++j) {
      ElementSet seeds = cyc[i];
      seeds.insert(seeds.end(), cyc[j].begin(), cyc[j].end());
      subs.insert(closure(g, seeds));
    }
  std::vector<ElementSet> out(subs.begin(), subs.end());
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

int marker_rank(char m) {
  switch (m) {
    case 0: return 0;
    case 'u': return 1;
    case 'd': return 2;
    case 's': return 3;
  }
  return 4;
}

bool class_order_less(const SubgroupClass& a, const SubgroupClass& b) {
  if (a.representative.size() != b.representative.size())
    return a.representative.size() > b.representative.size();
  if (marker_rank(a.marker) != marker_rank(b.marker))
    return marker_rank(a.marker) < marker_rank(b.marker);
  return a.representative < b.representative;
}

// Assign 'u'/'d'/'s' markers to non-conjugate isomorphic non-cyclic classes.
void assign_markers(const GroupTable& g, std::vector<SubgroupClass>& classes) {
  std::map<std::string, std::vector<SubgroupClass*>> by_iso;
  for (SubgroupClass& c : classes)
    if (!c.iso.is_cyclic()) by_iso[c.iso.str()].push_back(&c);
  for (auto& [iso, group] : by_iso) {
    if (group.size() == 1) continue;
    if (group.size() != 2)
      throw std::logic_error("assign_markers: more than two classes of type " + iso);
    SubgroupClass *x = group[0], *y = group[1];
    bool x_normal = static_cast<int>(x->normalizer.size()) == g.order;
    bool y_normal = static_cast<int>(y->normalizer.size()) == g.order;
    if (x_normal != y_normal) {
      (x_normal ? x : y)->marker = 's';
    } else {
      if (y->representative < x->representative) std::swap(x, y);
      x->marker = 'u';
      y->marker = 'd';
    }
  }
}

std::vector<SubgroupClass> classes_generic(const GroupTable& g, bool noncyclic_only) {
  std::vector<ElementSet> subs = all_subgroups(g);
  std::set<ElementSet> seen;
  std::vector<SubgroupClass> classes;
  for (const ElementSet& h : subs) {
    if (seen.count(h)) continue;
    std::set<ElementSet> orbit;
    for (int x = 0; x < g.order; ++x) orbit.insert(conjugate_set(g, x, h));
    for (const ElementSet& o : orbit) seen.insert(o);
    SubgroupClass c;
    c.representative = *orbit.begin();  // lexicographically smallest conjugate
    c.iso = iso_type_of(g, c.representative);
    c.class_size = static_cast<int>(orbit.size());
    c.normalizer = normalizer(g, c.representative);
    classes.push_back(std::move(c));
  }
  if (noncyclic_only)
    std::erase_if(classes, [](const SubgroupClass& c) { return c.iso.is_cyclic(); });
  assign_markers(g, classes);
  std::sort(classes.begin(), classes.end(), class_order_less);
  return classes;
}

// Dihedral subgroups are index arithmetic: for k | m the subgroups of type
// D_k are Z_k together with the reflections with index congruent to i0 mod
// m/k. They fall into one conjugacy class when m/k is odd and two (even /
// odd i0) when m/k is even. Cyclic subgroups are the rotation groups Z_k and
// the reflection two-element groups.
std::vector<SubgroupClass> classes_dihedral(const GroupTable& g, bool noncyclic_only) {
  int m = g.tag.param;
  std::vector<SubgroupClass> classes;

  auto dihedral_subgroup = [&](int k, int i0) {
    ElementSet s;
    for (int j = 0; j < k; ++j) s.push_back(j * (m / k));
    for (int i = i0; i < m; i += m / k) s.push_back(m + i);
    std::sort(s.begin(), s.end());
    return s;
  };

  for (int k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    int q = m / k;
    if (k >= 2) {
      if (q % 2 == 1) {
        SubgroupClass c;
        c.representative = dihedral_subgroup(k, 0);
        c.iso = dihedral(k);
        c.class_size = q;
        c.normalizer = normalizer(g, c.representative);
        classes.push_back(std::move(c));
      } else {
        for (int i0 = 0; i0 < 2; ++i0) {
          SubgroupClass c;
          c.representative = dihedral_subgroup(k, i0);
          c.iso = dihedral(k);
          c.class_size = q / 2;
          c.normalizer = normalizer(g, c.representative);
          c.marker = i0 == 0 ? 'u' : 'd';
          classes.push_back(std::move(c));
        }
      }
    }
    if (!noncyclic_only) {
      SubgroupClass c;  // rotation subgroup Z_k, normal
      ElementSet s;
      for (int j = 0; j < k; ++j) s.push_back(j * q);
      std::sort(s.begin(), s.end());
      c.representative = std::move(s);
      c.iso = cyclic(k);
      c.class_size = 1;
      c.normalizer = whole_group(g);
      classes.push_back(std::move(c));
    }
  }
  if (!noncyclic_only) {
    // Reflection subgroups {1, r^i s}: one class for odd m, two for even m.
    int num_classes = m % 2 == 1 ? 1 : 2;
    for (int i0 = 0; i0 < num_classes; ++i0) {
      SubgroupClass c;
      c.representative = ElementSet{0, m + i0};
      c.iso = cyclic(2);
      c.class_size = m / num_classes;
      c.normalizer = normalizer(g, c.representative);
      classes.push_back(std::move(c));
    }
  }
  std::sort(classes.begin(), classes.end(), class_order_less);
  return classes;
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const GroupTable& g, bool noncyclic_only) {
  if (g.tag.family == Family::Dihedral) return classes_dihedral(g, noncyclic_only);
  return classes_generic(g, noncyclic_only);
}

}  // namespace fpdata
