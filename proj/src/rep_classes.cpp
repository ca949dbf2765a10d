#include "fpdata/rep_classes.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpdata {

Turn angle_at(const AngleMap& f, int e) {
  auto it = std::lower_bound(f.begin(), f.end(), e,
                             [](const auto& p, int v) { return p.first < v; });
  if (it == f.end() || it->first != e)
    throw std::invalid_argument("angle_at: element not in domain");
  return it->second;
}

namespace {

void sort_angles(AngleMap& f) {
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

long long rep_label_rank(const std::string& label) {
  if (label == "std" || label == "+") return 0;
  if (label == "-") return 1;
  return std::stoll(label);  // "a/k" ranks by a
}

int lowest_element_of_order(const GroupTable& g, const ElementSet& h, int k) {
  for (int e : h)
    if (g.order_of(e) == k) return e;
  throw std::logic_error("lowest_element_of_order: none found");
}

// Core enumeration over a concrete element set. plus_tags, when given, are
// the ambient reference turn tags used to name order-5 classes +/-.
std::vector<RepClass> rep_classes_core(const GroupTable& g, const ElementSet& h,
                                       FamilyTag iso, const std::vector<Turn>* plus_tags) {
  std::vector<RepClass> out;
  switch (iso.family) {
    case Family::Cyclic: {
      int k = iso.param;
      if (k == 1) {
        out.push_back(RepClass{iso, AngleMap{{h[0], Turn()}}, "std"});
        break;
      }
      int x0 = lowest_element_of_order(g, h, k);
      for (long long a = 1; 2 * a <= k; ++a) {
        if (std::gcd(a, static_cast<long long>(k)) != 1) continue;
        AngleMap f;
        int x = 0;
        for (long long j = 0; j < k; ++j) {
          f.emplace_back(x, Turn::of(a * j, k));
          x = g.mul(x, x0);
        }
        sort_angles(f);
        out.push_back(RepClass{iso, std::move(f), Turn::of(a, k).str()});
      }
      break;
    }
    case Family::Dihedral: {
      int k = iso.param;
      if (k == 2) {
        AngleMap f;
        for (int e : h) f.emplace_back(e, e == 0 ? Turn() : Turn::of(1, 2));
        out.push_back(RepClass{iso, std::move(f), "std"});
        break;
      }
      int x0 = lowest_element_of_order(g, h, k);
      ElementSet zk = closure(g, {x0});
      for (long long a = 1; 2 * a <= k; ++a) {
        if (std::gcd(a, static_cast<long long>(k)) != 1) continue;
        AngleMap f;
        int x = 0;
        for (long long j = 0; j < k; ++j) {
          f.emplace_back(x, Turn::of(a * j, k));
          x = g.mul(x, x0);
        }
        for (int e : h)
          if (!set_contains(zk, e)) f.emplace_back(e, Turn::of(1, 2));
        sort_angles(f);
        std::string label = Turn::of(a, k).str();
        if (plus_tags && k == 5) {
          // D5 restrictions inside an icosahedral group carry the ambient
          // chirality names.
          bool plus = true;
          for (const auto& [e, t] : f)
            if (g.order_of(e) == 5 && t != (*plus_tags)[e]) {
              plus = false;
              break;
            }
          label = plus ? "+" : "-";
        }
        out.push_back(RepClass{iso, std::move(f), std::move(label)});
      }
      break;
    }
    case Family::Tet:
    case Family::Oct: {
      AngleMap f;
      for (int e : h) f.emplace_back(e, Turn::of(1, g.order_of(e)));
      out.push_back(RepClass{iso, std::move(f), "std"});
      break;
    }
    case Family::Icos: {
      if (!plus_tags)
        throw std::logic_error("rep_classes_core: Icos subject needs reference tags");
      // Split the order-5 elements into the two conjugacy classes of H.
      ElementSet fifth;
      for (int e : h)
        if (g.order_of(e) == 5) fifth.push_back(e);
      ElementSet c1;
      {
        std::vector<char> in_c1(g.order, 0);
        int e0 = fifth.front();
        for (int x : h) in_c1[g.conj(x, e0)] = 1;
        for (int e : fifth)
          if (in_c1[e]) c1.push_back(e);
      }
      if (2 * c1.size() != fifth.size())
        throw std::logic_error("rep_classes_core: unexpected order-5 class split");
      for (int variant = 0; variant < 2; ++variant) {
        AngleMap f;
        for (int e : h) {
          int o = g.order_of(e);
          if (o != 5) {
            f.emplace_back(e, Turn::of(1, o));
          } else {
            bool first_class = set_contains(c1, e);
            long long p = (first_class == (variant == 0)) ? 1 : 2;
            f.emplace_back(e, Turn::of(p, 5));
          }
        }
        sort_angles(f);
        bool plus = true;
        for (const auto& [e, t] : f)
          if (g.order_of(e) == 5 && t != (*plus_tags)[e]) {
            plus = false;
            break;
          }
        out.push_back(RepClass{iso, std::move(f), plus ? "+" : "-"});
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const RepClass& a, const RepClass& b) {
    return rep_label_rank(a.label) < rep_label_rank(b.label);
  });
  return out;
}

}  // namespace

std::vector<RepClass> faithful_rep_classes(FamilyTag iso) {
  if (iso.family == Family::Icos) {
    RotationModel md = build_model(iso, Chirality::Plus);
    return rep_classes_core(md.group, whole_group(md.group), iso, &md.turns_plus);
  }
  GroupTable g = build_group(iso);
  return rep_classes_core(g, whole_group(g), iso, nullptr);
}

std::vector<RepClass> subgroup_rep_classes(const RotationModel& ambient, const ElementSet& h) {
  FamilyTag iso = iso_type_of(ambient.group, h);
  const std::vector<Turn>* tags =
      ambient.group.tag.family == Family::Icos ? &ambient.turns_plus : nullptr;
  return rep_classes_core(ambient.group, h, iso, tags);
}

RepClass standard_rep_class(const RotationModel& model, const ElementSet& h) {
  AngleMap f;
  for (int e : h) f.emplace_back(e, model.turn_of(e));
  for (const RepClass& rc : subgroup_rep_classes(model, h))
    if (rc.angles == f) return rc;
  throw std::logic_error("standard_rep_class: restriction is not faithful");
}

std::pair<ElementSet, RepClass> conjugate_pair(const RotationModel& model, int g,
                                               const ElementSet& h, const RepClass& rho) {
  const GroupTable& t = model.group;
  RepClass out{rho.subject, AngleMap{}, rho.label};
  out.angles.reserve(rho.angles.size());
  for (const auto& [e, turn] : rho.angles) out.angles.emplace_back(t.conj(g, e), turn);
  std::sort(out.angles.begin(), out.angles.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return {conjugate_set(t, g, h), std::move(out)};
}

int pair_stabilizer_order(const RotationModel& model, const ElementSet& h, const RepClass& rho) {
  const GroupTable& t = model.group;
  int count = 0;
  for (int n : normalizer(t, h)) {
    bool fixes = true;
    for (const auto& [e, turn] : rho.angles)
      if (angle_at(rho.angles, t.conj(n, e)) != turn) {
        fixes = false;
        break;
      }
    if (fixes) ++count;
  }
  return count;
}

namespace {

std::string join_label(const SubgroupClass& sc, const RepClass& rc, bool pretty) {
  return (pretty ? sc.pretty_label() : sc.label()) + ":" + rc.label;
}

}  // namespace

BasisPtr pair_class_basis(const RotationModel& model) {
  auto basis = std::make_shared<PairBasis>();
  basis->model = model;
  const GroupTable& t = model.group;
  bool dihedral_ambient = t.tag.family == Family::Dihedral;

  for (SubgroupClass& sc : subgroup_classes(t, /*noncyclic_only=*/true)) {
    std::vector<RepClass> reps = subgroup_rep_classes(model, sc.representative);
    if (dihedral_ambient) {
      // Inside a dihedral group, conjugation is inversion on the rotation
      // part, which every angle function absorbs: the normalizer fixes each
      // class and no merging can occur.
      for (RepClass& rc : reps) {
        PairClass pc{sc, std::move(rc), static_cast<int>(sc.normalizer.size()), "", ""};
        pc.label = join_label(pc.subgroup, pc.rep, false);
        pc.pretty = join_label(pc.subgroup, pc.rep, true);
        basis->pairs.push_back(std::move(pc));
      }
      continue;
    }
    std::vector<char> used(reps.size(), 0);
    for (size_t i = 0; i < reps.size(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      int stab = 0;
      for (int n : sc.normalizer) {
        auto [hn, fn] = conjugate_pair(model, n, sc.representative, reps[i]);
        (void)hn;  // n normalizes H
        if (fn.angles == reps[i].angles) {
          ++stab;
          continue;
        }
        for (size_t j = i + 1; j < reps.size(); ++j)
          if (!used[j] && reps[j].angles == fn.angles) used[j] = 1;
      }
      PairClass pc{sc, reps[i], stab, "", ""};
      pc.label = join_label(pc.subgroup, pc.rep, false);
      pc.pretty = join_label(pc.subgroup, pc.rep, true);
      basis->pairs.push_back(std::move(pc));
    }
  }
  for (int i = 0; i < basis->size(); ++i) basis->by_label.emplace(basis->pairs[i].label, i);
  if (basis->by_label.size() != basis->pairs.size())
    throw std::logic_error("pair_class_basis: duplicate labels");
  return basis;
}

namespace {

// Structural classification inside a dihedral group: a non-cyclic subgroup is
// the D_k generated by Z_k and the reflections with index congruent to i0 mod
// m/k; its class is determined by k and the parity of i0, and the rep label
// by the turn of the canonical rotation generator r^(m/k).
int classify_pair_dihedral(const PairBasis& basis, const ElementSet& k_set, const RepClass& f) {
  int m = basis.model.group.tag.param;
  int k = static_cast<int>(k_set.size()) / 2;
  int i0 = -1;
  for (int e : k_set)
    if (e >= m) {
      i0 = e - m;
      break;
    }
  if (i0 < 0 || m % k != 0) throw std::invalid_argument("classify_pair: not a dihedral subgroup");
  int q = m / k;
  std::string sub = "D" + std::to_string(k);
  if (q % 2 == 0) sub += (i0 % q) % 2 == 0 ? 'u' : 'd';
  std::string rep = k == 2 ? "std" : angle_at(f.angles, q).str();
  int idx = basis.index_of(sub + ":" + rep);
  if (idx < 0) throw std::invalid_argument("classify_pair: no class " + sub + ":" + rep);
  return idx;
}

}  // namespace

int classify_pair(const PairBasis& basis, const ElementSet& k_set, const RepClass& f) {
  const GroupTable& t = basis.model.group;
  if (t.tag.family == Family::Dihedral) return classify_pair_dihedral(basis, k_set, f);
  for (int i = 0; i < basis.size(); ++i) {
    const PairClass& pc = basis.pairs[i];
    if (pc.subgroup.representative.size() != k_set.size()) continue;
    for (int g = 0; g < t.order; ++g) {
      auto [kg, fg] = conjugate_pair(basis.model, g, k_set, f);
      if (kg != pc.subgroup.representative) continue;
      if (fg.angles == pc.rep.angles) return i;
      // Another normalizer element may still carry fg onto the class rep.
      bool merged = false;
      for (int n : pc.subgroup.normalizer) {
        auto [kn, fn] = conjugate_pair(basis.model, n, kg, fg);
        (void)kn;
        if (fn.angles == pc.rep.angles) {
          merged = true;
          break;
        }
      }
      if (merged) return i;
      break;  // subgroup matched, rep belongs to a sibling pair class
    }
  }
  throw std::invalid_argument("classify_pair: pair not found in basis");
}

int directed_axis_orbit_count(const PairClass& pc) {
  return directed_axis_orbit_count(pc.subgroup.iso);
}

}  // namespace fpdata
