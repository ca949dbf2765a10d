#pragma once

#include <string>
#include <vector>

#include "fpdata/group_table.hpp"

namespace fpdata {

// A subset of element ids, kept sorted and unique.
using ElementSet = std::vector<int>;

bool set_contains(const ElementSet& s, int e);
ElementSet whole_group(const GroupTable& g);

// Subgroup generated by the given elements.
ElementSet closure(const GroupTable& g, const ElementSet& seeds);
bool is_subgroup(const GroupTable& g, const ElementSet& s);
ElementSet conjugate_set(const GroupTable& g, int x, const ElementSet& s);

// {g : gs = sg for all s in S}.
ElementSet centralizer(const GroupTable& g, const ElementSet& s);
// {g : g H g^-1 = H}.
ElementSet normalizer(const GroupTable& g, const ElementSet& h);

// Isomorphism type from the order together with the element-order profile.
// This separates every type that occurs inside a finite rotation group.
FamilyTag iso_type_of(const GroupTable& g, const ElementSet& h);

// Marker letters distinguishing non-conjugate isomorphic subgroup classes:
// 'u'/'d' for the two dihedral classes (triangle-up / triangle-down),
// 's' for the normal Kleinian subgroup of the octahedral group.
struct SubgroupClass {
  ElementSet representative;  // lexicographically smallest member of the class
  FamilyTag iso;
  int class_size = 1;
  ElementSet normalizer;
  char marker = 0;  // 0, 'u', 'd' or 's'

  std::string label() const;                       // "D2u", "A4", ...
  std::string pretty_label() const;                // "D2△", ...
  bool contains(int e) const { return set_contains(representative, e); }
};

// Conjugacy classes of subgroups in a deterministic canonical order
// (descending subgroup order, markers last, then lexicographic).
std::vector<SubgroupClass> subgroup_classes(const GroupTable& g, bool noncyclic_only);

// Every subgroup, by exhaustive closure of pairs of cyclic subgroups (all
// subgroups of the supported families are 2-generated). Used directly for the
// Platonic groups and as a cross-check for the dihedral fast path.
std::vector<ElementSet> all_subgroups(const GroupTable& g);

}  // namespace fpdata
