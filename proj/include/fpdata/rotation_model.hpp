#pragma once

#include <string>
#include <vector>

#include "fpdata/group_table.hpp"
#include "fpdata/rational.hpp"

namespace fpdata {

enum class Chirality { None, Plus, Minus };

// A group table enriched with exact rotation geometry: every non-identity
// element is tagged with the line it rotates about and its turn, axes carry
// fold orders and an exact orthogonality relation, and the group acts on
// directed axes through a cached permutation table. Directed axis ids are
// 2*axis + sign. Everything is exact; no floating point.
struct RotationModel {
  GroupTable group;
  Chirality chirality = Chirality::None;
  std::vector<int> axis_of_elem;  // -1 for the identity
  std::vector<Turn> turns;        // chirality-adjusted turn tags
  std::vector<Turn> turns_plus;   // reference (+) tags; differ from turns only
                                  // on order-5 classes of the Icos(-) model
  int axis_count = 0;
  std::vector<int> axis_fold;
  std::vector<char> perp_table;         // axis_count x axis_count
  std::vector<int> directed_act_table;  // order x (2 * axis_count)

  int axis_of(int e) const { return axis_of_elem[e]; }
  Turn turn_of(int e) const { return turns[e]; }
  Turn turn_plus(int e) const { return turns_plus[e]; }
  bool perp(int a, int b) const { return perp_table[a * axis_count + b] != 0; }
  int act_directed(int g, int d) const {
    return directed_act_table[g * 2 * axis_count + d];
  }
  int act_axis(int g, int a) const { return act_directed(g, 2 * a) / 2; }

  std::string label() const;  // "D12", "A4", "S4", "A5+", "A5-"
};

// Builds the standard model of a non-cyclic rotation group. Chirality must be
// given exactly for the icosahedral family. Dihedral needs m >= 2.
RotationModel build_model(FamilyTag tag, Chirality chi = Chirality::None);

// Number of orbits of a non-cyclic rotation group acting on the directed axes
// of its own rotations. Always 3; verified rather than assumed.
int directed_axis_orbit_count(FamilyTag iso_type);

}  // namespace fpdata
