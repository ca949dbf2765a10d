#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fpdata/rotation_model.hpp"
#include "fpdata/subgroups.hpp"

namespace fpdata {

// Angle function: element id -> turn, sorted by id. Encodes an equivalence
// class of faithful representations by proper rotations of 3-space: for every
// subgroup type of a finite rotation group, two such representations are
// equivalent exactly when their angle functions agree.
using AngleMap = std::vector<std::pair<int, Turn>>;

Turn angle_at(const AngleMap& f, int e);

struct RepClass {
  FamilyTag subject;  // iso type of H
  AngleMap angles;    // on the elements of a concrete realization of H
  std::string label;  // "a/k", "std", "+", "-"

  bool operator==(const RepClass& o) const {
    return subject == o.subject && angles == o.angles;
  }
};

// All faithful representation classes of an abstract group of the given iso
// type, over the element ids of build_group(iso). Cyclic(k) and Dihedral(k)
// have phi(k)/2 classes for k > 2 and one for k <= 2; Tet and Oct have one;
// Icos has two.
std::vector<RepClass> faithful_rep_classes(FamilyTag iso);

// Same, for a concrete subgroup of a model's group, with labels referenced to
// the ambient model (order-5 turns inside an icosahedral ambient are labelled
// +/- against the model's reference chirality).
std::vector<RepClass> subgroup_rep_classes(const RotationModel& ambient, const ElementSet& h);

// The class of H's own embedding: the model's turn tags restricted to H.
RepClass standard_rep_class(const RotationModel& model, const ElementSet& h);

// (H, rho) -> (gHg^-1, rho composed with conjugation by g^-1).
std::pair<ElementSet, RepClass> conjugate_pair(const RotationModel& model, int g,
                                               const ElementSet& h, const RepClass& rho);

// |N_G(H, rho)|: elements normalizing H whose conjugation fixes the class.
int pair_stabilizer_order(const RotationModel& model, const ElementSet& h, const RepClass& rho);

// One basis vector of A(G): a conjugacy class of pairs (H, rho) with H a
// non-cyclic subgroup, rho a faithful representation class, merged under
// conjugation by the normalizer of H.
struct PairClass {
  SubgroupClass subgroup;
  RepClass rep;
  int stabilizer_order = 0;
  std::string label;   // machine-safe, e.g. "D2u:std"
  std::string pretty;  // display form, e.g. "D2△:std"
};

struct PairBasis {
  RotationModel model;
  std::vector<PairClass> pairs;
  std::map<std::string, int> by_label;

  int size() const { return static_cast<int>(pairs.size()); }
  int index_of(const std::string& label) const {
    auto it = by_label.find(label);
    return it == by_label.end() ? -1 : it->second;
  }
};

using BasisPtr = std::shared_ptr<const PairBasis>;

// The canonical basis of A(G) in deterministic order.
BasisPtr pair_class_basis(const RotationModel& model);

// Index of the basis class containing the pair (K, f); throws if it is not a
// valid pair over this group.
int classify_pair(const PairBasis& basis, const ElementSet& k, const RepClass& f);

// Spec-level convenience: orbit count of the directed-axis action of the
// image group of a basis pair. Always 3.
int directed_axis_orbit_count(const PairClass& pc);

}  // namespace fpdata
