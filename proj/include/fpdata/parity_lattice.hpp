#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpdata/bit_matrix.hpp"
#include "fpdata/fp_function.hpp"

namespace fpdata {

// The realizable generators of F(G): the conjugation-action datum, the data
// induced from the conjugation actions of every non-cyclic subgroup class
// (both chiralities when the subgroup is icosahedral), and — for dihedral
// groups — the sphere data for every divisor k and unit c up to sign mod k.
std::vector<FPFunction> generator_inventory(const BasisPtr& basis);

// Mod-2 inventory with duplicate rows removed. row_source[i] is the index of
// the inventory entry row i came from.
struct GeneratorSystem {
  std::vector<FPFunction> inventory;
  BitMatrix mod2;
  std::vector<int> row_source;
};

GeneratorSystem generator_matrix(const BasisPtr& basis);

int span_dim(const BitMatrix& m);

// Basis of the parity equations c . n = 0 (mod 2) cutting out F(G) inside
// A(G), in canonical reduced echelon form.
struct ConstraintSystem {
  BasisPtr basis;
  BitMatrix rows;

  int size() const { return rows.row_count(); }
  std::vector<std::vector<std::string>> as_labels(bool pretty = false) const;
  std::string render_text() const;
};

ConstraintSystem constraints(const BasisPtr& basis);

struct MembershipCertificate {
  bool member = false;
  // For members: n = sum of the listed generators + 2 * halves.
  std::vector<int> generator_rows;        // indices into the inventory
  std::vector<std::string> generator_labels;
  std::vector<long long> halves;
  // For non-members: a parity equation n violates.
  std::vector<int> violated_constraint;   // support as basis indices
};

MembershipCertificate membership(const BasisPtr& basis, const FPFunction& n);

// Member with all values non-negative.
bool realizable(const BasisPtr& basis, const FPFunction& n);

struct Dims {
  int a_mod_f = 0;   // dim A/F
  int f_mod_2a = 0;  // dim F/2A
  bool operator==(const Dims&) const = default;
};

Dims dims(const BasisPtr& basis);

// Dimensions predicted by the classification: (floor(m/2), floor(m/4) or 0)
// for D_m, (1,1) for Tet, (3,3) for Oct, (4,3) for Icos. Used to cross-check
// that the generator family spans all of F/2A.
Dims expected_dims(const RotationModel& model);

// Exact reconstruction check of a positive certificate.
bool certificate_reconstructs(const BasisPtr& basis, const FPFunction& n,
                              const MembershipCertificate& cert,
                              const std::vector<FPFunction>& inventory);

}  // namespace fpdata
