#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fpdata/rep_classes.hpp"

namespace fpdata {

// A candidate or realized fixed-point datum: one integer n^H_rho per basis
// pair class, counting G-orbits of fixed points of that type.
struct FPFunction {
  BasisPtr basis;
  std::vector<long long> values;
  std::string provenance;

  long long total() const;
  long long at_label(const std::string& label) const;
  bool nonnegative() const;
};

FPFunction zero_function(BasisPtr basis, std::string provenance = "zero");

// Datum of G acting on the rotation group by conjugation: one fixed point at
// the identity with the full group as stabilizer, plus one fixed point (the
// half-turn about l) per orbit of axes l whose centralizer — the rotations
// about l together with the half-turns about perpendicular axes — is
// non-cyclic. Tangent representations are the standard embeddings.
FPFunction conj_action_data(const BasisPtr& basis);

// Datum of G acting on the twisted product G x_H X, given the datum of H on
// X: each H-pair count is carried to the G-class containing that pair.
FPFunction induce(const BasisPtr& g_basis, const SubgroupClass& h, const FPFunction& n_h);

// Closed-form datum of the dihedral sphere action: the rotation generator
// acts on the unit sphere of C^2 by (z, w) -> (e^(2 pi i k/m) z,
// e^(2 pi i c/m) w) and a reflection by complex conjugation of both
// coordinates. Requires k | m, k >= 2, gcd(c, m) = 1.
FPFunction dihedral_sphere_data(const BasisPtr& basis, int k, long long c);

// A point of the core circle {w = 0} with non-cyclic stabilizer.
struct SpherePoint {
  Rational position;  // angle of the point as a fraction of a revolution
  ElementSet stabilizer;
  RepClass tangent_rep;
  int pair_index = -1;
};

// Exact enumeration of all points of the sphere action with non-cyclic
// stabilizer; they are the fixed points of the reflections on the core
// circle. Stabilizers and tangent representations are exact.
std::vector<SpherePoint> sphere_action_oracle(const BasisPtr& basis, int k, long long c);

// Datum aggregated from the oracle by explicit orbit counting on the circle
// (independent of the closed form above).
FPFunction sphere_oracle_data(const BasisPtr& basis, int k, long long c);

// The function 2 * e_(H, rho).
FPFunction double_unit(const BasisPtr& basis, int index);

// Per-subgroup totals n^H = sum over rho of n^H_rho, in basis order.
std::vector<std::pair<std::string, long long>> aggregate_by_subgroup(const FPFunction& n);

// JSON form: {"group": <label>, "values": [{"pair": <label>, "count": <int>}]}
// with zero entries omitted.
nlohmann::json fp_to_json(const FPFunction& n);
FPFunction fp_from_json(const BasisPtr& basis, const nlohmann::json& j);

}  // namespace fpdata
