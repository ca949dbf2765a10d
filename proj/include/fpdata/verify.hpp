#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fpdata/parity_lattice.hpp"

namespace fpdata {

struct VerificationReport {
  std::string subject;
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0.0;
};

// Checks the dihedral classification for D_m: the computed constraint system
// spans exactly the stated parity law (n^(D_k)_rho even when m/k is odd,
// equal parities of the marked classes when m/k is even), the dimensions are
// (floor(m/2), floor(m/4) or 0), and the circle oracle agrees with the
// closed-form sphere datum for every k | m and every unit c mod m.
std::vector<VerificationReport> verify_dihedral(int m);

// Checks the tetrahedral / octahedral / icosahedral classification:
// constraint spans, dimensions, and the generator tables (triangular for the
// octahedral group, identity for the icosahedral one, n^(A4) = 1 for the
// conjugation action of the tetrahedral group).
std::vector<VerificationReport> verify_platonic(Family which);

// Group-independent laws over one model: every synthesized generator has an
// even total, every pair class has directed-axis orbit count 3, and the
// basis size splits as dim A/F + dim F/2A.
std::vector<VerificationReport> verify_global(const BasisPtr& basis);

std::string render_reports_text(const std::vector<VerificationReport>& reports);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);
bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace fpdata
