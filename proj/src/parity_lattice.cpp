#include "fpdata/parity_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fpdata {

namespace {

BitRow mod2_row(const FPFunction& n) {
  BitRow r(static_cast<int>(n.values.size()));
  for (size_t i = 0; i < n.values.size(); ++i)
    r.set(static_cast<int>(i), ((n.values[i] % 2) + 2) % 2 == 1);
  return r;
}

// Smallest c congruent to a mod k that is a unit mod m; one exists in every
// such residue class because gcd(a, k) = 1.
long long lift_unit(long long a, int k, int m) {
  for (long long c = a; c < a + 2LL * m * k; c += k)
    if (std::gcd(c, static_cast<long long>(m)) == 1) return c;
  throw std::logic_error("lift_unit: no unit found");
}

}  // namespace

std::vector<FPFunction> generator_inventory(const BasisPtr& basis) {
  std::vector<FPFunction> out;
  out.push_back(conj_action_data(basis));
  for (int i = 0; i < basis->size(); ++i) {
    const SubgroupClass& h = basis->pairs[i].subgroup;
    // Pair classes repeat subgroup classes; induce once per subgroup class.
    if (i > 0 && basis->pairs[i - 1].subgroup.label() == h.label()) continue;
    std::vector<Chirality> variants{Chirality::None};
    if (h.iso.family == Family::Icos)
      variants = {Chirality::Plus, Chirality::Minus};
    for (Chirality chi : variants) {
      BasisPtr h_basis = pair_class_basis(build_model(h.iso, chi));
      out.push_back(induce(basis, h, conj_action_data(h_basis)));
    }
  }
  if (basis->model.group.tag.family == Family::Dihedral) {
    int m = basis->model.group.tag.param;
    for (int k = 2; k <= m; ++k) {
      if (m % k != 0) continue;
      for (long long a = 1; 2 * a <= k; ++a) {
        if (std::gcd(a, static_cast<long long>(k)) != 1) continue;
        out.push_back(dihedral_sphere_data(basis, k, lift_unit(a, k, m)));
      }
    }
  }
  return out;
}

GeneratorSystem generator_matrix(const BasisPtr& basis) {
  GeneratorSystem sys;
  sys.inventory = generator_inventory(basis);
  sys.mod2 = BitMatrix(basis->size());
  for (size_t i = 0; i < sys.inventory.size(); ++i) {
    BitRow r = mod2_row(sys.inventory[i]);
    bool dup = false;
    for (const BitRow& prev : sys.mod2.rows)
      if (prev == r) {
        dup = true;
        break;
      }
    if (dup) continue;
    sys.mod2.append(std::move(r), sys.inventory[i].provenance);
    sys.row_source.push_back(static_cast<int>(i));
  }
  return sys;
}

int span_dim(const BitMatrix& m) { return m.rank(); }

std::vector<std::vector<std::string>> ConstraintSystem::as_labels(bool pretty) const {
  std::vector<std::vector<std::string>> out;
  for (const BitRow& r : rows.rows) {
    std::vector<std::string> terms;
    for (int i : r.support())
      terms.push_back(pretty ? basis->pairs[i].pretty : basis->pairs[i].label);
    out.push_back(std::move(terms));
  }
  return out;
}

std::string ConstraintSystem::render_text() const {
  std::string s;
  for (const auto& terms : as_labels(true)) {
    std::string line;
    for (const std::string& t : terms) {
      if (!line.empty()) line += " + ";
      line += t;
    }
    s += line + " == 0 (mod 2)\n";
  }
  return s;
}

ConstraintSystem constraints(const BasisPtr& basis) {
  GeneratorSystem sys = generator_matrix(basis);
  return ConstraintSystem{basis, sys.mod2.nullspace()};
}

namespace {

void check_same_basis(const BasisPtr& basis, const FPFunction& n) {
  if (n.basis.get() == basis.get()) return;
  if (!n.basis || n.basis->model.label() != basis->model.label() ||
      n.basis->size() != basis->size())
    throw std::invalid_argument("membership: datum is over a different basis");
}

}  // namespace

MembershipCertificate membership(const BasisPtr& basis, const FPFunction& n) {
  check_same_basis(basis, n);
  GeneratorSystem sys = generator_matrix(basis);
  // The generators provably span F/2A; a rank deficit would silently shrink
  // the reported F, so refuse to answer instead.
  Dims want = expected_dims(basis->model);
  if (sys.mod2.rank() != want.f_mod_2a)
    throw std::runtime_error("membership: generator span has unexpected rank " +
                             std::to_string(sys.mod2.rank()));

  MembershipCertificate cert;
  auto combo = sys.mod2.solve_combination(mod2_row(n));
  if (!combo) {
    cert.member = false;
    ConstraintSystem cs{basis, sys.mod2.nullspace()};
    for (const BitRow& c : cs.rows.rows)
      if (c.dot(mod2_row(n))) {
        cert.violated_constraint = c.support();
        return cert;
      }
    throw std::logic_error("membership: no violated constraint for a non-member");
  }
  cert.member = true;
  std::vector<long long> rest(n.values);
  for (int row : *combo) {
    int src = sys.row_source[row];
    cert.generator_rows.push_back(src);
    cert.generator_labels.push_back(sys.inventory[src].provenance);
    for (int i = 0; i < basis->size(); ++i) rest[i] -= sys.inventory[src].values[i];
  }
  cert.halves.resize(basis->size());
  for (int i = 0; i < basis->size(); ++i) {
    if (rest[i] % 2 != 0) throw std::logic_error("membership: odd residual");
    cert.halves[i] = rest[i] / 2;
  }
  return cert;
}

bool realizable(const BasisPtr& basis, const FPFunction& n) {
  return n.nonnegative() && membership(basis, n).member;
}

Dims dims(const BasisPtr& basis) {
  GeneratorSystem sys = generator_matrix(basis);
  int r = sys.mod2.rank();
  return Dims{basis->size() - r, r};
}

Dims expected_dims(const RotationModel& model) {
  switch (model.group.tag.family) {
    case Family::Dihedral: {
      int m = model.group.tag.param;
      return Dims{m / 2, m % 2 == 0 ? m / 4 : 0};
    }
    case Family::Tet: return Dims{1, 1};
    case Family::Oct: return Dims{3, 3};
    case Family::Icos: return Dims{4, 3};
    default:
      throw std::invalid_argument("expected_dims: unsupported group");
  }
}

bool certificate_reconstructs(const BasisPtr& basis, const FPFunction& n,
                              const MembershipCertificate& cert,
                              const std::vector<FPFunction>& inventory) {
  if (!cert.member) return false;
  std::vector<long long> sum(basis->size(), 0);
  for (int src : cert.generator_rows)
    for (int i = 0; i < basis->size(); ++i) sum[i] += inventory[src].values[i];
  for (int i = 0; i < basis->size(); ++i) sum[i] += 2 * cert.halves[i];
  return sum == n.values;
}

}  // namespace fpdata
