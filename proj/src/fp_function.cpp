#include "fpdata/fp_function.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fpdata {

long long FPFunction::total() const {
  return std::accumulate(values.begin(), values.end(), 0LL);
}

long long FPFunction::at_label(const std::string& label) const {
  int idx = basis->index_of(label);
  if (idx < 0) throw std::invalid_argument("FPFunction: unknown pair " + label);
  return values[idx];
}

bool FPFunction::nonnegative() const {
  return std::all_of(values.begin(), values.end(), [](long long v) { return v >= 0; });
}

FPFunction zero_function(BasisPtr basis, std::string provenance) {
  FPFunction n;
  n.values.assign(basis->size(), 0);
  n.basis = std::move(basis);
  n.provenance = std::move(provenance);
  return n;
}

FPFunction conj_action_data(const BasisPtr& basis) {
  const RotationModel& md = basis->model;
  const GroupTable& t = md.group;
  if (t.tag.is_cyclic()) throw std::domain_error("conj_action_data: cyclic group");
  FPFunction n = zero_function(basis, "conj");

  ElementSet whole = whole_group(t);
  n.values[classify_pair(*basis, whole, standard_rep_class(md, whole))] += 1;

  // Orbits of undirected axes.
  std::vector<int> root(md.axis_count);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int g = 0; g < t.order; ++g)
    for (int a = 0; a < md.axis_count; ++a) {
      int x = find(a), y = find(md.act_axis(g, a));
      if (x != y) root[std::max(x, y)] = std::min(x, y);
    }

  for (int axis = 0; axis < md.axis_count; ++axis) {
    if (find(axis) != axis) continue;  // one representative per orbit
    // Centralizer of the half-turn about this axis.
    ElementSet c{0};
    for (int e = 1; e < t.order; ++e) {
      if (md.axis_of(e) == axis)
        c.push_back(e);
      else if (md.turn_of(e).is_half() && md.perp(md.axis_of(e), axis))
        c.push_back(e);
    }
    std::sort(c.begin(), c.end());
    if (!is_subgroup(t, c))
      throw std::logic_error("conj_action_data: centralizer set is not a subgroup");
    if (iso_type_of(t, c).is_cyclic()) continue;
    n.values[classify_pair(*basis, c, standard_rep_class(md, c))] += 1;
  }
  return n;
}

namespace {

// Deterministic isomorphism from the abstract table onto the subgroup k_set
// of g: identity when k_set is the whole group of the same family, otherwise
// the first candidate found by mapping a canonical generating pair.
std::vector<int> find_isomorphism(const GroupTable& a, const GroupTable& g,
                                  const ElementSet& k_set) {
  int n = a.order;
  if (static_cast<int>(k_set.size()) != n)
    throw std::invalid_argument("find_isomorphism: size mismatch");
  if (n == g.order && a.tag == g.tag) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  // Canonical generating pair of the abstract group.
  int gx = -1, gy = -1;
  for (int x = 0; x < n && gx < 0; ++x)
    for (int y = x; y < n; ++y)
      if (static_cast<int>(closure(a, {x, y}).size()) == n) {
        gx = x;
        gy = y;
        break;
      }
  if (gx < 0) throw std::logic_error("find_isomorphism: group is not 2-generated");

  // Express every abstract element as a word in the generators.
  std::vector<int> parent(n, -1), via(n, -1), bfs;
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  bfs.push_back(0);
  for (size_t i = 0; i < bfs.size(); ++i)
    for (int which = 0; which < 2; ++which) {
      int e = a.mul(bfs[i], which == 0 ? gx : gy);
      if (!seen[e]) {
        seen[e] = 1;
        parent[e] = bfs[i];
        via[e] = which;
        bfs.push_back(e);
      }
    }

  std::vector<char> in_k(g.order, 0);
  for (int e : k_set) in_k[e] = 1;
  std::vector<int> phi(n, -1);
  for (int px : k_set) {
    if (g.order_of(px) != a.order_of(gx)) continue;
    for (int py : k_set) {
      if (g.order_of(py) != a.order_of(gy)) continue;
      phi.assign(n, -1);
      phi[0] = 0;
      for (size_t i = 1; i < bfs.size(); ++i) {
        int e = bfs[i];
        phi[e] = g.mul(phi[parent[e]], via[e] == 0 ? px : py);
      }
      std::vector<char> hit(g.order, 0);
      bool ok = true;
      for (int e = 0; e < n && ok; ++e) {
        if (!in_k[phi[e]] || hit[phi[e]]) ok = false;
        hit[phi[e]] = 1;
      }
      for (int p = 0; p < n && ok; ++p)
        for (int q = 0; q < n; ++q)
          if (phi[a.mul(p, q)] != g.mul(phi[p], phi[q])) {
            ok = false;
            break;
          }
      if (ok) return phi;
    }
  }
  throw std::invalid_argument("find_isomorphism: subgroup is not isomorphic to the table");
}

}  // namespace

FPFunction induce(const BasisPtr& g_basis, const SubgroupClass& h, const FPFunction& n_h) {
  const GroupTable& g = g_basis->model.group;
  const GroupTable& a = n_h.basis->model.group;
  if (!(a.tag == h.iso))
    throw std::invalid_argument("induce: datum basis does not match the subgroup type");
  std::vector<int> phi = find_isomorphism(a, g, h.representative);

  std::string prov = "ind(" + h.label();
  if (h.iso.family == Family::Icos)
    prov += n_h.basis->model.chirality == Chirality::Plus ? ",+" : ",-";
  prov += ")";
  FPFunction out = zero_function(g_basis, prov);

  for (int idx = 0; idx < n_h.basis->size(); ++idx) {
    long long v = n_h.values[idx];
    if (v == 0) continue;
    const PairClass& pc = n_h.basis->pairs[idx];
    ElementSet k_img;
    k_img.reserve(pc.subgroup.representative.size());
    for (int e : pc.subgroup.representative) k_img.push_back(phi[e]);
    std::sort(k_img.begin(), k_img.end());
    RepClass f_img{pc.rep.subject, AngleMap{}, ""};
    for (const auto& [e, turn] : pc.rep.angles) f_img.angles.emplace_back(phi[e], turn);
    std::sort(f_img.angles.begin(), f_img.angles.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.values[classify_pair(*g_basis, k_img, f_img)] += v;
  }
  return out;
}

namespace {

void check_sphere_params(const GroupTable& t, int k, long long c) {
  if (t.tag.family != Family::Dihedral)
    throw std::invalid_argument("sphere action: dihedral groups only");
  int m = t.tag.param;
  if (k < 2 || m % k != 0)
    throw std::invalid_argument("sphere action: k must divide m and be >= 2");
  if (std::gcd(c, static_cast<long long>(m)) != 1)
    throw std::invalid_argument("sphere action: c must be a unit mod m");
}

}  // namespace

FPFunction dihedral_sphere_data(const BasisPtr& basis, int k, long long c) {
  check_sphere_params(basis->model.group, k, c);
  int m = basis->model.group.tag.param;
  std::string rep = k == 2 ? "std" : Turn::of(c, k).str();
  FPFunction n = zero_function(
      basis, "sphere(k=" + std::to_string(k) + ",c=" + std::to_string(c) + ")");
  std::string sub = "D" + std::to_string(k);
  if ((m / k) % 2 == 0) {
    n.values[basis->index_of(sub + "u:" + rep)] = 1;
    n.values[basis->index_of(sub + "d:" + rep)] = 1;
  } else {
    n.values[basis->index_of(sub + ":" + rep)] = 2;
  }
  return n;
}

namespace {

// Action of the dihedral group on angular positions of the core circle: the
// rotation generator advances a position by k/m of a revolution, reflections
// negate and shift.
Rational circle_act(int m, int k, int g, const Rational& pos) {
  if (g < m) return (pos + Rational(static_cast<long long>(k) * g, m)).mod1();
  return (Rational(static_cast<long long>(k) * (g - m), m) - pos).mod1();
}

}  // namespace

std::vector<SpherePoint> sphere_action_oracle(const BasisPtr& basis, int k, long long c) {
  const GroupTable& t = basis->model.group;
  check_sphere_params(t, k, c);
  int m = t.tag.param;

  // Candidate points: fixed points of each reflection, the two solutions of
  // z^2 = e^(2 pi i k i/m).
  std::set<Rational> candidates;
  for (int i = 0; i < m; ++i) {
    Rational half(static_cast<long long>(k) * i, 2LL * m);
    candidates.insert(half.mod1());
    candidates.insert((half + Rational(1, 2)).mod1());
  }

  std::vector<SpherePoint> points;
  for (const Rational& pos : candidates) {
    ElementSet stab;
    for (int g = 0; g < t.order; ++g)
      if (circle_act(m, k, g, pos) == pos) stab.push_back(g);
    if (iso_type_of(t, stab).is_cyclic()) continue;
    SpherePoint sp;
    sp.position = pos;
    sp.stabilizer = std::move(stab);
    // Tangent representation: the rotation r^j spins the normal plane by
    // c j / m of a revolution; reflections act as half-turns.
    RepClass f{iso_type_of(t, sp.stabilizer), AngleMap{}, ""};
    for (int e : sp.stabilizer)
      f.angles.emplace_back(e, e < m ? Turn::of(c * e, m) : Turn::of(1, 2));
    sp.tangent_rep = std::move(f);
    sp.pair_index = classify_pair(*basis, sp.stabilizer, sp.tangent_rep);
    points.push_back(std::move(sp));
  }
  return points;
}

FPFunction sphere_oracle_data(const BasisPtr& basis, int k, long long c) {
  std::vector<SpherePoint> points = sphere_action_oracle(basis, k, c);
  const GroupTable& t = basis->model.group;
  int m = t.tag.param;
  FPFunction n = zero_function(
      basis, "oracle(k=" + std::to_string(k) + ",c=" + std::to_string(c) + ")");

  // Explicit orbit count on the circle, independent of any closed form.
  std::map<Rational, int> index_of_pos;
  for (size_t i = 0; i < points.size(); ++i) index_of_pos.emplace(points[i].position, i);
  std::vector<char> visited(points.size(), 0);
  for (size_t i = 0; i < points.size(); ++i) {
    if (visited[i]) continue;
    std::vector<size_t> orbit{i};
    visited[i] = 1;
    for (size_t j = 0; j < orbit.size(); ++j)
      for (int g = 0; g < t.order; ++g) {
        Rational q = circle_act(m, k, g, points[orbit[j]].position);
        auto it = index_of_pos.find(q);
        if (it == index_of_pos.end())
          throw std::logic_error("sphere_oracle_data: orbit leaves the point set");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          orbit.push_back(it->second);
        }
      }
    int idx = points[i].pair_index;
    for (size_t j : orbit)
      if (points[j].pair_index != idx)
        throw std::logic_error("sphere_oracle_data: inconsistent types along an orbit");
    n.values[idx] += 1;
  }
  return n;
}

FPFunction double_unit(const BasisPtr& basis, int index) {
  if (index < 0 || index >= basis->size())
    throw std::invalid_argument("double_unit: index out of range");
  FPFunction n = zero_function(basis, "2e[" + basis->pairs[index].label + "]");
  n.values[index] = 2;
  return n;
}

std::vector<std::pair<std::string, long long>> aggregate_by_subgroup(const FPFunction& n) {
  std::vector<std::pair<std::string, long long>> out;
  for (int i = 0; i < n.basis->size(); ++i) {
    std::string sub = n.basis->pairs[i].subgroup.label();
    if (out.empty() || out.back().first != sub)
      out.emplace_back(sub, 0);
    out.back().second += n.values[i];
  }
  return out;
}

nlohmann::json fp_to_json(const FPFunction& n) {
  nlohmann::json values = nlohmann::json::array();
  for (int i = 0; i < n.basis->size(); ++i)
    if (n.values[i] != 0)
      values.push_back({{"pair", n.basis->pairs[i].label}, {"count", n.values[i]}});
  return {{"group", n.basis->model.label()}, {"values", values}};
}

FPFunction fp_from_json(const BasisPtr& basis, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("values"))
    throw std::invalid_argument("fp_from_json: expected {group, values}");
  if (!j["group"].is_string() || j["group"].get<std::string>() != basis->model.label())
    throw std::invalid_argument("fp_from_json: group label does not match");
  if (!j["values"].is_array())
    throw std::invalid_argument("fp_from_json: values must be an array");
  FPFunction n = zero_function(basis, "file");
  std::set<int> seen;
  for (const auto& entry : j["values"]) {
    if (!entry.is_object() || !entry.contains("pair") || !entry.contains("count") ||
        !entry["pair"].is_string() || !entry["count"].is_number_integer())
      throw std::invalid_argument("fp_from_json: bad value entry");
    int idx = basis->index_of(entry["pair"].get<std::string>());
    if (idx < 0)
      throw std::invalid_argument("fp_from_json: unknown pair " +
                                  entry["pair"].get<std::string>());
    if (!seen.insert(idx).second)
      throw std::invalid_argument("fp_from_json: duplicate pair " +
                                  entry["pair"].get<std::string>());
    n.values[idx] = entry["count"].get<long long>();
  }
  return n;
}

}  // namespace fpdata
