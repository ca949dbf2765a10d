#pragma once

#include <string>
#include <vector>

#include "fpdata/geometry.hpp"

namespace fpdata {

enum class Family { Cyclic, Dihedral, Tet, Oct, Icos };

// Isomorphism type of a finite rotation group: the family plus its parameter
// (k for Cyclic(k), m for Dihedral(m); the Platonic families carry none).
struct FamilyTag {
  Family family = Family::Cyclic;
  int param = 1;

  bool operator==(const FamilyTag&) const = default;

  bool is_cyclic() const { return family == Family::Cyclic; }
  int group_order() const;
  std::string str() const;  // "Z6", "D4", "A4", "S4", "A5"
};

inline FamilyTag cyclic(int k) { return {Family::Cyclic, k}; }
inline FamilyTag dihedral(int m) { return {Family::Dihedral, m}; }
inline FamilyTag tet() { return {Family::Tet, 0}; }
inline FamilyTag oct() { return {Family::Oct, 0}; }
inline FamilyTag icos() { return {Family::Icos, 0}; }

// A finite group as an explicit multiplication table. Element ids run from 0
// to order-1 with 0 the identity. Dihedral tables are laid out with rotations
// r^j at ids 0..m-1 and reflections r^j*s at ids m..2m-1.
struct GroupTable {
  FamilyTag tag;
  int order = 1;
  std::vector<int> mul_table;   // order x order, row-major
  std::vector<int> inv_table;
  std::vector<int> ord_table;   // element orders

  int mul(int a, int b) const { return mul_table[a * order + b]; }
  int inv(int a) const { return inv_table[a]; }
  int order_of(int a) const { return ord_table[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
};

GroupTable build_group(FamilyTag tag);

// Table checks used by tests; exhaustive, only sensible for small orders.
bool is_associative(const GroupTable& g);
bool has_valid_identity_and_inverses(const GroupTable& g);

}  // namespace fpdata
