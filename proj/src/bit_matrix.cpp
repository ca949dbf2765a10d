#include "fpdata/bit_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpdata {

std::vector<int> BitRow::support() const {
  std::vector<int> s;
  for (int i = 0; i < width; ++i)
    if (get(i)) s.push_back(i);
  return s;
}

void BitMatrix::append(BitRow r, std::string label) {
  if (r.width != width) throw std::invalid_argument("BitMatrix: width mismatch");
  rows.push_back(std::move(r));
  labels.push_back(std::move(label));
}

namespace {

// Gaussian elimination; returns the echelon rows (pivot = lowest set bit,
// strictly increasing) discarding zero rows.
std::vector<BitRow> echelon(std::vector<BitRow> rows) {
  std::vector<BitRow> basis;  // kept sorted by leading bit
  for (BitRow& r : rows) {
    for (const BitRow& b : basis) {
      int lead = b.leading_bit();
      if (r.get(lead)) r ^= b;
    }
    if (r.any()) basis.push_back(std::move(r));
    std::sort(basis.begin(), basis.end(),
              [](const BitRow& a, const BitRow& b) { return a.leading_bit() < b.leading_bit(); });
  }
  return basis;
}

}  // namespace

int BitMatrix::rank() const { return static_cast<int>(echelon(rows).size()); }

BitMatrix BitMatrix::reduced_echelon() const {
  std::vector<BitRow> basis = echelon(rows);
  // Back-substitute so each pivot column is cleared everywhere else.
  for (int i = static_cast<int>(basis.size()) - 1; i >= 0; --i) {
    int lead = basis[i].leading_bit();
    for (int j = 0; j < i; ++j)
      if (basis[j].get(lead)) basis[j] ^= basis[i];
  }
  BitMatrix out(width);
  for (BitRow& r : basis) out.append(std::move(r));
  return out;
}

BitMatrix BitMatrix::nullspace() const {
  BitMatrix rref = reduced_echelon();
  std::vector<int> pivot_of_col(width, -1);
  for (int i = 0; i < rref.row_count(); ++i) pivot_of_col[rref.rows[i].leading_bit()] = i;
  BitMatrix out(width);
  for (int c = 0; c < width; ++c) {
    if (pivot_of_col[c] >= 0) continue;  // bound column
    BitRow v(width);
    v.set(c, true);
    for (int i = 0; i < rref.row_count(); ++i)
      if (rref.rows[i].get(c)) v.set(rref.rows[i].leading_bit(), true);
    out.append(std::move(v));
  }
  return out.reduced_echelon();
}

std::optional<std::vector<int>> BitMatrix::solve_combination(const BitRow& target) const {
  if (target.width != width) throw std::invalid_argument("solve_combination: width mismatch");
  // Eliminate while tracking the combination of original rows.
  int n = row_count();
  std::vector<BitRow> basis;
  std::vector<BitRow> combo;  // over row indices
  for (int i = 0; i < n; ++i) {
    BitRow r = rows[i];
    BitRow c(n);
    c.set(i, true);
    for (size_t b = 0; b < basis.size(); ++b) {
      int lead = basis[b].leading_bit();
      if (r.get(lead)) {
        r ^= basis[b];
        c ^= combo[b];
      }
    }
    if (!r.any()) continue;
    size_t pos = 0;
    while (pos < basis.size() && basis[pos].leading_bit() < r.leading_bit()) ++pos;
    basis.insert(basis.begin() + pos, std::move(r));
    combo.insert(combo.begin() + pos, std::move(c));
  }
  BitRow r = target;
  BitRow c(n);
  for (size_t b = 0; b < basis.size(); ++b) {
    int lead = basis[b].leading_bit();
    if (r.get(lead)) {
      r ^= basis[b];
      c ^= combo[b];
    }
  }
  if (r.any()) return std::nullopt;
  return c.support();
}

bool BitMatrix::same_span(const BitMatrix& o) const {
  return width == o.width && reduced_echelon() == o.reduced_echelon();
}

}  // namespace fpdata
