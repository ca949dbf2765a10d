#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpdata {

// Bit-packed vector over GF(2).
struct BitRow {
  int width = 0;
  std::vector<std::uint64_t> words;

  explicit BitRow(int w = 0) : width(w), words((w + 63) / 64, 0) {}

  bool get(int i) const { return (words[i / 64] >> (i % 64)) & 1; }
  void set(int i, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (i % 64);
    if (v)
      words[i / 64] |= mask;
    else
      words[i / 64] &= ~mask;
  }
  void operator^=(const BitRow& o) {
    for (size_t w = 0; w < words.size(); ++w) words[w] ^= o.words[w];
  }
  bool any() const {
    for (std::uint64_t w : words)
      if (w) return true;
    return false;
  }
  bool dot(const BitRow& o) const {
    std::uint64_t acc = 0;
    for (size_t w = 0; w < words.size(); ++w) acc ^= words[w] & o.words[w];
    return __builtin_parityll(acc);
  }
  int leading_bit() const {  // lowest set index, -1 if zero
    for (size_t w = 0; w < words.size(); ++w)
      if (words[w]) return static_cast<int>(w * 64 + __builtin_ctzll(words[w]));
    return -1;
  }
  std::vector<int> support() const;
  bool operator==(const BitRow&) const = default;
};

// Row list over GF(2) with provenance labels.
struct BitMatrix {
  int width = 0;
  std::vector<BitRow> rows;
  std::vector<std::string> labels;

  explicit BitMatrix(int w = 0) : width(w) {}
  int row_count() const { return static_cast<int>(rows.size()); }
  void append(BitRow r, std::string label = "");

  int rank() const;
  // Canonical reduced row echelon form: zero rows dropped, each pivot the
  // only set bit in its column, rows ordered by pivot. Identical spans give
  // byte-identical results.
  BitMatrix reduced_echelon() const;
  // Basis of {c : r . c = 0 for every row r}, in reduced echelon form.
  BitMatrix nullspace() const;
  // Indices of rows of *this* matrix summing to the target, if the target
  // lies in the row span.
  std::optional<std::vector<int>> solve_combination(const BitRow& target) const;

  bool same_span(const BitMatrix& o) const;
  bool operator==(const BitMatrix& o) const { return width == o.width && rows == o.rows; }
};

}  // namespace fpdata
