#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coxeter2d/bigint.hpp"

namespace coxeter2d {

// Square bit-matrix over the two-element field. Each row is packed into one
// 32-bit word, so the dimension is capped at 32; the whole matrix fits in a
// handful of machine words, which keeps multiplication at O(n^2/w) and makes
// values cheap to hash and compare. Padding bits are always zero, so equal
// matrices are bitwise-equal.
//
// Row/column indices in the public interface are 1-based.
class GF2Matrix {
 public:
  static constexpr int kMaxDim = 32;

  // Zero matrix of dimension n, 1 <= n <= 32.
  explicit GF2Matrix(int n);

  static GF2Matrix identity(int n);

  // Row-major list of 0/1 entries; must be square and within the cap.
  static GF2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  // Rows given as packed words, bit j-1 of word i-1 holding entry (i, j).
  static GF2Matrix from_row_bits(int n, const std::vector<uint32_t>& rows);

  int dim() const { return n_; }

  bool get(int i, int j) const;
  void set(int i, int j, bool value);

  // Packed bits of row i (1-based).
  uint32_t row_bits(int i) const;

  GF2Matrix transposed() const;

  std::vector<std::vector<int>> to_rows() const;
  std::string str() const;

  size_t hash() const;

  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;
  friend auto operator<=>(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  int n_;
  std::array<uint32_t, kMaxDim> rows_{};
};

struct GF2MatrixHash {
  size_t operator()(const GF2Matrix& m) const { return m.hash(); }
};

// Exact product over F_2; dimensions must match.
GF2Matrix mat_mul(const GF2Matrix& a, const GF2Matrix& b);

// True iff the rank over F_2 equals the dimension (Gaussian elimination).
bool is_invertible(const GF2Matrix& a);

// I_n + E_{i,j}: the elementary row-addition matrix with an extra 1 in row i,
// column j. Requires i != j.
GF2Matrix elementary(int n, int i, int j);

// |GL_k(F_2)| = prod_{i=0}^{k-1} (2^k - 2^i); gl_order(0) = 1.
BigInt gl_order(int k);

}  // namespace coxeter2d
