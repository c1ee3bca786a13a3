#include "coxeter2d/gf2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace coxeter2d {

namespace {

void check_dim(int n) {
  if (n < 1 || n > GF2Matrix::kMaxDim) {
    throw std::invalid_argument("GF2Matrix: dimension must be in [1, 32], got " +
                                std::to_string(n));
  }
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

GF2Matrix::GF2Matrix(int n) : n_(n) { check_dim(n); }

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = 1u << i;
  return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  check_dim(n);
  GF2Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("GF2Matrix::from_rows: matrix must be square");
    }
    for (int j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) {
        throw std::invalid_argument("GF2Matrix::from_rows: entries must be 0 or 1");
      }
      if (v) m.rows_[i] |= 1u << j;
    }
  }
  return m;
}

GF2Matrix GF2Matrix::from_row_bits(int n, const std::vector<uint32_t>& rows) {
  check_dim(n);
  if (static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("GF2Matrix::from_row_bits: expected " +
                                std::to_string(n) + " rows");
  }
  const uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1u);
  GF2Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~mask) {
      throw std::invalid_argument("GF2Matrix::from_row_bits: bits beyond the dimension");
    }
    m.rows_[i] = rows[i];
  }
  return m;
}

bool GF2Matrix::get(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("GF2Matrix::get: index out of range");
  }
  return (rows_[i - 1] >> (j - 1)) & 1u;
}

void GF2Matrix::set(int i, int j, bool value) {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("GF2Matrix::set: index out of range");
  }
  const uint32_t bit = 1u << (j - 1);
  if (value) {
    rows_[i - 1] |= bit;
  } else {
    rows_[i - 1] &= ~bit;
  }
}

uint32_t GF2Matrix::row_bits(int i) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("GF2Matrix::row_bits: index out of range");
  }
  return rows_[i - 1];
}

GF2Matrix GF2Matrix::transposed() const {
  GF2Matrix t(n_);
  for (int i = 0; i < n_; ++i) {
    uint32_t bits = rows_[i];
    while (bits) {
      const int j = std::countr_zero(bits);
      bits &= bits - 1;
      t.rows_[j] |= 1u << i;
    }
  }
  return t;
}

std::vector<std::vector<int>> GF2Matrix::to_rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_, 0));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i][j] = (rows_[i] >> j) & 1u;
  }
  return out;
}

std::string GF2Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) os << ((rows_[i] >> j) & 1u);
    if (i + 1 < n_) os << '\n';
  }
  return os.str();
}

size_t GF2Matrix::hash() const {
  uint64_t h = static_cast<uint64_t>(n_);
  for (int i = 0; i < n_; ++i) h = splitmix64(h ^ rows_[i]);
  return static_cast<size_t>(h);
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.n_ != b.n_) {
    throw std::invalid_argument("GF2Matrix: dimension mismatch in product");
  }
  GF2Matrix c(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    uint32_t bits = a.rows_[i];
    uint32_t acc = 0;
    while (bits) {
      acc ^= b.rows_[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    c.rows_[i] = acc;
  }
  return c;
}

GF2Matrix mat_mul(const GF2Matrix& a, const GF2Matrix& b) { return a * b; }

bool is_invertible(const GF2Matrix& a) {
  const int n = a.dim();
  std::array<uint32_t, GF2Matrix::kMaxDim> rows;
  for (int i = 0; i < n; ++i) rows[i] = a.row_bits(i + 1);
  for (int col = 0; col < n; ++col) {
    const uint32_t bit = 1u << col;
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(rows[col], rows[pivot]);
    for (int r = col + 1; r < n; ++r) {
      if (rows[r] & bit) rows[r] ^= rows[col];
    }
  }
  return true;
}

GF2Matrix elementary(int n, int i, int j) {
  check_dim(n);
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::out_of_range("elementary: index out of range");
  }
  if (i == j) {
    throw std::invalid_argument("elementary: diagonal position rejected, need i != j");
  }
  GF2Matrix m = GF2Matrix::identity(n);
  m.set(i, j, true);
  return m;
}

BigInt gl_order(int k) {
  if (k < 0) throw std::invalid_argument("gl_order: negative dimension");
  BigInt result = 1;
  const BigInt two_k = BigInt(1) << k;
  for (int i = 0; i < k; ++i) result *= two_k - (BigInt(1) << i);
  return result;
}

}  // namespace coxeter2d
