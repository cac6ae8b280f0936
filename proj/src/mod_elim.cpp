// Row reduction over GF(p). This file carries the hot loops and is compiled
// with host tuning (see src/CMakeLists.txt).

#include <algorithm>
#include <utility>

#include "jsyz/matrix.hpp"

namespace jsyz {

namespace {

// row[j] += c * piv[j] (mod p) for j in [0, n); all values in [0, p), p < 2^31.
void axpy32(std::uint32_t* __restrict row, const std::uint32_t* __restrict piv, std::size_t n, std::uint32_t c,
            std::uint32_t p) {
  const std::uint32_t cq = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t x = piv[j];
    const std::uint32_t q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * cq) >> 32);
    std::uint32_t r = x * c - q * p;
    r = r >= p ? r - p : r;
    std::uint32_t t = row[j] + r;
    t = t >= p ? t - p : t;
    row[j] = t;
  }
}

void scale32(std::uint32_t* row, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(row[j]) * c % p);
}

void axpy64(std::uint64_t* row, const std::uint64_t* piv, std::size_t n, std::uint64_t c, std::uint64_t p) {
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t t = row[j] + detail::mulmod(piv[j], c, p);
    row[j] = t >= p ? t - p : t;
  }
}

void scale64(std::uint64_t* row, std::size_t n, std::uint64_t c, std::uint64_t p) {
  for (std::size_t j = 0; j < n; ++j) row[j] = detail::mulmod(row[j], c, p);
}

template <class W>
struct Kernels;
template <>
struct Kernels<std::uint32_t> {
  static void axpy(std::uint32_t* row, const std::uint32_t* piv, std::size_t n, std::uint64_t c, std::uint64_t p) {
    axpy32(row, piv, n, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(p));
  }
  static void scale(std::uint32_t* row, std::size_t n, std::uint64_t c, std::uint64_t p) {
    scale32(row, n, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(p));
  }
};
template <>
struct Kernels<std::uint64_t> {
  static void axpy(std::uint64_t* row, const std::uint64_t* piv, std::size_t n, std::uint64_t c, std::uint64_t p) {
    axpy64(row, piv, n, c, p);
  }
  static void scale(std::uint64_t* row, std::size_t n, std::uint64_t c, std::uint64_t p) { scale64(row, n, c, p); }
};

// Gaussian elimination on row pointers. With `full`, rows above each pivot are
// cleared too (reduced echelon form). Returns pivot columns; the first
// pivots.size() entries of `rows` are then the echelon rows, each with a
// leading 1. `sign` tracks row swaps for determinants.
template <class W>
std::vector<int> eliminate(std::vector<W*>& rows, int cols, std::uint64_t p, bool full, bool* odd_swaps = nullptr) {
  std::vector<int> pivots;
  const int nrows = static_cast<int>(rows.size());
  int rank = 0;
  bool odd = false;
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int found = -1;
    for (int r = rank; r < nrows; ++r) {
      if (rows[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != rank) {
      std::swap(rows[found], rows[rank]);
      odd = !odd;
    }
    W* piv = rows[rank];
    const std::size_t len = static_cast<std::size_t>(cols - col);
    if (piv[col] != 1) Kernels<W>::scale(piv + col, len, invmod(piv[col], p), p);
    const int first = full ? 0 : rank + 1;
    for (int r = first; r < nrows; ++r) {
      if (r == rank) continue;
      W* row = rows[r];
      const std::uint64_t a = row[col];
      if (a == 0) continue;
      Kernels<W>::axpy(row + col, piv + col, len, p - a, p);
    }
    pivots.push_back(col);
    ++rank;
  }
  if (odd_swaps) *odd_swaps = odd;
  return pivots;
}

template <class W, class F>
auto with_buffer(const std::vector<std::uint64_t>& data, int rows, int cols, F&& fn) {
  std::vector<W> buf(data.begin(), data.end());
  std::vector<W*> ptrs(rows);
  for (int r = 0; r < rows; ++r) ptrs[r] = buf.data() + static_cast<std::size_t>(r) * cols;
  return fn(ptrs);
}

bool small_prime(std::uint64_t p) { return p < (std::uint64_t{1} << 31); }

}  // namespace

ModMatrix::ModMatrix(int rows, int cols, std::uint64_t prime)
    : rows_(rows), cols_(cols), p_(prime), data_(static_cast<std::size_t>(rows) * cols, 0) {}

int ModMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  auto run = [&](auto& ptrs) { return static_cast<int>(eliminate(ptrs, cols_, p_, false).size()); };
  if (small_prime(p_)) return with_buffer<std::uint32_t>(data_, rows_, cols_, run);
  return with_buffer<std::uint64_t>(data_, rows_, cols_, run);
}

ModMatrix::Rref ModMatrix::rref() const {
  Rref out;
  if (rows_ == 0 || cols_ == 0) return out;
  auto run = [&](auto& ptrs) {
    out.pivots = eliminate(ptrs, cols_, p_, true);
    for (std::size_t i = 0; i < out.pivots.size(); ++i) out.rows.emplace_back(ptrs[i], ptrs[i] + cols_);
    return 0;
  };
  if (small_prime(p_))
    with_buffer<std::uint32_t>(data_, rows_, cols_, run);
  else
    with_buffer<std::uint64_t>(data_, rows_, cols_, run);
  return out;
}

std::vector<std::vector<std::uint64_t>> kernel_from_rref(const ModMatrix::Rref& rref, int cols, std::uint64_t p) {
  std::vector<char> is_pivot(cols, 0);
  for (int c : rref.pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> basis;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < rref.pivots.size(); ++i) {
      std::uint64_t a = rref.rows[i][j];
      v[rref.pivots[i]] = a == 0 ? 0 : p - a;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<std::uint64_t>> ModMatrix::nullspace() const {
  if (cols_ == 0) return {};
  return kernel_from_rref(rref(), cols_, p_);
}

std::uint64_t ModMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ == 0) return 1 % p_;
  // reduce a copy without normalizing away the pivots: track the scale factors
  std::vector<std::uint64_t> buf = data_;
  std::vector<std::uint64_t*> ptrs(rows_);
  for (int r = 0; r < rows_; ++r) ptrs[r] = buf.data() + static_cast<std::size_t>(r) * cols_;
  std::uint64_t det = 1;
  for (int col = 0; col < cols_; ++col) {
    int found = -1;
    for (int r = col; r < rows_; ++r) {
      if (ptrs[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) return 0;
    if (found != col) {
      std::swap(ptrs[found], ptrs[col]);
      det = det == 0 ? 0 : p_ - det;
    }
    std::uint64_t* piv = ptrs[col];
    det = detail::mulmod(det, piv[col], p_);
    const std::uint64_t inv = invmod(piv[col], p_);
    for (int r = col + 1; r < rows_; ++r) {
      std::uint64_t a = ptrs[r][col];
      if (a == 0) continue;
      std::uint64_t c = detail::mulmod(a, inv, p_);
      axpy64(ptrs[r] + col, piv + col, static_cast<std::size_t>(cols_ - col), p_ - c, p_);
    }
  }
  return det;
}

}  // namespace jsyz
