#pragma once

#include <cstdint>
#include <vector>

#include "jsyz/field.hpp"

namespace jsyz {

/// Dense row-major matrix over Q or GF(p).
template <class S>
class ExactMatrix {
 public:
  using field_type = field_t<S>;

  ExactMatrix() = default;
  ExactMatrix(field_type field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, field.zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const field_type& field() const { return field_; }
  S& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  static ExactMatrix identity(field_type field, int n) {
    ExactMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    std::vector<S> out(rows_, field_.zero());
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c)) && !is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  field_type field_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

/// Rank by exact elimination: fraction-free over Q, row reduction over GF(p).
int rank(const ExactMatrix<Rational>& m);
int rank(const ExactMatrix<ModP>& m);

/// Basis of {v : M v = 0} read off the reduced row echelon form: one vector
/// per non-pivot column j, with v[j] = 1 and zeros on the other free columns.
/// The basis is canonical for the column order.
std::vector<std::vector<Rational>> nullspace(const ExactMatrix<Rational>& m);
std::vector<std::vector<ModP>> nullspace(const ExactMatrix<ModP>& m);

/// Pivot columns of the reduced row echelon form.
std::vector<int> pivot_columns(const ExactMatrix<Rational>& m);
std::vector<int> pivot_columns(const ExactMatrix<ModP>& m);

Rational determinant(const ExactMatrix<Rational>& m);
ModP determinant(const ExactMatrix<ModP>& m);

/// Dense matrix of raw residues modulo one prime; the fast path behind the
/// GF(p) routines. Primes below 2^31 use 32-bit kernels with precomputed
/// quotients; larger primes fall back to 128-bit products.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int rows, int cols, std::uint64_t prime);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }
  std::uint64_t get(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, std::uint64_t v) { data_[static_cast<std::size_t>(r) * cols_ + c] = v % p_; }
  std::uint64_t* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  int rank() const;

  struct Rref {
    std::vector<int> pivots;
    std::vector<std::vector<std::uint64_t>> rows;  // one normalized row per pivot
  };
  Rref rref() const;
  std::vector<std::vector<std::uint64_t>> nullspace() const;
  std::uint64_t determinant() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Kernel basis (same canonical form as nullspace) derived from a reduced echelon form.
std::vector<std::vector<std::uint64_t>> kernel_from_rref(const ModMatrix::Rref& rref, int cols, std::uint64_t p);

}  // namespace jsyz
