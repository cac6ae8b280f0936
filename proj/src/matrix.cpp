#include "jsyz/matrix.hpp"

#include <utility>

namespace jsyz {

namespace {

struct Bareiss {
  std::vector<std::vector<Integer>> rows;
  std::vector<int> pivots;
  bool odd_swaps = false;
  Integer row_scale = 1;  // product of the per-row denominator clearings
};

// Fraction-free elimination: after k pivots every entry below is a (k+1)-minor
// of the original matrix, so each division by the previous pivot is exact.
Bareiss bareiss(const ExactMatrix<Rational>& m) {
  Bareiss b;
  const int n = m.rows();
  const int cols = m.cols();
  b.rows.assign(n, std::vector<Integer>(cols));
  for (int r = 0; r < n; ++r) {
    Integer den = 1;
    for (int c = 0; c < cols; ++c) den = lcm(den, Integer(m(r, c).get_den()));
    for (int c = 0; c < cols; ++c) {
      Rational scaled = m(r, c) * den;
      b.rows[r][c] = scaled.get_num();
    }
    b.row_scale *= den;
  }
  Integer prev = 1;
  int rank = 0;
  Integer t;
  for (int col = 0; col < cols && rank < n; ++col) {
    int found = -1;
    for (int r = rank; r < n; ++r) {
      if (sgn(b.rows[r][col]) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != rank) {
      std::swap(b.rows[found], b.rows[rank]);
      b.odd_swaps = !b.odd_swaps;
    }
    const auto& piv = b.rows[rank];
    for (int r = rank + 1; r < n; ++r) {
      auto& row = b.rows[r];
      const Integer a = row[col];
      for (int c = col + 1; c < cols; ++c) {
        t = piv[col] * row[c];
        if (sgn(a) != 0) t -= a * piv[c];
        mpz_divexact(row[c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = piv[col];
    b.pivots.push_back(col);
    ++rank;
  }
  b.rows.resize(rank);
  return b;
}

std::pair<std::vector<int>, std::vector<std::vector<Rational>>> rational_rref(const ExactMatrix<Rational>& m) {
  Bareiss b = bareiss(m);
  const int rank = static_cast<int>(b.pivots.size());
  std::vector<std::vector<Rational>> rows(rank);
  for (int i = 0; i < rank; ++i) {
    rows[i].resize(m.cols());
    for (int c = 0; c < m.cols(); ++c) rows[i][c] = Rational(b.rows[i][c]);
  }
  for (int i = rank - 1; i >= 0; --i) {
    const int pc = b.pivots[i];
    const Rational inv = 1 / rows[i][pc];
    for (int c = pc; c < m.cols(); ++c) {
      if (sgn(rows[i][c]) != 0) rows[i][c] *= inv;
    }
    for (int k = 0; k < i; ++k) {
      const Rational a = rows[k][pc];
      if (sgn(a) == 0) continue;
      for (int c = pc; c < m.cols(); ++c) {
        if (sgn(rows[i][c]) != 0) rows[k][c] -= a * rows[i][c];
      }
    }
  }
  return {b.pivots, std::move(rows)};
}

ModMatrix to_mod(const ExactMatrix<ModP>& m) {
  const std::uint64_t p = m.field().prime();
  ModMatrix out(m.rows(), m.cols(), p);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.set(r, c, m(r, c).v);
  return out;
}

}  // namespace

int rank(const ExactMatrix<Rational>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(bareiss(m).pivots.size());
}

int rank(const ExactMatrix<ModP>& m) {
  return to_mod(m).rank();
}

std::vector<int> pivot_columns(const ExactMatrix<Rational>& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  return bareiss(m).pivots;
}

std::vector<int> pivot_columns(const ExactMatrix<ModP>& m) {
  return to_mod(m).rref().pivots;
}

std::vector<std::vector<Rational>> nullspace(const ExactMatrix<Rational>& m) {
  const int cols = m.cols();
  std::vector<std::vector<Rational>> basis;
  if (cols == 0) return basis;
  std::vector<int> pivots;
  std::vector<std::vector<Rational>> rows;
  if (m.rows() > 0) std::tie(pivots, rows) = rational_rref(m);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(cols);
    v[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<ModP>> nullspace(const ExactMatrix<ModP>& m) {
  const std::uint64_t p = m.field().prime();
  std::vector<std::vector<ModP>> out;
  if (m.cols() == 0) return out;
  std::vector<std::vector<std::uint64_t>> raw;
  if (m.rows() == 0) {
    ModMatrix::Rref empty;
    raw = kernel_from_rref(empty, m.cols(), p);
  } else {
    raw = to_mod(m).nullspace();
  }
  for (const auto& v : raw) {
    std::vector<ModP> w;
    w.reserve(v.size());
    for (auto x : v) w.emplace_back(x, p);
    out.push_back(std::move(w));
  }
  return out;
}

Rational determinant(const ExactMatrix<Rational>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Bareiss b = bareiss(m);
  if (static_cast<int>(b.pivots.size()) < m.rows()) return 0;
  Rational det(b.rows.back().back());
  det /= Rational(b.row_scale);
  return b.odd_swaps ? Rational(-det) : det;
}

ModP determinant(const ExactMatrix<ModP>& m) {
  return ModP(to_mod(m).determinant(), m.field().prime());
}

}  // namespace jsyz
