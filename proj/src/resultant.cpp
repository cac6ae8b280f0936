#include "jsyz/resultant.hpp"

#include <random>

#include "jsyz/matrix.hpp"

namespace jsyz {

namespace {

// Returns false when the extraneous minor vanishes.
template <class S>
bool macaulay_quotient(const std::array<const HomogPoly<S>*, 3>& p, S* out) {
  const auto F = p[0]->field();
  const int e[3] = {p[0]->degree(), p[1]->degree(), p[2]->degree()};
  const int D = e[0] + e[1] + e[2] - 2;
  const auto basis = monomial_basis(D);
  const int N = static_cast<int>(basis.size());
  ExactMatrix<S> M(F, N, N);
  std::vector<int> extraneous;
  for (int row = 0; row < N; ++row) {
    const Exponent& u = basis[row];
    int divisors = 0;
    int first = -1;
    for (int i = 0; i < 3; ++i) {
      if (u[i] >= e[i]) {
        ++divisors;
        if (first < 0) first = i;
      }
    }
    if (divisors >= 2) extraneous.push_back(row);
    Exponent shift = u;
    (first == 0 ? shift.x : first == 1 ? shift.y : shift.z) -= e[first];
    for (const auto& [mono, c] : p[first]->terms()) M(row, static_cast<int>(monomial_index(mono + shift))) = c;
  }
  const S num = determinant(M);
  S den = F.one();
  if (!extraneous.empty()) {
    const int n = static_cast<int>(extraneous.size());
    ExactMatrix<S> Mp(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Mp(i, j) = M(extraneous[i], extraneous[j]);
    den = determinant(Mp);
  }
  if (is_zero(den)) return false;
  *out = num / den;
  return true;
}

}  // namespace

template <class S>
LinearMap<S> random_unimodular(const field_t<S>& field, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::uniform_int_distribution<int> idx(0, 2);
  LinearMap<S> A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A[i][j] = i == j ? field.one() : field.zero();
  for (int step = 0; step < 6; ++step) {
    const int i = idx(rng);
    int j = idx(rng);
    if (j == i) j = (i + 1) % 3;
    const S c = field.from_int(coef(rng));
    // row_i += c * row_j
    for (int k = 0; k < 3; ++k) A[i][k] += c * A[j][k];
  }
  return A;
}

template <class S>
S macaulay_resultant(const HomogPoly<S>& p1, const HomogPoly<S>& p2, const HomogPoly<S>& p3, std::uint64_t seed,
                     int max_retries) {
  if (p1.is_zero() || p2.is_zero() || p3.is_zero()) throw InputError("Macaulay resultant of a zero form");
  S value;
  if (macaulay_quotient<S>({&p1, &p2, &p3}, &value)) return value;
  const auto F = p1.field();
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const auto A = random_unimodular<S>(F, seed * 7919 + static_cast<std::uint64_t>(attempt), 3 + attempt);
    const auto q1 = substitute_linear(p1, A), q2 = substitute_linear(p2, A), q3 = substitute_linear(p3, A);
    if (macaulay_quotient<S>({&q1, &q2, &q3}, &value)) return value;
  }
  throw InconsistencyError("Macaulay resultant: extraneous minor vanished after every coordinate change");
}

template Rational macaulay_resultant(const QPoly&, const QPoly&, const QPoly&, std::uint64_t, int);
template ModP macaulay_resultant(const PPoly&, const PPoly&, const PPoly&, std::uint64_t, int);
template LinearMap<Rational> random_unimodular<Rational>(const RationalField&, std::uint64_t, int);
template LinearMap<ModP> random_unimodular<ModP>(const PrimeField&, std::uint64_t, int);

}  // namespace jsyz
