#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jsyz/homog_poly.hpp"
#include "jsyz/matrix.hpp"

namespace jsyz {

/// How linear algebra over Q is carried out.
///
/// In modular mode (the default) ranks of rational matrices are computed
/// modulo `prime_count` pseudo-random primes in (2^30, 2^31) drawn from
/// `seed`; the ranks must agree or an InconsistencyError is raised. Kernels
/// are lifted from several primes by Chinese remaindering and rational
/// reconstruction, then checked exactly over Q. In exact mode everything runs
/// through fraction-free rational elimination. Inputs over GF(p) ignore the
/// backend and are reduced directly in their own field.
struct Backend {
  bool exact = false;
  int prime_count = 3;
  std::uint64_t seed = 1;

  static Backend modular(int primes = 3, std::uint64_t seed = 1) { return Backend{false, primes, seed}; }
  static Backend rational() { return Backend{true, 3, 1}; }

  /// i-th prime of the stream; distinct for distinct i.
  std::uint64_t prime(int i) const;
  /// The voting primes, prime(0) .. prime(prime_count - 1).
  std::vector<std::uint64_t> voting_primes() const;
  std::string name() const { return exact ? "rational" : "modular"; }
};

/// The graded linear map (m_1, ..., m_s) -> m_1 g_1 + ... + m_s g_s from
/// S_{n-e_1} x ... x S_{n-e_s} to S_n, with e_i = deg g_i. Columns are ordered
/// generator by generator, each block in grlex-descending monomial order.
template <class S>
long graded_map_rank(const std::vector<HomogPoly<S>>& gens, int n, const Backend& backend);

/// Kernel basis of the graded map; each element lists the multipliers
/// (m_1, ..., m_s). The basis is the reduced-echelon basis for the column
/// order above, so it is canonical. Every returned element has been checked
/// to satisfy sum m_i g_i = 0 exactly.
template <class S>
std::vector<std::vector<HomogPoly<S>>> graded_map_kernel(const std::vector<HomogPoly<S>>& gens, int n,
                                                         const Backend& backend);

/// Same map as an explicit matrix (rows: monomials of S_n).
template <class S>
ExactMatrix<S> graded_map_matrix(const std::vector<HomogPoly<S>>& gens, int n);

/// Rational n/d with |n|, d <= sqrt(m/2) and n = a d (mod m), if one exists.
bool rational_reconstruct(const Integer& a, const Integer& m, Rational* out);

}  // namespace jsyz
