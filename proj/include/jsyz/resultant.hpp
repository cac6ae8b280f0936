#pragma once

#include <cstdint>

#include "jsyz/homog_poly.hpp"

namespace jsyz {

/// Macaulay resultant of three ternary forms, normalized by Res(x^a, y^b, z^c) = 1.
///
/// Built from the Macaulay matrix in degree D = e1 + e2 + e3 - 2, where the
/// row of a monomial u is (u / x_i^{e_i}) p_i for the first i with x_i^{e_i}
/// dividing u, divided by the minor on the monomials divisible by two or more
/// of x^{e1}, y^{e2}, z^{e3}. When that minor vanishes the forms are moved by a
/// pseudo-random coordinate change of determinant 1 (which leaves the
/// resultant unchanged) and the computation is retried; after `max_retries`
/// failures an InconsistencyError is raised. Zero exactly when the forms
/// share a projective zero over the algebraic closure.
template <class S>
S macaulay_resultant(const HomogPoly<S>& p1, const HomogPoly<S>& p2, const HomogPoly<S>& p3,
                     std::uint64_t seed = 1, int max_retries = 16);

/// Random integer matrix of determinant 1 (a product of elementary shears).
template <class S>
LinearMap<S> random_unimodular(const field_t<S>& field, std::uint64_t seed, int bound = 3);

}  // namespace jsyz
