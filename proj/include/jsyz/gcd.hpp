#pragma once

#include <vector>

#include "jsyz/homog_poly.hpp"

namespace jsyz {

/// Greatest common divisor of two homogeneous forms, monic under grlex.
///
/// The common power of z is split off first; the z-free parts are
/// dehomogenized at z = 1 and their gcd is taken in K[y][x] by a primitive
/// pseudo-remainder sequence, then homogenized back.
/// Throws std::invalid_argument when both inputs are zero.
template <class S>
HomogPoly<S> homog_gcd(const HomogPoly<S>& p, const HomogPoly<S>& q);

/// True when the nonzero members of ps have a constant gcd (false when all
/// are zero). Over Q a modular test runs first and the exact gcd only when
/// every tested prime reports a common factor.
template <class S>
bool gcd_is_constant(const std::vector<HomogPoly<S>>& ps);

/// True when p has no repeated factor, tested as gcd(p, p_x, p_y, p_z) = 1.
/// Valid in characteristic 0 or above deg p.
template <class S>
bool is_reduced(const HomogPoly<S>& p);

}  // namespace jsyz
