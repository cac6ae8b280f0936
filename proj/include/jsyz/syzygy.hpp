#pragma once

#include <array>
#include <vector>

#include "jsyz/backend.hpp"
#include "jsyz/homog_poly.hpp"

namespace jsyz {

/// A Jacobian syzygy (a, b, c) of degree r: a f_x + b f_y + c f_z = 0.
template <class S>
struct SyzygyTriple {
  HomogPoly<S> a;
  HomogPoly<S> b;
  HomogPoly<S> c;
  int degree = 0;
  int f_degree = 0;

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
};

/// Basis of AR(f)_r, the syzygies of degree r.
template <class S>
struct ARSlice {
  int degree = 0;
  std::vector<SyzygyTriple<S>> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

template <class S>
struct MdrResult {
  int mdr = 0;
  /// mdr = 0: f involves only two independent linear forms, so C is a union of
  /// concurrent lines (a cone).
  bool cone = false;
  /// f has no repeated factor; mdr is still computed when it does.
  bool reduced = true;
  SyzygyTriple<S> certificate;
};

/// (f_x, f_y, f_z); zero partials keep the conventional degree deg f - 1.
template <class S>
std::array<HomogPoly<S>, 3> gradient(const HomogPoly<S>& f);

/// dim AR(f)_r from one rank computation.
template <class S>
long ar_dimension(const HomogPoly<S>& f, int r, const Backend& backend = {});

/// Canonical (reduced echelon) basis of AR(f)_r; every triple re-verified.
template <class S>
ARSlice<S> ar_slice(const HomogPoly<S>& f, int r, const Backend& backend = {});

/// Smallest r with AR(f)_r != 0, with the first basis triple of that degree as certificate.
template <class S>
MdrResult<S> mdr(const HomogPoly<S>& f, const Backend& backend = {});

/// Substitutes the triple into a f_x + b f_y + c f_z. Throws InputError when the
/// component degrees disagree with each other or with the recorded degree.
template <class S>
bool verify_syzygy(const HomogPoly<S>& f, const SyzygyTriple<S>& s);

/// gcd(a, b, c) is a nonzero constant.
template <class S>
bool is_primitive(const SyzygyTriple<S>& s);

/// (f_y, -f_x, 0), (f_z, 0, -f_x), (0, f_z, -f_y).
template <class S>
std::array<SyzygyTriple<S>, 3> koszul_triples(const HomogPoly<S>& f);

/// Builds a triple from three components, checking that their degrees match.
template <class S>
SyzygyTriple<S> make_triple(HomogPoly<S> a, HomogPoly<S> b, HomogPoly<S> c, int f_degree);

}  // namespace jsyz
