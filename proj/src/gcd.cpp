#include "jsyz/gcd.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "jsyz/uni_poly.hpp"

namespace jsyz {

namespace {

// Polynomial in x with coefficients in K[y]; index = power of x.
template <class S>
using BiPoly = std::vector<UniPoly<S>>;

template <class S>
void trim(BiPoly<S>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class S>
int x_degree(const BiPoly<S>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class S>
UniPoly<S> content(const BiPoly<S>& a) {
  UniPoly<S> g(a.front().field());
  for (const auto& c : a) {
    g = uni_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

template <class S>
BiPoly<S> divide_by(const BiPoly<S>& a, const UniPoly<S>& c) {
  BiPoly<S> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(v / c);
  return out;
}

template <class S>
BiPoly<S> primitive(const BiPoly<S>& a) {
  return divide_by(a, content(a));
}

// lc(b)^(m-n+1) * a mod b, reduced step by step.
template <class S>
BiPoly<S> pseudo_remainder(BiPoly<S> a, const BiPoly<S>& b) {
  const int n = x_degree(b);
  const UniPoly<S>& lb = b.back();
  while (x_degree(a) >= n && !a.empty()) {
    const int shift = x_degree(a) - n;
    const UniPoly<S> la = a.back();
    for (auto& v : a) v = v * lb;
    for (int i = 0; i <= n; ++i) a[i + shift] = a[i + shift] - la * b[i];
    trim(a);
  }
  return a;
}

template <class S>
BiPoly<S> bivariate_gcd(BiPoly<S> a, BiPoly<S> b) {
  const UniPoly<S> c = uni_gcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (x_degree(a) < x_degree(b)) std::swap(a, b);
  while (!b.empty()) {
    BiPoly<S> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) break;
    b = primitive(r);
  }
  // a is primitive; scale by the content gcd
  for (auto& v : a) v = v * c;
  return a;
}

template <class S>
int z_valuation(const HomogPoly<S>& p) {
  int v = p.degree();
  for (const auto& [e, c] : p.terms()) v = std::min(v, e.z);
  return v;
}

template <class S>
BiPoly<S> dehomogenize(const HomogPoly<S>& p) {
  const auto& F = p.field();
  int max_x = 0;
  for (const auto& [e, c] : p.terms()) max_x = std::max(max_x, e.x);
  std::vector<std::vector<S>> coeffs(max_x + 1);
  for (const auto& [e, c] : p.terms()) {
    auto& row = coeffs[e.x];
    if (static_cast<int>(row.size()) <= e.y) row.resize(e.y + 1, F.zero());
    row[e.y] += c;
  }
  BiPoly<S> out;
  for (auto& row : coeffs) out.emplace_back(F, std::move(row));
  trim(out);
  return out;
}

template <class S>
HomogPoly<S> homogenize(const BiPoly<S>& g, const field_t<S>& F) {
  int deg = 0;
  for (int i = 0; i <= x_degree(g); ++i)
    if (!g[i].is_zero()) deg = std::max(deg, i + g[i].degree());
  HomogPoly<S> out(F, deg);
  for (int i = 0; i <= x_degree(g); ++i) {
    for (int j = 0; j <= g[i].degree(); ++j) {
      const S c = g[i].coeff(j);
      if (!is_zero(c)) out.add_term(Exponent{i, j, deg - i - j}, c);
    }
  }
  return out;
}

template <class S>
HomogPoly<S> z_power(const field_t<S>& F, int k) {
  return HomogPoly<S>::monomial(F, Exponent{0, 0, k}, F.one());
}

}  // namespace

template <class S>
HomogPoly<S> homog_gcd(const HomogPoly<S>& p, const HomogPoly<S>& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  const auto& F = p.field();
  const int vp = z_valuation(p);
  const int vq = z_valuation(q);
  HomogPoly<S> pz, qz;
  divide_exact(p, z_power<S>(F, vp), &pz);
  divide_exact(q, z_power<S>(F, vq), &qz);
  BiPoly<S> g = bivariate_gcd(dehomogenize(pz), dehomogenize(qz));
  HomogPoly<S> out = homogenize(g, F) * z_power<S>(F, std::min(vp, vq));
  return out.monic();
}

template <class S>
bool exact_gcd_is_constant(const std::vector<HomogPoly<S>>& ps) {
  std::optional<HomogPoly<S>> g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g ? homog_gcd(*g, p) : p;
    if (g->degree() == 0) return true;
  }
  return g && g->degree() == 0;
}

template <>
bool gcd_is_constant(const std::vector<PPoly>& ps) {
  return exact_gcd_is_constant(ps);
}

// A common factor over Q, taken primitive, reduces to a common factor of the
// same degree modulo every prime, so one prime with a constant gcd decides.
template <>
bool gcd_is_constant(const std::vector<QPoly>& ps) {
  for (std::uint64_t i = 0; i < 4; ++i) {
    const PrimeField F(random_prime(0x676364, i));
    std::vector<PPoly> reduced;
    for (const auto& p : ps)
      if (!p.is_zero()) reduced.push_back(reduce_mod(primitive_part(p), F));
    if (exact_gcd_is_constant(reduced)) return true;
  }
  return exact_gcd_is_constant(ps);
}

template <class S>
bool is_reduced(const HomogPoly<S>& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return gcd_is_constant<S>({p, p.diff(0), p.diff(1), p.diff(2)});
}

template HomogPoly<Rational> homog_gcd(const HomogPoly<Rational>&, const HomogPoly<Rational>&);
template HomogPoly<ModP> homog_gcd(const HomogPoly<ModP>&, const HomogPoly<ModP>&);
template bool is_reduced(const HomogPoly<Rational>&);
template bool is_reduced(const HomogPoly<ModP>&);

}  // namespace jsyz
