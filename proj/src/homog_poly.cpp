#include "jsyz/homog_poly.hpp"

#include <sstream>

namespace jsyz {

std::vector<Exponent> monomial_basis(int n) {
  std::vector<Exponent> out;
  if (n < 0) return out;
  out.reserve(monomial_count(n));
  for (int i = n; i >= 0; --i) {
    for (int j = n - i; j >= 0; --j) out.push_back({i, j, n - i - j});
  }
  return out;
}

namespace {

void append_monomial(std::ostringstream& os, const Exponent& e) {
  bool first = true;
  const char names[3] = {'x', 'y', 'z'};
  for (int v = 0; v < 3; ++v) {
    int k = e[v];
    if (k == 0) continue;
    if (!first) os << '*';
    os << names[v];
    if (k > 1) os << '^' << k;
    first = false;
  }
}

}  // namespace

template <class S>
std::string HomogPoly<S>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mag;
    bool negative = false;
    if constexpr (std::is_same_v<S, Rational>) {
      negative = sgn(c) < 0;
      mag = Rational(abs(c)).get_str();
    } else {
      mag = jsyz::to_string(c);
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e.degree() == 0) {
      os << mag;
      continue;
    }
    if (mag != "1") os << mag << '*';
    append_monomial(os, e);
  }
  return os.str();
}

template <class S>
HomogPoly<S> substitute_linear(const HomogPoly<S>& p, const LinearMap<S>& A) {
  const auto& F = p.field();
  std::array<HomogPoly<S>, 3> images;
  for (int v = 0; v < 3; ++v) images[v] = HomogPoly<S>::linear(F, A[v]);
  // powers of each image up to the degree
  std::array<std::vector<HomogPoly<S>>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(HomogPoly<S>::constant(F, F.one()));
    for (int k = 1; k <= p.degree(); ++k) powers[v].push_back(powers[v].back() * images[v]);
  }
  HomogPoly<S> out(F, p.degree());
  for (const auto& [e, c] : p.terms()) {
    HomogPoly<S> t = powers[0][e.x] * powers[1][e.y] * powers[2][e.z];
    out += t * c;
  }
  return out;
}

template <class S>
bool divide_exact(const HomogPoly<S>& p, const HomogPoly<S>& q, HomogPoly<S>* quotient) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& F = p.field();
  if (p.is_zero()) {
    if (quotient) *quotient = HomogPoly<S>(F, std::max(0, p.degree() - q.degree()));
    return true;
  }
  if (p.degree() < q.degree()) return false;
  HomogPoly<S> rem = p;
  HomogPoly<S> quo(F, p.degree() - q.degree());
  const auto& [lq, cq] = q.leading();
  const S inv = inverse(cq);
  // a single divisor is a Groebner basis: the remainder vanishes iff q | p
  while (!rem.is_zero()) {
    const auto [lr, cr] = rem.leading();
    if (lr.x < lq.x || lr.y < lq.y || lr.z < lq.z) return false;
    Exponent shift{lr.x - lq.x, lr.y - lq.y, lr.z - lq.z};
    S c = cr * inv;
    quo.add_term(shift, c);
    for (const auto& [e, v] : q.terms()) rem.add_term(e + shift, -(v * c));
  }
  if (quotient) *quotient = std::move(quo);
  return true;
}

PPoly reduce_mod(const QPoly& f, const PrimeField& field) {
  PPoly out(field, f.degree());
  for (const auto& [e, c] : f.terms()) out.add_term(e, field.from_rational(c));
  return out;
}

QPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) return f;
  Integer den = 1;
  for (const auto& [e, c] : f.terms()) den = lcm(den, Integer(c.get_den()));
  Integer g = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational scaled = c * den;
    g = gcd(g, Integer(scaled.get_num()));
  }
  Rational scale = Rational(den) / Rational(g);
  if (sgn(f.leading().second) < 0) scale = -scale;
  return f * scale;
}

template <class S>
std::vector<S> coefficient_vector(const HomogPoly<S>& p) {
  std::vector<S> out(monomial_count(p.degree()), p.field().zero());
  for (const auto& [e, c] : p.terms()) out[monomial_index(e)] = c;
  return out;
}

template <class S>
HomogPoly<S> from_coefficient_vector(const field_t<S>& field, int degree, const std::vector<S>& coeffs) {
  HomogPoly<S> out(field, degree);
  auto basis = monomial_basis(degree);
  for (std::size_t i = 0; i < coeffs.size() && i < basis.size(); ++i) out.add_term(basis[i], coeffs[i]);
  return out;
}

template class HomogPoly<Rational>;
template class HomogPoly<ModP>;
template HomogPoly<Rational> substitute_linear(const HomogPoly<Rational>&, const LinearMap<Rational>&);
template HomogPoly<ModP> substitute_linear(const HomogPoly<ModP>&, const LinearMap<ModP>&);
template bool divide_exact(const HomogPoly<Rational>&, const HomogPoly<Rational>&, HomogPoly<Rational>*);
template bool divide_exact(const HomogPoly<ModP>&, const HomogPoly<ModP>&, HomogPoly<ModP>*);
template std::vector<Rational> coefficient_vector(const HomogPoly<Rational>&);
template std::vector<ModP> coefficient_vector(const HomogPoly<ModP>&);
template HomogPoly<Rational> from_coefficient_vector(const RationalField&, int, const std::vector<Rational>&);
template HomogPoly<ModP> from_coefficient_vector(const PrimeField&, int, const std::vector<ModP>&);

}  // namespace jsyz
