#include "jsyz/uni_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jsyz {

template <class S>
std::pair<UniPoly<S>, UniPoly<S>> UniPoly<S>::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (degree() < d.degree()) return {UniPoly(field_), *this};
  std::vector<S> rem = c_;
  std::vector<S> quo(c_.size() - d.c_.size() + 1, field_.zero());
  const S inv = inverse(d.leading());
  const int dd = d.degree();
  for (int i = degree(); i >= dd; --i) {
    if (jsyz::is_zero(rem[i])) continue;
    S q = rem[i] * inv;
    quo[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
  }
  rem.resize(dd);
  return {UniPoly(field_, std::move(quo)), UniPoly(field_, std::move(rem))};
}

template <class S>
std::string UniPoly<S>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const S& c = c_[i];
    if (jsyz::is_zero(c)) continue;
    bool negative = false;
    std::string mag;
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
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != "1") os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

template <class S>
UniPoly<S> uni_gcd(UniPoly<S> a, UniPoly<S> b) {
  while (!b.is_zero()) {
    UniPoly<S> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class S>
std::vector<std::pair<UniPoly<S>, int>> uni_squarefree(const UniPoly<S>& u) {
  if (u.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly<S>, int>> out;
  if (u.degree() == 0) return out;
  const UniPoly<S> du = u.derivative();
  UniPoly<S> a = uni_gcd(u, du);
  UniPoly<S> b = u / a;
  UniPoly<S> c = du / a;
  UniPoly<S> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly<S> g = uni_gcd(b, d);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    ++i;
  }
  return out;
}

template <class S>
UniPoly<S> uni_interpolate(const std::vector<std::pair<S, S>>& points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one sample");
  const auto F = field_of(points[0].first);
  const std::size_t n = points.size();
  // Newton divided differences
  std::vector<S> coef(n, F.zero());
  for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      S dx = points[i].first - points[i - level].first;
      if (is_zero(dx)) throw std::invalid_argument("repeated abscissa in interpolation");
      coef[i] = (coef[i] - coef[i - 1]) / dx;
    }
  }
  UniPoly<S> result = UniPoly<S>::constant(F, coef[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    result = result * UniPoly<S>::linear_root(F, points[k].first) + UniPoly<S>::constant(F, coef[k]);
  }
  return result;
}

template <class S>
UniPoly<S> uni_powmod(const UniPoly<S>& a, Integer e, const UniPoly<S>& m) {
  const auto& F = m.field();
  UniPoly<S> result = UniPoly<S>::constant(F, F.one()) % m;
  UniPoly<S> base = a % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

namespace {

void split_roots(const UniPoly<ModP>& f, std::mt19937_64& rng, std::vector<ModP>& out) {
  // f is monic, squarefree and splits into distinct linear factors
  if (f.degree() <= 0) return;
  const PrimeField F = f.field();
  if (f.degree() == 1) {
    out.push_back(-f.coeff(0) / f.coeff(1));
    return;
  }
  const std::uint64_t p = F.prime();
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  while (true) {
    // gcd(f, (t + a)^((p-1)/2) - 1) splits off roughly half of the roots
    UniPoly<ModP> shifted(F, {ModP(dist(rng), p), F.one()});
    UniPoly<ModP> h = uni_powmod(shifted, Integer(static_cast<unsigned long>((p - 1) / 2)), f);
    h = h - UniPoly<ModP>::constant(F, F.one());
    UniPoly<ModP> g = uni_gcd(f, h);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_roots(g, rng, out);
      split_roots((f / g).monic(), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModP> roots_mod_p(const UniPoly<ModP>& u, std::mt19937_64& rng) {
  if (u.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const PrimeField F = u.field();
  std::vector<ModP> out;
  if (u.degree() <= 0) return out;
  // product of the distinct linear factors: gcd(u, t^p - t)
  UniPoly<ModP> t = UniPoly<ModP>::identity(F);
  UniPoly<ModP> tp = uni_powmod(t, Integer(static_cast<unsigned long>(F.prime())), u.monic());
  UniPoly<ModP> g = uni_gcd(u, tp - t);
  if (g.degree() > 0 && is_zero(g.coeff(0))) {
    out.push_back(F.zero());
    g = (g / UniPoly<ModP>::identity(F)).monic();
  }
  split_roots(g, rng, out);
  std::sort(out.begin(), out.end(), [](const ModP& a, const ModP& b) { return a.v < b.v; });
  return out;
}

template <class S>
S uni_resultant(const UniPoly<S>& a0, const UniPoly<S>& b0) {
  UniPoly<S> a = a0;
  UniPoly<S> b = b0;
  const auto F = a.field();
  if (a.is_zero() || b.is_zero()) return F.zero();
  S acc = F.one();
  while (true) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) {
      S r = acc;
      for (int i = 0; i < m; ++i) r *= b.leading();
      return r;
    }
    UniPoly<S> r = a % b;
    if (r.is_zero()) return F.zero();
    const int k = r.degree();
    if ((static_cast<long>(m) * n) % 2 == 1) acc = -acc;
    for (int i = 0; i < m - k; ++i) acc *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

template class UniPoly<Rational>;
template class UniPoly<ModP>;
template UniPoly<Rational> uni_gcd(UniPoly<Rational>, UniPoly<Rational>);
template UniPoly<ModP> uni_gcd(UniPoly<ModP>, UniPoly<ModP>);
template std::vector<std::pair<UniPoly<Rational>, int>> uni_squarefree(const UniPoly<Rational>&);
template std::vector<std::pair<UniPoly<ModP>, int>> uni_squarefree(const UniPoly<ModP>&);
template UniPoly<Rational> uni_interpolate(const std::vector<std::pair<Rational, Rational>>&);
template UniPoly<ModP> uni_interpolate(const std::vector<std::pair<ModP, ModP>>&);
template UniPoly<Rational> uni_powmod(const UniPoly<Rational>&, Integer, const UniPoly<Rational>&);
template UniPoly<ModP> uni_powmod(const UniPoly<ModP>&, Integer, const UniPoly<ModP>&);
template Rational uni_resultant(const UniPoly<Rational>&, const UniPoly<Rational>&);
template ModP uni_resultant(const UniPoly<ModP>&, const UniPoly<ModP>&);

}  // namespace jsyz
