#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "jsyz/field.hpp"

namespace jsyz {

/// Exponent triple of the monomial x^x * y^y * z^z.
struct Exponent {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const { return x + y + z; }
  int operator[](int var) const { return var == 0 ? x : (var == 1 ? y : z); }
  friend Exponent operator+(const Exponent& a, const Exponent& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded lexicographic order with x > y > z; larger monomials compare first.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.x != b.x) return a.x > b.x;
    return a.y > b.y;
  }
};

/// Number of monomials of degree n in three variables.
constexpr long monomial_count(int n) { return n < 0 ? 0 : static_cast<long>(n + 1) * (n + 2) / 2; }

/// Position of e in the grlex-descending basis of its degree.
inline long monomial_index(const Exponent& e) {
  const long n = e.degree();
  const long r = n - e.x;
  return r * (r + 1) / 2 + (r - e.y);
}

/// Monomials of degree n in grlex-descending order; index i matches monomial_index.
std::vector<Exponent> monomial_basis(int n);

template <class S>
class HomogPoly {
 public:
  using scalar_type = S;
  using field_type = field_t<S>;
  using term_map = std::map<Exponent, S, GrlexDescending>;

  HomogPoly() = default;
  /// The zero polynomial, carrying the conventional degree `degree`.
  explicit HomogPoly(field_type field, int degree = 0) : field_(field), degree_(degree) {}

  static HomogPoly constant(field_type field, const S& c) {
    HomogPoly p(field, 0);
    if (!jsyz::is_zero(c)) p.terms_.emplace(Exponent{}, c);
    return p;
  }
  static HomogPoly monomial(field_type field, const Exponent& e, const S& c) {
    HomogPoly p(field, e.degree());
    if (!jsyz::is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }
  /// var: 0 = x, 1 = y, 2 = z.
  static HomogPoly variable(field_type field, int var) {
    Exponent e{var == 0 ? 1 : 0, var == 1 ? 1 : 0, var == 2 ? 1 : 0};
    return monomial(field, e, field.one());
  }
  /// a*x + b*y + c*z
  static HomogPoly linear(field_type field, const std::array<S, 3>& cov) {
    HomogPoly p(field, 1);
    for (int v = 0; v < 3; ++v) {
      if (!jsyz::is_zero(cov[v])) p.terms_.emplace(Exponent{v == 0, v == 1, v == 2}, cov[v]);
    }
    return p;
  }

  const field_type& field() const { return field_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const term_map& terms() const { return terms_; }

  S coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }
  /// Leading term under grlex; requires a nonzero polynomial.
  const std::pair<const Exponent, S>& leading() const { return *terms_.begin(); }

  /// Adds c*x^e; e must have the polynomial's degree.
  void add_term(const Exponent& e, const S& c) {
    if (e.degree() != degree_) {
      if (!terms_.empty()) throw HomogeneityError(degree_, e.degree());
      degree_ = e.degree();
    }
    if (jsyz::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (jsyz::is_zero(it->second)) terms_.erase(it);
    }
  }

  HomogPoly& operator+=(const HomogPoly& o) {
    check_field(o);
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    if (o.degree_ != degree_) throw HomogeneityError(degree_, o.degree_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  HomogPoly& operator-=(const HomogPoly& o) { return *this += -o; }
  HomogPoly& operator*=(const S& c) {
    if (jsyz::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator-(HomogPoly a) {
    for (auto& [e, v] : a.terms_) v = -v;
    return a;
  }
  friend HomogPoly operator*(HomogPoly a, const S& c) { return a *= c; }
  friend HomogPoly operator*(const S& c, HomogPoly a) { return a *= c; }

  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    a.check_field(b);
    HomogPoly r(a.field_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }
  HomogPoly& operator*=(const HomogPoly& o) { return *this = *this * o; }

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    if (!(a.field_ == b.field_)) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Partial derivative; var: 0 = x, 1 = y, 2 = z.
  HomogPoly diff(int var) const {
    HomogPoly r(field_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
      int k = e[var];
      if (k == 0) continue;
      Exponent d = e;
      (var == 0 ? d.x : var == 1 ? d.y : d.z) -= 1;
      r.add_term(d, c * field_.from_int(k));
    }
    return r;
  }

  S evaluate(const std::array<S, 3>& pt) const {
    S acc = field_.zero();
    for (const auto& [e, c] : terms_) {
      S t = c;
      for (int i = 0; i < e.x; ++i) t *= pt[0];
      for (int i = 0; i < e.y; ++i) t *= pt[1];
      for (int i = 0; i < e.z; ++i) t *= pt[2];
      acc += t;
    }
    return acc;
  }

  HomogPoly pow(int n) const {
    HomogPoly r = constant(field_, field_.one());
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  /// Scales so the grlex-leading coefficient is 1 (zero stays zero).
  HomogPoly monic() const {
    if (is_zero()) return *this;
    return *this * inverse(leading().second);
  }

  /// Graded-lex text, e.g. "x^2*y - 3/2*z^3"; parse(to_string()) reproduces the polynomial.
  std::string to_string() const;

 private:
  void check_field(const HomogPoly& o) const {
    if (!(field_ == o.field_)) throw BackendMismatch("polynomials over different fields");
  }

  field_type field_{};
  int degree_ = 0;
  term_map terms_;
};

using QPoly = HomogPoly<Rational>;
using PPoly = HomogPoly<ModP>;

/// 3x3 matrix acting on coordinates; row-major.
template <class S>
using LinearMap = std::array<std::array<S, 3>, 3>;

/// p∘A: the polynomial v -> p(A v).
template <class S>
HomogPoly<S> substitute_linear(const HomogPoly<S>& p, const LinearMap<S>& A);

/// Exact quotient p/q when q divides p, otherwise false.
template <class S>
bool divide_exact(const HomogPoly<S>& p, const HomogPoly<S>& q, HomogPoly<S>* quotient);

/// Image of a rational polynomial in GF(p); throws std::domain_error when p divides a denominator.
PPoly reduce_mod(const QPoly& f, const PrimeField& field);

/// Lowest common multiple of the coefficient denominators times f, divided by the content:
/// a primitive integer-coefficient multiple with positive leading coefficient.
QPoly primitive_part(const QPoly& f);

/// Coefficients of p in the grlex basis of its degree.
template <class S>
std::vector<S> coefficient_vector(const HomogPoly<S>& p);
template <class S>
HomogPoly<S> from_coefficient_vector(const field_t<S>& field, int degree, const std::vector<S>& coeffs);

}  // namespace jsyz
