#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jsyz/field.hpp"

namespace jsyz {

/// Dense univariate polynomial c[0] + c[1] t + ... ; no trailing zeros.
template <class S>
class UniPoly {
 public:
  using field_type = field_t<S>;

  UniPoly() = default;
  explicit UniPoly(field_type field) : field_(field) {}
  UniPoly(field_type field, std::vector<S> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(field_type field, const S& c) { return UniPoly(field, {c}); }
  static UniPoly identity(field_type field) { return UniPoly(field, {field.zero(), field.one()}); }
  /// t - root
  static UniPoly linear_root(field_type field, const S& root) { return UniPoly(field, {-root, field.one()}); }

  const field_type& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : field_.zero(); }
  S leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  S evaluate(const S& t) const {
    S acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<S> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<long long>(i)));
    return UniPoly(field_, std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    S inv = inverse(leading());
    for (auto& v : r.c_) v *= inv;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(a.field_, std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a) {
    UniPoly r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(a.field_, std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const S& s) {
    UniPoly r = a;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; returns (quotient, remainder).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  /// "t^2 - 3*t + 1" style text in the variable `var`.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && jsyz::is_zero(c_.back())) c_.pop_back();
  }

  field_type field_{};
  std::vector<S> c_;
};

template <class S>
UniPoly<S> operator/(const UniPoly<S>& a, const UniPoly<S>& b) {
  return a.divmod(b).first;
}
template <class S>
UniPoly<S> operator%(const UniPoly<S>& a, const UniPoly<S>& b) {
  return a.divmod(b).second;
}

/// Monic gcd (zero only when both inputs are zero).
template <class S>
UniPoly<S> uni_gcd(UniPoly<S> a, UniPoly<S> b);

/// Squarefree decomposition (Yun): pairwise coprime squarefree monic factors
/// with multiplicities whose product equals u up to a scalar. Requires
/// characteristic 0 or larger than deg u. Throws std::invalid_argument on zero input.
template <class S>
std::vector<std::pair<UniPoly<S>, int>> uni_squarefree(const UniPoly<S>& u);

/// Interpolating polynomial through the samples. Throws std::invalid_argument
/// on a repeated abscissa.
template <class S>
UniPoly<S> uni_interpolate(const std::vector<std::pair<S, S>>& points);

/// a^e mod m.
template <class S>
UniPoly<S> uni_powmod(const UniPoly<S>& a, Integer e, const UniPoly<S>& m);

/// Distinct roots in GF(p) of a nonzero polynomial, sorted by residue.
/// Splitting uses random shifts drawn from `rng`.
std::vector<ModP> roots_mod_p(const UniPoly<ModP>& u, std::mt19937_64& rng);

/// Resultant lc(a)^deg(b) * prod b(roots of a), by the Euclidean recursion.
template <class S>
S uni_resultant(const UniPoly<S>& a, const UniPoly<S>& b);

}  // namespace jsyz
