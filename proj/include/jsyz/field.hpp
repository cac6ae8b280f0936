#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "jsyz/errors.hpp"

namespace jsyz {

using Rational = mpq_class;
using Integer = mpz_class;

/// Residue modulo an odd prime p < 2^62. The prime travels with the value so
/// that mixing residues of different fields is caught at the operation.
struct ModP {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  ModP() = default;
  ModP(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  friend bool operator==(const ModP& a, const ModP& b) { return a.v == b.v && a.p == b.p; }
};

namespace detail {
inline void same_prime(const ModP& a, const ModP& b) {
  if (a.p != b.p) throw BackendMismatch("residues modulo different primes");
}
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
}  // namespace detail

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

inline ModP operator+(const ModP& a, const ModP& b) {
  detail::same_prime(a, b);
  std::uint64_t s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  ModP r;
  r.v = s;
  r.p = a.p;
  return r;
}
inline ModP operator-(const ModP& a, const ModP& b) {
  detail::same_prime(a, b);
  ModP r;
  r.v = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
  r.p = a.p;
  return r;
}
inline ModP operator-(const ModP& a) {
  ModP r;
  r.v = a.v == 0 ? 0 : a.p - a.v;
  r.p = a.p;
  return r;
}
inline ModP operator*(const ModP& a, const ModP& b) {
  detail::same_prime(a, b);
  ModP r;
  r.v = detail::mulmod(a.v, b.v, a.p);
  r.p = a.p;
  return r;
}
inline ModP inverse(const ModP& a) {
  if (a.v == 0) throw std::domain_error("division by zero residue");
  ModP r;
  r.v = invmod(a.v, a.p);
  r.p = a.p;
  return r;
}
inline ModP operator/(const ModP& a, const ModP& b) { return a * inverse(b); }
inline ModP& operator+=(ModP& a, const ModP& b) { return a = a + b; }
inline ModP& operator-=(ModP& a, const ModP& b) { return a = a - b; }
inline ModP& operator*=(ModP& a, const ModP& b) { return a = a * b; }
inline ModP& operator/=(ModP& a, const ModP& b) { return a = a / b; }

inline bool is_zero(const ModP& a) { return a.v == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const ModP& a) { return a.v == 1; }
inline bool is_one(const Rational& a) { return a == 1; }
inline Rational inverse(const Rational& a) {
  if (sgn(a) == 0) throw std::domain_error("division by zero");
  return Rational(1) / a;
}

std::string to_string(const ModP& a);
std::string to_string(const Rational& a);

/// The field of rational numbers.
class RationalField {
 public:
  using scalar_type = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long n) const { return Rational(static_cast<long>(n)); }
  Rational from_rational(const Rational& q) const { return q; }
  std::uint64_t characteristic() const { return 0; }
  std::string tag() const { return "Q"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// GF(p) for an odd prime p < 2^62.
class PrimeField {
 public:
  using scalar_type = ModP;
  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime);
  /// Skips the primality check; for residues already known to live in a field.
  static PrimeField unchecked(std::uint64_t prime) {
    PrimeField f;
    f.p_ = prime;
    return f;
  }
  std::uint64_t prime() const { return p_; }
  ModP zero() const { return ModP(0, p_); }
  ModP one() const { return ModP(1, p_); }
  ModP from_int(long long n) const;
  ModP from_integer(const Integer& n) const;
  /// Throws std::domain_error when p divides the denominator.
  ModP from_rational(const Rational& q) const;
  std::uint64_t characteristic() const { return p_; }
  std::string tag() const { return "Fp:" + std::to_string(p_); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_ = 0;
};

template <class S>
struct field_for;
template <>
struct field_for<Rational> {
  using type = RationalField;
};
template <>
struct field_for<ModP> {
  using type = PrimeField;
};
template <class S>
using field_t = typename field_for<S>::type;

inline RationalField field_of(const Rational&) { return {}; }
inline PrimeField field_of(const ModP& a) { return PrimeField::unchecked(a.p); }

/// A field choice as given on the command line: "Q" or "Fp:<prime>".
struct FieldTag {
  std::uint64_t prime = 0;  // 0 selects Q
  bool is_rational() const { return prime == 0; }
  std::string str() const { return prime == 0 ? "Q" : "Fp:" + std::to_string(prime); }
};
FieldTag parse_field_tag(std::string_view text);

// Primes.
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);
/// Deterministic pseudo-random prime in (2^30, 2^31) indexed by (seed, index).
std::uint64_t random_prime(std::uint64_t seed, std::uint64_t index);

}  // namespace jsyz
