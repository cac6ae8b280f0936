#include <charconv>
#include <random>

#include "jsyz/field.hpp"

namespace jsyz {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = detail::mulmod(result, base, p);
    base = detail::mulmod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::string to_string(const ModP& a) { return std::to_string(a.v); }
std::string to_string(const Rational& a) { return a.get_str(); }

PrimeField::PrimeField(std::uint64_t prime) : p_(prime) {
  if (prime < 3 || prime >= (std::uint64_t{1} << 62) || !is_prime(prime))
    throw InputError("field prime must be an odd prime below 2^62, got " + std::to_string(prime));
}

ModP PrimeField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return ModP(static_cast<std::uint64_t>(r), p_);
}

ModP PrimeField::from_integer(const Integer& n) const {
  Integer r;
  Integer pp;
  // p < 2^62 fits an unsigned long on LP64
  mpz_set_ui(pp.get_mpz_t(), static_cast<unsigned long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
  return ModP(static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t())), p_);
}

ModP PrimeField::from_rational(const Rational& q) const {
  ModP num = from_integer(q.get_num());
  ModP den = from_integer(q.get_den());
  if (den.v == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
  return num / den;
}

FieldTag parse_field_tag(std::string_view text) {
  if (text == "Q" || text == "q") return {};
  if (text.size() > 3 && (text.substr(0, 3) == "Fp:" || text.substr(0, 3) == "fp:")) {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw InputError("bad field tag '" + std::string(text) + "'");
    PrimeField check(p);
    return FieldTag{p};
  }
  throw InputError("bad field tag '" + std::string(text) + "', expected Q or Fp:<prime>");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  if ((n & 1) == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

std::uint64_t random_prime(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x5eedu};
  std::mt19937_64 rng(seq);
  constexpr std::uint64_t lo = std::uint64_t{1} << 30;
  std::uniform_int_distribution<std::uint64_t> dist(lo + 1, (lo << 1) - 100000);
  return next_prime(dist(rng));
}

}  // namespace jsyz
