#include "jsyz/backend.hpp"

#include <algorithm>
#include <map>

namespace jsyz {

std::uint64_t Backend::prime(int i) const {
  // skip collisions with earlier indices so the stream has distinct primes
  std::uint64_t p = random_prime(seed, static_cast<std::uint64_t>(i));
  for (int j = 0; j < i; ++j) {
    if (random_prime(seed, static_cast<std::uint64_t>(j)) == p) return next_prime(p + 2 + 2 * i);
  }
  return p;
}

std::vector<std::uint64_t> Backend::voting_primes() const {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < std::max(1, prime_count); ++i) out.push_back(prime(i));
  return out;
}

namespace {

// Matrix of the map mod p with one row per (generator, monomial multiplier);
// rows span the image, so the rank equals the rank of the map.
ModMatrix transposed_mod_matrix(const std::vector<PPoly>& gens, int n, std::uint64_t p) {
  long rows = 0;
  for (const auto& g : gens) rows += monomial_count(n - g.degree());
  const int cols = static_cast<int>(monomial_count(n));
  ModMatrix m(static_cast<int>(rows), cols, p);
  int r = 0;
  for (const auto& g : gens) {
    for (const Exponent& mono : monomial_basis(n - g.degree())) {
      std::uint64_t* row = m.row(r);
      for (const auto& [e, c] : g.terms()) row[monomial_index(e + mono)] = c.v;
      ++r;
    }
  }
  return m;
}

ModMatrix mod_matrix(const std::vector<PPoly>& gens, int n, std::uint64_t p) {
  int cols = 0;
  for (const auto& g : gens) cols += static_cast<int>(monomial_count(n - g.degree()));
  ModMatrix m(static_cast<int>(monomial_count(n)), cols, p);
  int c0 = 0;
  for (const auto& g : gens) {
    for (const Exponent& mono : monomial_basis(n - g.degree())) {
      for (const auto& [e, c] : g.terms()) m.set(static_cast<int>(monomial_index(e + mono)), c0, c.v);
      ++c0;
    }
  }
  return m;
}

std::vector<PPoly> reduce_all(const std::vector<QPoly>& gens, const PrimeField& F) {
  std::vector<PPoly> out;
  for (const auto& g : gens) out.push_back(reduce_mod(g, F));
  return out;
}

template <class S>
std::vector<HomogPoly<S>> split_vector(const std::vector<HomogPoly<S>>& gens, int n, const std::vector<S>& v,
                                       const field_t<S>& F) {
  std::vector<HomogPoly<S>> parts;
  std::size_t offset = 0;
  for (const auto& g : gens) {
    const int deg = n - g.degree();
    const std::size_t len = static_cast<std::size_t>(monomial_count(deg));
    std::vector<S> slice(v.begin() + offset, v.begin() + offset + len);
    parts.push_back(from_coefficient_vector<S>(F, std::max(deg, 0), slice));
    offset += len;
  }
  return parts;
}

template <class S>
bool kernel_element_holds(const std::vector<HomogPoly<S>>& gens, const std::vector<HomogPoly<S>>& parts, int n) {
  HomogPoly<S> acc(gens.front().field(), n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (parts[i].is_zero() || gens[i].is_zero()) continue;
    acc += parts[i] * gens[i];
  }
  return acc.is_zero();
}

struct Signature {
  int rank = -1;
  std::vector<int> pivots;
  // better: larger rank, then lexicographically smaller pivots
  bool better_than(const Signature& o) const {
    if (rank != o.rank) return rank > o.rank;
    return pivots < o.pivots;
  }
  bool operator==(const Signature& o) const { return rank == o.rank && pivots == o.pivots; }
};

std::vector<std::vector<Rational>> multimodular_kernel(const std::vector<QPoly>& gens, int n, const Backend& backend,
                                                       const ExactMatrix<Rational>* check) {
  Signature best;
  std::vector<std::vector<Integer>> residues;  // CRT residues per entry
  Integer modulus = 1;
  std::vector<std::vector<Rational>> previous;
  const int max_primes = 64;
  for (int i = 0; i < max_primes; ++i) {
    const std::uint64_t p = backend.prime(i);
    const PrimeField F(p);
    std::vector<PPoly> gp;
    try {
      gp = reduce_all(gens, F);
    } catch (const std::domain_error&) {
      continue;
    }
    ModMatrix m = mod_matrix(gp, n, p);
    ModMatrix::Rref rr = m.rref();
    Signature sig{static_cast<int>(rr.pivots.size()), rr.pivots};
    if (best.rank >= 0 && !(sig == best)) {
      if (!sig.better_than(best)) continue;  // unlucky prime
    }
    auto ker = kernel_from_rref(rr, m.cols(), p);
    if (!(sig == best)) {
      best = sig;
      modulus = 1;
      residues.assign(ker.size(), std::vector<Integer>(m.cols(), 0));
      previous.clear();
    }
    if (ker.empty()) return {};
    // CRT: x = r mod M, x = a mod p
    Integer pz;
    mpz_set_ui(pz.get_mpz_t(), static_cast<unsigned long>(p));
    Integer inv;
    {
      Integer mp = modulus % pz;
      mpz_invert(inv.get_mpz_t(), mp.get_mpz_t(), pz.get_mpz_t());
    }
    for (std::size_t k = 0; k < ker.size(); ++k) {
      for (int j = 0; j < m.cols(); ++j) {
        Integer& r = residues[k][j];
        Integer a;
        mpz_set_ui(a.get_mpz_t(), static_cast<unsigned long>(ker[k][j]));
        Integer t = ((a - r) % pz) * inv % pz;
        if (sgn(t) < 0) t += pz;
        r += modulus * t;
      }
    }
    modulus *= pz;
    // reconstruct
    std::vector<std::vector<Rational>> candidate(ker.size(), std::vector<Rational>(m.cols()));
    bool ok = true;
    for (std::size_t k = 0; k < ker.size() && ok; ++k)
      for (int j = 0; j < m.cols() && ok; ++j) ok = rational_reconstruct(residues[k][j], modulus, &candidate[k][j]);
    if (!ok) continue;
    const bool stable = candidate == previous;
    previous = candidate;
    if (!stable) continue;
    bool verified = true;
    for (const auto& v : candidate) {
      if (check) {
        auto image = check->apply(v);
        verified = std::all_of(image.begin(), image.end(), [](const Rational& q) { return sgn(q) == 0; });
      } else {
        verified = kernel_element_holds(gens, split_vector(gens, n, v, RationalField{}), n);
      }
      if (!verified) break;
    }
    if (verified) return candidate;
  }
  throw InconsistencyError("multimodular kernel reconstruction did not converge");
}

}  // namespace

template <class S>
ExactMatrix<S> graded_map_matrix(const std::vector<HomogPoly<S>>& gens, int n) {
  const auto F = gens.front().field();
  int cols = 0;
  for (const auto& g : gens) cols += static_cast<int>(monomial_count(n - g.degree()));
  ExactMatrix<S> m(F, static_cast<int>(monomial_count(n)), cols);
  int c0 = 0;
  for (const auto& g : gens) {
    for (const Exponent& mono : monomial_basis(n - g.degree())) {
      for (const auto& [e, c] : g.terms()) m(static_cast<int>(monomial_index(e + mono)), c0) = c;
      ++c0;
    }
  }
  return m;
}

template <>
long graded_map_rank(const std::vector<PPoly>& gens, int n, const Backend&) {
  if (gens.empty() || n < 0) return 0;
  const std::uint64_t p = gens.front().field().prime();
  return transposed_mod_matrix(gens, n, p).rank();
}

template <>
long graded_map_rank(const std::vector<QPoly>& gens, int n, const Backend& backend) {
  if (gens.empty() || n < 0) return 0;
  if (backend.exact) return rank(graded_map_matrix(gens, n));
  long agreed = -1;
  std::string seen;
  bool disagree = false;
  int used = 0;
  for (int i = 0; used < std::max(1, backend.prime_count) && i < backend.prime_count + 16; ++i) {
    const std::uint64_t p = backend.prime(i);
    std::vector<PPoly> gp;
    try {
      gp = reduce_all(gens, PrimeField(p));
    } catch (const std::domain_error&) {
      continue;  // p divides a denominator
    }
    long r = transposed_mod_matrix(gp, n, p).rank();
    seen += (seen.empty() ? "" : ", ") + std::to_string(p) + " -> " + std::to_string(r);
    if (agreed < 0) agreed = r;
    if (r != agreed) disagree = true;
    ++used;
  }
  if (disagree) throw InconsistencyError("modular ranks disagree in degree " + std::to_string(n) + ": " + seen);
  return agreed;
}

template <>
std::vector<std::vector<PPoly>> graded_map_kernel(const std::vector<PPoly>& gens, int n, const Backend&) {
  std::vector<std::vector<PPoly>> out;
  if (gens.empty() || n < 0) return out;
  const PrimeField F = gens.front().field();
  const std::uint64_t p = F.prime();
  for (const auto& raw : mod_matrix(gens, n, p).nullspace()) {
    std::vector<ModP> v;
    for (auto x : raw) v.emplace_back(x, p);
    auto parts = split_vector(gens, n, v, F);
    if (!kernel_element_holds(gens, parts, n)) throw InconsistencyError("kernel vector fails re-substitution");
    out.push_back(std::move(parts));
  }
  return out;
}

template <>
std::vector<std::vector<QPoly>> graded_map_kernel(const std::vector<QPoly>& gens, int n, const Backend& backend) {
  std::vector<std::vector<QPoly>> out;
  if (gens.empty() || n < 0) return out;
  std::vector<std::vector<Rational>> basis;
  if (backend.exact) {
    basis = nullspace(graded_map_matrix(gens, n));
  } else {
    basis = multimodular_kernel(gens, n, backend, nullptr);
  }
  for (const auto& v : basis) {
    auto parts = split_vector(gens, n, v, RationalField{});
    if (!kernel_element_holds(gens, parts, n)) throw InconsistencyError("kernel vector fails re-substitution");
    out.push_back(std::move(parts));
  }
  return out;
}

template ExactMatrix<Rational> graded_map_matrix(const std::vector<QPoly>&, int);
template ExactMatrix<ModP> graded_map_matrix(const std::vector<PPoly>&, int);

bool rational_reconstruct(const Integer& a, const Integer& m, Rational* out) {
  // half-extended Euclid on (m, a) stopping below sqrt(m/2)
  Integer bound;
  {
    Integer half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  }
  Integer r0 = m, r1 = a % m;
  if (sgn(r1) < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return false;
  Integer g = gcd(r1, t1);
  if (g != 1) return false;
  Rational q(r1, t1);
  q.canonicalize();
  *out = q;
  return true;
}

}  // namespace jsyz
