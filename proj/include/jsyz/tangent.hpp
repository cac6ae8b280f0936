#pragma once

#include <string>
#include <vector>

#include "jsyz/arrangement.hpp"
#include "jsyz/uni_poly.hpp"

namespace jsyz {

/// An irreducible curve H: h = 0 of degree e with delta nodes and kappa simple
/// cusps, an apex p off H, and the lines through p: the simple tangents, the
/// secants through the nodes and the secants through the cusps.
template <class S>
struct TangentConeSpec {
  HomogPoly<S> h;
  ProjPoint<S> apex;
  std::vector<ProjPoint<S>> nodes;
  std::vector<ProjPoint<S>> cusps;
  std::vector<ProjLine<S>> tangents;
  std::vector<ProjLine<S>> node_secants;
  std::vector<ProjLine<S>> cusp_secants;

  int e() const { return h.degree(); }
  int delta() const { return static_cast<int>(nodes.size()); }
  int kappa() const { return static_cast<int>(cusps.size()); }
  /// e(e - 1) - 2 delta - 3 kappa
  int m0() const { return e() * (e() - 1) - 2 * delta() - 3 * kappa(); }
};

struct TangentLedger {
  long apex = 0;          // (m - 1)^2
  long tangents = 0;      // m0 (e + 1)
  long node_secants = 0;  // delta (e + 2)
  long cusp_secants = 0;  // kappa (e + 3)
  long total() const { return apex + tangents + node_secants + cusp_secants; }
};

template <class S>
struct TangentResult {
  HomogPoly<S> f;
  std::pair<int, int> expected_exponents;  // (e, e^2 - e - 1 - delta - 2 kappa)
  TangentLedger ledger;
  FreenessReport<S> report;
};

/// Polynomial lambda -> h(lambda a + q); degree deg h when h(a) != 0.
template <class S>
UniPoly<S> restrict_to_line(const HomogPoly<S>& h, const std::array<S, 3>& a, const std::array<S, 3>& q);

/// Checks every hypothesis of the construction and throws InputError naming the
/// first one that fails.
template <class S>
void validate_tangent_spec(const TangentConeSpec<S>& spec);

/// f = h times all the lines; classify must give free with the expected
/// exponents and the per-line Tjurina ledger must equal tau(f), otherwise
/// InconsistencyError.
template <class S>
TangentResult<S> tangent_arrangement(const TangentConeSpec<S>& spec, const Backend& backend = {});

struct TangentSearchStats {
  int primes_tried = 0;
  int apexes_tried = 0;
};

/// Searches primes of the backend stream and pseudo-random apexes until the
/// m0 tangent lines from the apex are all defined over GF(p); the nodes and
/// cusps of H must be given over Q. Throws InputError when nothing is found
/// within the limits.
TangentConeSpec<ModP> find_tangent_instance(const QPoly& h, const std::vector<ProjPoint<Rational>>& nodes,
                                            const std::vector<ProjPoint<Rational>>& cusps, const Backend& backend,
                                            TangentSearchStats* stats = nullptr, int max_primes = 64,
                                            int apexes_per_prime = 200);

}  // namespace jsyz
