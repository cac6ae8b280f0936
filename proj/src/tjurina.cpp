#include "jsyz/tjurina.hpp"

#include <algorithm>
#include <sstream>

#include "jsyz/gcd.hpp"

namespace jsyz {

template <class S>
long milnor_hilbert(const HomogPoly<S>& f, int k, const Backend& backend) {
  if (k < 0) return 0;
  const auto g = gradient(f);
  return monomial_count(k) - graded_map_rank(std::vector<HomogPoly<S>>{g[0], g[1], g[2]}, k, backend);
}

template <class S>
MilnorProfile global_tjurina(const HomogPoly<S>& f, const Backend& backend) {
  MilnorProfile prof;
  const int d = f.degree();
  prof.d = d;
  const int start = std::max(0, 3 * d - 6);
  const int last = std::max(start, 3 * d - 3);
  for (int k = start; k <= last; ++k) {
    if (!prof.values.count(k)) prof.values[k] = milnor_hilbert(f, k, backend);
    prof.values[k + 1] = milnor_hilbert(f, k + 1, backend);
    if (prof.values[k] == prof.values[k + 1]) {
      prof.tau = prof.values[k];
      prof.stabilization_degree = k;
      prof.extended = k > start;
      return prof;
    }
  }
  std::ostringstream msg;
  msg << "Hilbert function of the Milnor algebra did not stabilize by k = " << last << " (is f reduced?):";
  for (const auto& [k, v] : prof.values) msg << ' ' << k << ':' << v;
  throw InputError(msg.str());
}

long dpw_phi1(int d, int r) {
  return static_cast<long>(d - 1) * (d - 1) - static_cast<long>(r) * (d - 1 - r);
}

long dpw_phi2(int d, int r) {
  const long n = 2L * r + 2 - d;
  return dpw_phi1(d, r) - (n >= 2 ? n * (n - 1) / 2 : 0);
}

DpwBound dpw_bounds(int d, int r) {
  if (2 * r <= d - 1) return {dpw_phi1(d, r), "phi1"};
  return {dpw_phi2(d, r), "phi2"};
}

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::free:
      return "free";
    case CurveClass::nearly_free:
      return "nearly-free";
    case CurveClass::cone:
      return "cone";
    case CurveClass::neither:
      break;
  }
  return "neither";
}

CurveClass classify_numbers(int d, int r, long tau, std::optional<std::pair<int, int>>* exponents) {
  if (exponents) exponents->reset();
  if (r == 0) return CurveClass::cone;
  if (2 * r <= d - 1 && tau == dpw_phi1(d, r)) {
    if (exponents) *exponents = std::make_pair(r, d - 1 - r);
    return CurveClass::free;
  }
  if (2 * r <= d && tau == dpw_phi1(d, r) - 1) {
    if (exponents) *exponents = std::make_pair(r, d - r);
    return CurveClass::nearly_free;
  }
  return CurveClass::neither;
}

template <class S>
FreenessReport<S> classify(const HomogPoly<S>& f, const Backend& backend) {
  if (f.is_zero() || f.degree() < 2) throw InputError("classification needs a form of degree at least 2");
  if (!is_reduced(f)) throw InputError("f is not reduced (it has a repeated factor)");
  FreenessReport<S> rep;
  rep.d = f.degree();
  rep.backend = backend;
  rep.field = f.field().tag();
  MdrResult<S> m = mdr(f, backend);
  rep.mdr = m.mdr;
  rep.certificate = m.certificate;
  rep.profile = global_tjurina(f, backend);
  rep.tau = rep.profile.tau;
  rep.phi1 = dpw_phi1(rep.d, rep.mdr);
  rep.phi2 = dpw_phi2(rep.d, rep.mdr);
  rep.bound = dpw_bounds(rep.d, rep.mdr);
  if (rep.tau > rep.bound.value)
    throw InconsistencyError("tau = " + std::to_string(rep.tau) + " exceeds the du Plessis-Wall bound " +
                             rep.bound.branch + " = " + std::to_string(rep.bound.value));
  rep.cls = classify_numbers(rep.d, rep.mdr, rep.tau, &rep.exponents);
  return rep;
}

GateVerdict thmF_gate(int d, int r0, long tau) {
  if (r0 < 1) throw InputError("the freeness gate needs r0 >= 1");
  GateVerdict v;
  v.bound = dpw_phi1(d, r0);
  v.exponents = {r0, d - r0 - 1};
  if (tau > v.bound)
    throw InconsistencyError("tau = " + std::to_string(tau) + " exceeds (d-1)^2 - r0(d-r0-1) = " +
                             std::to_string(v.bound));
  v.attained = tau == v.bound;
  return v;
}

std::set<int> refine_mdr_candidates(int d, long tau, const std::set<int>& candidates) {
  std::set<int> out;
  for (int r : candidates)
    if (dpw_bounds(d, r).value >= tau) out.insert(r);
  return out;
}

template long milnor_hilbert(const QPoly&, int, const Backend&);
template long milnor_hilbert(const PPoly&, int, const Backend&);
template MilnorProfile global_tjurina(const QPoly&, const Backend&);
template MilnorProfile global_tjurina(const PPoly&, const Backend&);
template FreenessReport<Rational> classify(const QPoly&, const Backend&);
template FreenessReport<ModP> classify(const PPoly&, const Backend&);

}  // namespace jsyz
