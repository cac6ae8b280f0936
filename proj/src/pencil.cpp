#include "jsyz/pencil.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "jsyz/gcd.hpp"
#include "jsyz/resultant.hpp"

namespace jsyz {

namespace {

template <class S>
std::array<HomogPoly<S>, 3> cross(const std::array<HomogPoly<S>, 3>& a, const std::array<HomogPoly<S>, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class S>
std::array<HomogPoly<S>, 3> scaled(const HomogPoly<S>& s, const std::array<HomogPoly<S>, 3>& v) {
  return {s * v[0], s * v[1], s * v[2]};
}

template <class S>
std::array<HomogPoly<S>, 3> sum3(const std::array<HomogPoly<S>, 3>& a, const std::array<HomogPoly<S>, 3>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <class S>
bool proportional(const HomogPoly<S>& a, const HomogPoly<S>& b) {
  if (a.is_zero() || b.is_zero()) return true;
  return a.monic() == b.monic();
}

template <class S>
void check_pencil(const PencilSpec<S>& P) {
  if (P.q1.is_zero() || P.q2.is_zero()) throw InputError("pencil generators must be nonzero");
  if (P.q1.degree() != P.q2.degree())
    throw InputError("pencil generators have degrees " + std::to_string(P.q1.degree()) + " and " +
                     std::to_string(P.q2.degree()));
  if (P.k() < 1) throw InputError("pencil generators must have degree at least 1");
  if (proportional(P.q1, P.q2)) throw InputError("pencil generators are proportional");
}

// Roots of u in GF(p) when u splits there into distinct linear factors.
std::optional<std::vector<ModP>> split_roots(const UniPoly<ModP>& u, std::mt19937_64& rng) {
  auto roots = roots_mod_p(u, rng);
  if (static_cast<int>(roots.size()) != u.degree()) return std::nullopt;
  return roots;
}

// Member polynomials at every root of `factor` (at_infinity: q2), checking a
// predicate on each; irrational roots are examined over a prime where the
// factor splits.
template <class S, class Pred>
bool all_members_at_root(const PencilSpec<S>& P, const DiscriminantRoot<S>& root, const Backend& backend, Pred pred) {
  if (root.at_infinity) return pred(P.q2);
  if (root.factor.degree() == 1) return pred(build_member(P, S(-root.factor.coeff(0))));
  if constexpr (std::is_same_v<S, ModP>) {
    std::mt19937_64 rng(backend.seed);
    auto roots = split_roots(root.factor, rng);
    if (!roots) throw InputError("factor " + root.factor.to_string() + " does not split over the base field");
    for (const auto& s : *roots)
      if (!pred(build_member(P, s))) return false;
    return true;
  } else {
    std::mt19937_64 rng(backend.seed);
    for (int i = 0; i < 400; ++i) {
      const std::uint64_t p = backend.prime(i);
      const PrimeField F(p);
      UniPoly<ModP> fp;
      PencilSpec<ModP> Pp;
      try {
        fp = reduce_mod(root.factor, F);
        Pp = reduce_mod(P, F);
      } catch (const std::domain_error&) {
        continue;
      }
      if (fp.degree() != root.factor.degree()) continue;
      auto roots = split_roots(fp, rng);
      if (!roots) continue;
      for (const auto& s : *roots)
        if (!pred(build_member(Pp, s))) return false;
      return true;
    }
    throw InconsistencyError("no splitting prime found for " + root.factor.to_string());
  }
}

template <class S>
long tau_of(const HomogPoly<S>& g, const Backend& backend) {
  return global_tjurina(g, backend).tau;
}

}  // namespace

template <class S>
std::string MemberParam<S>::describe(const std::string& var) const {
  switch (kind) {
    case Kind::value:
      return var + " = " + jsyz::to_string(t);
    case Kind::infinity:
      return var + " = infinity";
    case Kind::roots_of:
      break;
  }
  return "roots of " + phi.to_string(var);
}

template <class S>
int PencilProductSpec<S>::m() const {
  int m = 2;
  for (const auto& p : params) m += p.count();
  return m;
}

template <class S>
HomogPoly<S> build_member(const PencilSpec<S>& P, const S& t) {
  return P.q1 + P.q2 * t;
}

template <class S>
HomogPoly<S> build_member(const PencilSpec<S>& P, const MemberParam<S>& param) {
  switch (param.kind) {
    case MemberParam<S>::Kind::value:
      return build_member(P, param.t);
    case MemberParam<S>::Kind::infinity:
      return P.q2;
    case MemberParam<S>::Kind::roots_of:
      break;
  }
  return build_root_group(P, param.phi);
}

template <class S>
HomogPoly<S> build_root_group(const PencilSpec<S>& P, const UniPoly<S>& phi) {
  const int n = phi.degree();
  if (n < 1) throw InputError("parameter polynomial must have degree at least 1");
  const auto& F = P.field();
  HomogPoly<S> acc(F, n * P.k());
  const HomogPoly<S> mq1 = -P.q1;
  std::vector<HomogPoly<S>> pow1{HomogPoly<S>::constant(F, F.one())}, pow2{HomogPoly<S>::constant(F, F.one())};
  for (int j = 1; j <= n; ++j) {
    pow1.push_back(pow1.back() * mq1);
    pow2.push_back(pow2.back() * P.q2);
  }
  for (int j = 0; j <= n; ++j) {
    const S c = phi.coeff(j);
    if (is_zero(c)) continue;
    acc += (pow1[j] * pow2[n - j]) * c;
  }
  S scale = inverse(phi.leading());
  if (n % 2 == 1) scale = -scale;
  return acc * scale;
}

template <class S>
HomogPoly<S> build_product(const PencilProductSpec<S>& spec) {
  const auto& P = spec.pencil;
  check_pencil(P);
  if (!is_reduced(P.q1)) throw InputError("member q1 is not reduced");
  if (!is_reduced(P.q2)) throw InputError("member q2 is not reduced");
  HomogPoly<S> f = P.q1 * P.q2;
  std::vector<S> values;
  std::vector<UniPoly<S>> groups;
  for (const auto& param : spec.params) {
    switch (param.kind) {
      case MemberParam<S>::Kind::infinity:
        throw InputError("the member q2 (t = infinity) is always included; it cannot be listed again");
      case MemberParam<S>::Kind::value: {
        if (is_zero(param.t)) throw InputError("t = 0 repeats the member q1");
        if (std::find(values.begin(), values.end(), param.t) != values.end())
          throw InputError("repeated parameter t = " + jsyz::to_string(param.t));
        for (const auto& g : groups)
          if (is_zero(g.evaluate(param.t))) throw InputError("parameter " + jsyz::to_string(param.t) + " is a root of a listed polynomial");
        values.push_back(param.t);
        const auto q = build_member(P, param.t);
        if (!is_reduced(q)) throw InputError("member at t = " + jsyz::to_string(param.t) + " is not reduced");
        f *= q;
        break;
      }
      case MemberParam<S>::Kind::roots_of: {
        const auto& phi = param.phi;
        if (phi.degree() < 1) throw InputError("parameter polynomial must have degree at least 1");
        if (is_zero(phi.coeff(0))) throw InputError("parameter polynomial " + phi.to_string() + " has the root 0 (member q1)");
        if (uni_gcd(phi, phi.derivative()).degree() > 0) throw InputError("parameter polynomial " + phi.to_string() + " is not squarefree");
        for (const auto& v : values)
          if (is_zero(phi.evaluate(v))) throw InputError("parameter " + jsyz::to_string(v) + " is a root of " + phi.to_string());
        for (const auto& g : groups)
          if (uni_gcd(g, phi).degree() > 0) throw InputError("parameter polynomials share a root");
        groups.push_back(phi);
        const auto q = build_root_group(P, phi);
        if (!is_reduced(q)) throw InputError("members at the roots of " + phi.to_string() + " are not reduced");
        f *= q;
        break;
      }
    }
  }
  if (spec.h) {
    if (spec.h->is_zero()) throw InputError("residual factor h is zero");
    f *= *spec.h;
  }
  return f;
}

template <class S>
SyzygyTriple<S> wedge_syzygy(const PencilSpec<S>& P, const HomogPoly<S>& f) {
  const auto w = cross(gradient(P.q1), gradient(P.q2));
  auto s = make_triple(w[0], w[1], w[2], f.degree());
  if (s.is_zero()) throw InputError("dq1 ^ dq2 vanishes: the pencil generators are proportional");
  s.degree = 2 * P.k() - 2;
  if (!verify_syzygy(f, s)) throw InputError("dq1 ^ dq2 is not a syzygy of f: f is not a function of q1 and q2");
  return s;
}

template <class S>
SyzygyTriple<S> lemma2_syzygy(const PencilSpec<S>& P, const HomogPoly<S>& h, int m, const HomogPoly<S>& f) {
  check_pencil(P);
  if (h.is_zero()) throw InputError("residual factor h is zero");
  if (is_zero(macaulay_resultant(P.q1, P.q2, h)))
    throw InputError("q1, q2 and h have a common zero (the ideal (q1, q2, h) is not m-primary)");
  const auto g1 = gradient(P.q1), g2 = gradient(P.q2), gh = gradient(h);
  const auto& F = P.field();
  const HomogPoly<S> coef = h * F.from_int(-m);
  auto w = sum3(sum3(scaled(coef, cross(g1, g2)), scaled(-P.q2, cross(g1, gh))), scaled(P.q1, cross(g2, gh)));
  auto s = make_triple(w[0], w[1], w[2], f.degree());
  if (s.is_zero()) throw InconsistencyError("the residual syzygy vanishes although (q1, q2, h) has no common zero");
  s.degree = 2 * P.k() - 2 + h.degree();
  if (!verify_syzygy(f, s)) throw InputError("the form built from q1, q2, h is not a syzygy of f");
  return s;
}

template <class S>
UniPoly<S> DiscriminantForm<S>::radical() const {
  UniPoly<S> r = UniPoly<S>::constant(affine.field(), affine.field().one());
  for (const auto& root : roots)
    if (!root.at_infinity) r = r * root.factor;
  return r;
}

template <class S>
std::string DiscriminantForm<S>::binary_text() const {
  // D(u, v) = sum_i c_i v^i u^(N - i)
  const auto& F = affine.field();
  S scale = F.one();
  for (int i = 0; i <= affine.degree(); ++i) {
    if (!is_zero(affine.coeff(i))) {
      scale = inverse(affine.coeff(i));
      break;
    }
  }
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= affine.degree(); ++i) {
    S c = affine.coeff(i) * scale;
    if (is_zero(c)) continue;
    std::string cs = jsyz::to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    if (cs != "1") factors.push_back(cs);
    const int pu = degree - i;
    if (pu > 0) factors.push_back(pu == 1 ? "u" : "u^" + std::to_string(pu));
    if (i > 0) factors.push_back(i == 1 ? "v" : "v^" + std::to_string(i));
    if (factors.empty()) factors.push_back("1");
    for (std::size_t j = 0; j < factors.size(); ++j) out << (j ? "*" : "") << factors[j];
  }
  return first ? "0" : out.str();
}

template <class S>
DiscriminantForm<S> discriminant(const PencilSpec<S>& P, std::uint64_t seed) {
  check_pencil(P);
  const int k = P.k();
  if (k < 2) throw InputError("the discriminant needs pencils of degree k >= 2");
  const auto& F = P.field();
  DiscriminantForm<S> D;
  D.k = k;
  D.degree = 3 * (k - 1) * (k - 1);
  std::vector<std::pair<S, S>> samples;
  for (int i = 0; i <= D.degree; ++i) {
    const S t = F.from_int(i);
    const auto g = gradient(build_member(P, t));
    S value = F.zero();
    if (!g[0].is_zero() && !g[1].is_zero() && !g[2].is_zero())
      value = macaulay_resultant(g[0], g[1], g[2], seed + static_cast<std::uint64_t>(i));
    samples.emplace_back(t, value);
  }
  D.affine = uni_interpolate(samples);
  if (D.affine.is_zero())
    throw InputError("the discriminant vanishes identically: every member is singular (the pencil needs a "
                     "0-dimensional base locus and reduced members)");
  D.affine = D.affine.monic();
  D.infinity_multiplicity = D.degree - D.affine.degree();
  for (auto& [factor, mult] : uni_squarefree(D.affine)) {
    if (factor.degree() < 1) continue;
    D.roots.push_back({factor.monic(), false, mult});
    D.sum_mu += factor.degree() * mult;
    D.distinct_roots += factor.degree();
  }
  if (D.infinity_multiplicity > 0) {
    D.roots.push_back({UniPoly<S>(F), true, D.infinity_multiplicity});
    D.sum_mu += D.infinity_multiplicity;
    D.distinct_roots += 1;
  }
  return D;
}

template <class S>
GenericityReport genericity_check(const PencilSpec<S>& P, std::uint64_t seed) {
  check_pencil(P);
  GenericityReport rep;
  rep.zero_dimensional = gcd_is_constant<S>({P.q1, P.q2});
  if (!rep.zero_dimensional) return rep;
  const int k = P.k();
  const int n = k * k;
  const auto& F = P.field();
  for (int attempt = 0; attempt < 4 && !rep.transverse; ++attempt) {
    const auto A = random_unimodular<S>(F, seed * 104729 + static_cast<std::uint64_t>(attempt), 3 + attempt);
    const auto a = substitute_linear(P.q1, A), b = substitute_linear(P.q2, A);
    if (is_zero(a.coefficient({0, 0, k})) || is_zero(b.coefficient({0, 0, k}))) continue;
    std::vector<std::pair<S, S>> samples;
    for (int i = 0; i <= n; ++i) {
      const S x0 = F.from_int(i);
      auto restrict_z = [&](const HomogPoly<S>& q) {
        std::vector<S> c(k + 1, F.zero());
        for (const auto& [e, v] : q.terms()) {
          S t = v;
          for (int j = 0; j < e.x; ++j) t *= x0;
          c[e.z] += t;
        }
        return UniPoly<S>(F, c);
      };
      samples.emplace_back(x0, uni_resultant(restrict_z(a), restrict_z(b)));
    }
    const auto R = uni_interpolate(samples);
    if (R.is_zero()) continue;
    const int at_infinity = n - R.degree();
    if (at_infinity > 1) continue;
    if (uni_gcd(R, R.derivative()).degree() > 0) continue;
    rep.transverse = true;
    rep.base_points = n;
  }
  return rep;
}

template <class S>
TotalMuReport total_mu_check(const PencilSpec<S>& P, const Backend& backend, std::uint64_t seed) {
  const auto D = discriminant(P, seed);
  TotalMuReport rep;
  rep.sum_mu = D.sum_mu;
  rep.expected = D.degree;
  rep.ok = rep.sum_mu == rep.expected;
  rep.distinct_roots = D.distinct_roots;
  rep.distinct_ok = rep.distinct_roots >= 3;
  rep.equality_case = rep.distinct_roots == 3;
  if (rep.equality_case) {
    bool all = true;
    for (const auto& root : D.roots) {
      all = all && all_members_at_root(P, root, backend, [&](const auto& member) {
              return ar_dimension(member, 0, backend) > 0 && is_reduced(member);
            });
    }
    rep.concurrent_lines = all;
  }
  return rep;
}

template <class S>
ThmPenVerdict<S> thmPEN_classify(const PencilProductSpec<S>& spec, const Backend& backend, std::uint64_t seed) {
  const auto& P = spec.pencil;
  check_pencil(P);
  ThmPenVerdict<S> v;
  v.k = P.k();
  v.m = spec.m();
  if (spec.h) throw InputError("the pencil freeness criterion applies to products of members only (no h)");
  if (v.k < 2) throw InputError("the pencil freeness criterion needs k >= 2");
  if (v.m < 3) throw InputError("the pencil freeness criterion needs m >= 3 members");
  if (!genericity_check(P, seed).generic())
    throw InputError("genericity failure: q1 and q2 must meet transversely in exactly k^2 points");
  const auto f = build_product(spec);
  const auto& F = P.field();
  const auto D = discriminant(P, seed);

  // chosen finite parameters: t = 0, the values, the roots of each phi
  UniPoly<S> chosen = UniPoly<S>::identity(F);
  for (const auto& param : spec.params) {
    if (param.kind == MemberParam<S>::Kind::value) chosen = chosen * UniPoly<S>::linear_root(F, param.t);
    if (param.kind == MemberParam<S>::Kind::roots_of) chosen = chosen * param.phi;
  }
  v.condition_a = (chosen % D.radical()).is_zero();

  const long base = static_cast<long>(v.k) * v.k;
  auto group_tau = [&](const MemberParam<S>& param) -> long {
    const auto g = build_member(P, param);
    const long n = param.count();
    return tau_of(g, backend) - base * (n - 1) * (n - 1);
  };
  v.member_tau_sum = tau_of(P.q1, backend) + tau_of(P.q2, backend);
  std::vector<std::pair<UniPoly<S>, long>> group_taus;
  for (const auto& param : spec.params) {
    const long t = group_tau(param);
    v.member_tau_sum += t;
    if (param.kind == MemberParam<S>::Kind::roots_of) group_taus.emplace_back(param.phi.monic(), t);
  }
  v.condition_b = v.member_tau_sum == D.degree;
  v.condition1 = v.condition_a && v.condition_b;

  for (const auto& root : D.roots) {
    SingularMember<S> sm;
    sm.root = root;
    if (root.at_infinity) {
      sm.chosen = true;
      sm.tau = tau_of(P.q2, backend);
    } else {
      sm.chosen = (chosen % root.factor).is_zero();
      if (root.factor.degree() == 1) {
        sm.tau = tau_of(build_member(P, S(-root.factor.coeff(0))), backend);
      } else {
        for (const auto& [phi, t] : group_taus)
          if (phi == root.factor) sm.tau = t;
      }
    }
    v.singular_members.push_back(std::move(sm));
  }

  v.report = classify(f, backend);
  v.expected_exponents = sorted_pair(2 * v.k - 2, v.m * v.k - 2 * v.k + 1);
  v.expected_tau = static_cast<long>(D.degree) + base * (v.m - 1) * (v.m - 1);
  v.free_with_expected = v.report.cls == CurveClass::free && v.report.exponents &&
                         sorted_pair(v.report.exponents->first, v.report.exponents->second) == v.expected_exponents;
  if (v.condition1 != v.free_with_expected) {
    std::ostringstream msg;
    msg << "pencil freeness criterion violated: condition (1) is " << (v.condition1 ? "true" : "false")
        << " but the curve is " << (v.free_with_expected ? "" : "not ") << "free with exponents ("
        << v.expected_exponents.first << ", " << v.expected_exponents.second << ")";
    throw InconsistencyError(msg.str());
  }
  if (v.condition1 && v.report.tau != v.expected_tau)
    throw InconsistencyError("tau = " + std::to_string(v.report.tau) + " differs from 3(k-1)^2 + k^2(m-1)^2 = " +
                             std::to_string(v.expected_tau));
  return v;
}

template <class S>
PencilCase thm11_trichotomy(const PencilProductSpec<S>& spec, const Backend& backend) {
  const auto& P = spec.pencil;
  check_pencil(P);
  PencilCase c;
  c.k = P.k();
  c.m = spec.m();
  if (spec.h) throw InputError("this case analysis is for products of members only (no h)");
  if (c.m < 3) throw InputError("need m >= 3 members");
  if (c.k < 2) throw InputError("need members of degree k >= 2");
  if (!gcd_is_constant<S>({P.q1, P.q2})) throw InputError("the pencil must have a 0-dimensional base locus");
  const auto f = build_product(spec);
  const auto rep = classify(f, backend);
  c.d = rep.d;
  c.r = rep.mdr;
  c.tau = rep.tau;
  const int k = c.k, r = c.r;
  std::ostringstream why;
  if (r == 2 * k - 2) {
    c.case_id = 0;
    why << "mdr = 2k - 2 = " << r;
  } else if (c.m == 3 && r <= 2 * k - 3 && k >= 4 && r <= k + 1) {
    if (r != k + 1) {
      why << "mdr = " << r << " < k + 1 = " << k + 1;
      throw InconsistencyError("pencil case analysis violated: " + why.str());
    }
    if (!thmF_gate(c.d, r, c.tau).attained)
      throw InconsistencyError("pencil case analysis violated: mdr = k + 1 but the curve is not free");
    c.case_id = 1;
    c.exponents = std::make_pair(k + 1, 2 * k - 2);
    why << "m = 3, mdr = k + 1 = " << r << ", free with exponents (" << k + 1 << ", " << 2 * k - 2 << ")";
  } else if (c.m == 3 && k >= 5 && r >= k + 2 && r <= 2 * k - 3) {
    c.case_id = 2;
    why << "m = 3, k + 2 = " << k + 2 << " <= mdr = " << r << " <= 2k - 3 = " << 2 * k - 3;
  } else {
    why << "mdr = " << r << " with k = " << k << ", m = " << c.m << " fits no case";
    throw InconsistencyError("pencil case analysis violated: " + why.str());
  }
  c.description = why.str();
  return c;
}

template <class S>
PencilCase thm13_trichotomy(const PencilProductSpec<S>& spec, const Backend& backend) {
  const auto& P = spec.pencil;
  check_pencil(P);
  if (!spec.h) throw InputError("this case analysis needs the residual factor h");
  PencilCase c;
  c.k = P.k();
  c.m = spec.m();
  c.deg_h = spec.h->degree();
  if (c.m < 2) throw InputError("need m >= 2 members");
  if (is_zero(macaulay_resultant(P.q1, P.q2, *spec.h)))
    throw InputError("q1, q2 and h must have no common point");
  const auto f = build_product(spec);
  const auto rep = classify(f, backend);
  c.d = rep.d;
  c.r = rep.mdr;
  c.tau = rep.tau;
  const int generic = 2 * c.k - 2 + c.deg_h;
  const int low = (c.m - 2) * c.k + 1;
  const int r = c.r;
  std::ostringstream why;
  if (r == generic) {
    c.case_id = 0;
    why << "mdr = 2k - 2 + deg h = " << r;
  } else if (r < generic && r <= low) {
    if (r != low) {
      why << "mdr = " << r << " < (m - 2)k + 1 = " << low;
      throw InconsistencyError("pencil case analysis violated: " + why.str());
    }
    if (!thmF_gate(c.d, r, c.tau).attained)
      throw InconsistencyError("pencil case analysis violated: mdr = (m - 2)k + 1 but the curve is not free");
    c.case_id = 1;
    c.exponents = std::make_pair(low, c.d - low - 1);
    why << "mdr = (m - 2)k + 1 = " << r << ", free with exponents (" << low << ", " << c.d - low - 1 << ")";
  } else if (r < generic) {
    c.case_id = 2;
    why << low + 1 << " <= mdr = " << r << " <= " << generic - 1;
  } else {
    why << "mdr = " << r << " exceeds 2k - 2 + deg h = " << generic;
    throw InconsistencyError("pencil case analysis violated: " + why.str());
  }
  c.description = why.str();
  return c;
}

UniPoly<ModP> reduce_mod(const UniPoly<Rational>& u, const PrimeField& field) {
  std::vector<ModP> c;
  for (const auto& q : u.coeffs()) c.push_back(field.from_rational(q));
  return UniPoly<ModP>(field, std::move(c));
}

PencilSpec<ModP> reduce_mod(const PencilSpec<Rational>& P, const PrimeField& field) {
  return PencilSpec<ModP>{reduce_mod(P.q1, field), reduce_mod(P.q2, field)};
}

#define JSYZ_INSTANTIATE(S)                                                                                     \
  template struct MemberParam<S>;                                                                               \
  template struct PencilProductSpec<S>;                                                                         \
  template struct DiscriminantForm<S>;                                                                          \
  template HomogPoly<S> build_member(const PencilSpec<S>&, const S&);                                           \
  template HomogPoly<S> build_member(const PencilSpec<S>&, const MemberParam<S>&);                              \
  template HomogPoly<S> build_root_group(const PencilSpec<S>&, const UniPoly<S>&);                              \
  template HomogPoly<S> build_product(const PencilProductSpec<S>&);                                             \
  template SyzygyTriple<S> wedge_syzygy(const PencilSpec<S>&, const HomogPoly<S>&);                             \
  template SyzygyTriple<S> lemma2_syzygy(const PencilSpec<S>&, const HomogPoly<S>&, int, const HomogPoly<S>&);  \
  template DiscriminantForm<S> discriminant(const PencilSpec<S>&, std::uint64_t);                               \
  template GenericityReport genericity_check(const PencilSpec<S>&, std::uint64_t);                              \
  template TotalMuReport total_mu_check(const PencilSpec<S>&, const Backend&, std::uint64_t);                   \
  template ThmPenVerdict<S> thmPEN_classify(const PencilProductSpec<S>&, const Backend&, std::uint64_t);        \
  template PencilCase thm11_trichotomy(const PencilProductSpec<S>&, const Backend&);                            \
  template PencilCase thm13_trichotomy(const PencilProductSpec<S>&, const Backend&);

JSYZ_INSTANTIATE(Rational)
JSYZ_INSTANTIATE(ModP)
#undef JSYZ_INSTANTIATE

}  // namespace jsyz
