#include "jsyz/tangent.hpp"

#include <random>

#include "jsyz/gcd.hpp"

namespace jsyz {

namespace {

template <class S>
std::array<S, 3> cross(const std::array<S, 3>& u, const std::array<S, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <class S>
bool is_null(const std::array<S, 3>& v) {
  return jsyz::is_zero(v[0]) && jsyz::is_zero(v[1]) && jsyz::is_zero(v[2]);
}

template <class S>
bool proportional(const std::array<S, 3>& u, const std::array<S, 3>& v) {
  return is_null(cross(u, v));
}

template <class S>
S det3(const std::array<S, 3>& a, const std::array<S, 3>& b, const std::array<S, 3>& c) {
  const auto bc = cross(b, c);
  return a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2];
}

template <class S>
std::array<S, 3> combine(const S& la, const std::array<S, 3>& a, const std::array<S, 3>& q) {
  return {la * a[0] + q[0], la * a[1] + q[1], la * a[2] + q[2]};
}

// A point of the line other than the apex.
template <class S>
std::array<S, 3> second_point(const ProjLine<S>& line, const std::array<S, 3>& apex) {
  const auto F = field_of(apex[0]);
  for (int i = 0; i < 3; ++i) {
    std::array<S, 3> w{F.zero(), F.zero(), F.zero()};
    w[i] = F.one();
    const auto q = cross(line.cov, w);
    if (!is_null(q) && !proportional(q, apex)) return q;
  }
  throw InputError("line " + to_string(line) + " has no second point");
}

// Multiplicity pattern of H on a line through the apex: exactly one double
// intersection and all others simple. Returns the double point.
template <class S>
std::optional<std::array<S, 3>> single_double_point(const HomogPoly<S>& h, const std::array<S, 3>& apex,
                                                     const ProjLine<S>& line) {
  const auto q = second_point(line, apex);
  const UniPoly<S> g = restrict_to_line(h, apex, q);
  std::optional<std::array<S, 3>> out;
  for (const auto& [factor, mult] : uni_squarefree(g)) {
    if (factor.degree() <= 0) continue;
    if (mult == 1) continue;
    if (mult > 2 || factor.degree() != 1 || out) return std::nullopt;
    const S root = -factor.coeff(0) / factor.coeff(1);
    out = combine(root, apex, q);
  }
  return out;
}

template <class S>
bool singular_at(const HomogPoly<S>& h, const std::array<S, 3>& pt) {
  return jsyz::is_zero(h.diff(0).evaluate(pt)) && jsyz::is_zero(h.diff(1).evaluate(pt)) &&
         jsyz::is_zero(h.diff(2).evaluate(pt));
}

template <class S>
int hessian_rank(const HomogPoly<S>& h, const std::array<S, 3>& pt) {
  ExactMatrix<S> m(h.field(), 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = h.diff(i).diff(j).evaluate(pt);
  return rank(m);
}

// Nodes have a nondegenerate quadratic cone, cusps a double line; the global
// Tjurina number delta + 2 kappa leaves no room for other singularities.
template <class S>
void validate_singular_data(const HomogPoly<S>& h, const std::vector<ProjPoint<S>>& nodes,
                            const std::vector<ProjPoint<S>>& cusps) {
  const int e = h.degree();
  if (e < 3) throw InputError("the curve H must have degree at least 3, got " + std::to_string(e));
  if (!is_reduced(h)) throw InputError("the curve H is not reduced");
  for (const auto& n : nodes) {
    if (!singular_at(h, n.coords)) throw InputError("listed node " + to_string(n) + " is not a singular point of H");
    if (hessian_rank(h, n.coords) != 2) throw InputError("listed node " + to_string(n) + " is not an ordinary node");
  }
  for (const auto& c : cusps) {
    if (!singular_at(h, c.coords)) throw InputError("listed cusp " + to_string(c) + " is not a singular point of H");
    if (hessian_rank(h, c.coords) != 1) throw InputError("listed cusp " + to_string(c) + " is not a cusp");
  }
  const long expected = static_cast<long>(nodes.size()) + 2 * static_cast<long>(cusps.size());
  const long tau = global_tjurina(h).tau;
  if (tau != expected)
    throw InputError("H has total Tjurina number " + std::to_string(tau) + " but the listed nodes and cusps give " +
                     std::to_string(expected));
}

}  // namespace

template <class S>
UniPoly<S> restrict_to_line(const HomogPoly<S>& h, const std::array<S, 3>& a, const std::array<S, 3>& q) {
  const auto F = h.field();
  std::vector<std::pair<S, S>> samples;
  for (int i = 0; i <= h.degree(); ++i) {
    const S la = F.from_int(i);
    samples.emplace_back(la, h.evaluate(combine(la, a, q)));
  }
  return uni_interpolate(samples);
}

template <class S>
void validate_tangent_spec(const TangentConeSpec<S>& spec) {
  const auto& h = spec.h;
  validate_singular_data(h, spec.nodes, spec.cusps);
  const auto& a = spec.apex.coords;
  if (jsyz::is_zero(h.evaluate(a))) throw InputError("the apex " + to_string(spec.apex) + " lies on H");
  if (spec.m0() < 0) throw InputError("too many singular points for the degree of H");
  if (static_cast<int>(spec.tangents.size()) != spec.m0())
    throw InputError("expected " + std::to_string(spec.m0()) + " tangent lines from the apex, got " +
                     std::to_string(spec.tangents.size()));
  if (spec.node_secants.size() != spec.nodes.size()) throw InputError("need exactly one secant line per node");
  if (spec.cusp_secants.size() != spec.cusps.size()) throw InputError("need exactly one secant line per cusp");

  auto through_apex = [&](const ProjLine<S>& l) {
    if (!jsyz::is_zero(l.evaluate(a))) throw InputError("line " + to_string(l) + " does not pass through the apex");
  };
  for (const auto& l : spec.tangents) {
    through_apex(l);
    auto dp = single_double_point(h, a, l);
    if (!dp) throw InputError("line " + to_string(l) + " is not a simple tangent of H");
    if (singular_at(h, *dp)) throw InputError("tangent line " + to_string(l) + " passes through a singular point");
  }
  auto check_secant = [&](const ProjLine<S>& l, const ProjPoint<S>& s, const char* kind) {
    through_apex(l);
    if (!jsyz::is_zero(l.evaluate(s.coords)))
      throw InputError(std::string(kind) + " secant " + to_string(l) + " misses " + to_string(s));
    auto dp = single_double_point(h, a, l);
    if (!dp || !proportional(*dp, s.coords))
      throw InputError(std::string(kind) + " secant " + to_string(l) + " is tangent to H or to a branch at " +
                       to_string(s));
  };
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) check_secant(spec.node_secants[i], spec.nodes[i], "node");
  for (std::size_t i = 0; i < spec.cusps.size(); ++i) check_secant(spec.cusp_secants[i], spec.cusps[i], "cusp");
}

template <class S>
TangentResult<S> tangent_arrangement(const TangentConeSpec<S>& spec, const Backend& backend) {
  validate_tangent_spec(spec);
  std::vector<ProjLine<S>> lines = spec.tangents;
  lines.insert(lines.end(), spec.node_secants.begin(), spec.node_secants.end());
  lines.insert(lines.end(), spec.cusp_secants.begin(), spec.cusp_secants.end());
  const LineArrangement<S> A(spec.h.field(), lines);

  TangentResult<S> out;
  out.f = spec.h * A.polynomial();
  const int e = spec.e();
  const long m = A.size();
  out.expected_exponents = sorted_pair(e, e * e - e - 1 - spec.delta() - 2 * spec.kappa());
  out.ledger.apex = (m - 1) * (m - 1);
  out.ledger.tangents = static_cast<long>(spec.m0()) * (e + 1);
  out.ledger.node_secants = static_cast<long>(spec.delta()) * (e + 2);
  out.ledger.cusp_secants = static_cast<long>(spec.kappa()) * (e + 3);
  out.report = classify(out.f, backend);
  if (out.report.cls != CurveClass::free || out.report.exponents != out.expected_exponents)
    throw InconsistencyError("tangent arrangement classified as " + to_string(out.report.cls) +
                             ", expected free with exponents (" + std::to_string(out.expected_exponents.first) + ", " +
                             std::to_string(out.expected_exponents.second) + ")");
  if (out.report.tau != out.ledger.total())
    throw InconsistencyError("tau(f) = " + std::to_string(out.report.tau) + " but the line ledger sums to " +
                             std::to_string(out.ledger.total()));
  return out;
}

TangentConeSpec<ModP> find_tangent_instance(const QPoly& h, const std::vector<ProjPoint<Rational>>& nodes,
                                            const std::vector<ProjPoint<Rational>>& cusps, const Backend& backend,
                                            TangentSearchStats* stats, int max_primes, int apexes_per_prime) {
  validate_singular_data(h, nodes, cusps);
  const int e = h.degree();
  const int N = e * (e - 1);
  const int m0 = N - 2 * static_cast<int>(nodes.size()) - 3 * static_cast<int>(cusps.size());
  if (m0 < 0) throw InputError("too many singular points for the degree of H");
  TangentSearchStats local;
  TangentSearchStats& st = stats ? *stats : local;

  for (int i = 0; i < max_primes; ++i) {
    const std::uint64_t p = backend.prime(i);
    const PrimeField F(p);
    ++st.primes_tried;
    PPoly hp;
    std::vector<ProjPoint<ModP>> np, cp;
    try {
      hp = reduce_mod(h, F);
      auto red = [&](const ProjPoint<Rational>& pt) {
        return make_point<ModP>({F.from_rational(pt.coords[0]), F.from_rational(pt.coords[1]),
                                 F.from_rational(pt.coords[2])});
      };
      for (const auto& n : nodes) np.push_back(red(n));
      for (const auto& c : cusps) cp.push_back(red(c));
    } catch (const std::domain_error&) {
      continue;
    }
    if (hp.degree() != e || hp.is_zero()) continue;
    std::mt19937_64 rng(backend.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i));
    std::uniform_int_distribution<std::uint64_t> coord(0, p - 1);
    auto random_vec = [&] { return std::array<ModP, 3>{ModP(coord(rng), p), ModP(coord(rng), p), ModP(coord(rng), p)}; };

    for (int attempt = 0; attempt < apexes_per_prime; ++attempt) {
      ++st.apexes_tried;
      const auto a = random_vec(), b = random_vec(), c = random_vec();
      const ModP det = det3(a, b, c);
      if (jsyz::is_zero(det) || jsyz::is_zero(hp.evaluate(a))) continue;
      auto point_on = [&](const ModP& s) {
        return std::array<ModP, 3>{b[0] + s * c[0], b[1] + s * c[1], b[2] + s * c[2]};
      };
      // discriminant of the restriction to the line through a and b + s c
      std::vector<std::pair<ModP, ModP>> samples;
      for (int j = 0; j <= N + 2; ++j) {
        const ModP s = F.from_int(j);
        const auto g = restrict_to_line(hp, a, point_on(s));
        samples.emplace_back(s, uni_resultant(g, g.derivative()));
      }
      UniPoly<ModP> disc = uni_interpolate(samples);
      if (disc.degree() != N) continue;  // a special line sits at s = infinity

      // parameter of the line through a and a given point, via Cramer's rule
      auto parameter = [&](const std::array<ModP, 3>& pt) -> std::optional<ModP> {
        const ModP x1 = det3(a, pt, c) / det;
        const ModP x2 = det3(a, b, pt) / det;
        if (jsyz::is_zero(x1)) return std::nullopt;
        return x2 / x1;
      };
      bool usable = true;
      std::vector<ModP> special;
      auto divide_out = [&](const ProjPoint<ModP>& pt, int power) {
        const auto s = parameter(pt.coords);
        if (!s) return false;
        const auto lin = UniPoly<ModP>::linear_root(F, *s);
        for (int k = 0; k < power; ++k) {
          auto [q, r] = disc.divmod(lin);
          if (!r.is_zero()) return false;
          disc = q;
        }
        special.push_back(*s);
        return true;
      };
      for (const auto& n : np) usable = usable && divide_out(n, 2);
      for (const auto& cu : cp) usable = usable && divide_out(cu, 3);
      if (!usable) continue;
      const auto roots = roots_mod_p(disc, rng);
      if (static_cast<int>(roots.size()) != m0 || disc.degree() != m0) continue;
      bool clash = false;
      for (const auto& r : roots)
        for (const auto& s : special) clash = clash || r == s;
      for (std::size_t x = 0; x < special.size(); ++x)
        for (std::size_t y = x + 1; y < special.size(); ++y) clash = clash || special[x] == special[y];
      if (clash) continue;

      TangentConeSpec<ModP> spec;
      spec.h = hp;
      spec.apex = make_point(a);
      spec.nodes = np;
      spec.cusps = cp;
      for (const auto& r : roots) spec.tangents.push_back(make_line(cross(a, point_on(r))));
      for (const auto& n : np) spec.node_secants.push_back(make_line(cross(a, n.coords)));
      for (const auto& cu : cp) spec.cusp_secants.push_back(make_line(cross(a, cu.coords)));
      try {
        validate_tangent_spec(spec);
      } catch (const InputError&) {
        continue;
      }
      return spec;
    }
  }
  throw InputError("no tangent-line instance found within " + std::to_string(max_primes) + " primes");
}

template UniPoly<Rational> restrict_to_line(const QPoly&, const std::array<Rational, 3>&, const std::array<Rational, 3>&);
template UniPoly<ModP> restrict_to_line(const PPoly&, const std::array<ModP, 3>&, const std::array<ModP, 3>&);
template void validate_tangent_spec(const TangentConeSpec<Rational>&);
template void validate_tangent_spec(const TangentConeSpec<ModP>&);
template TangentResult<Rational> tangent_arrangement(const TangentConeSpec<Rational>&, const Backend&);
template TangentResult<ModP> tangent_arrangement(const TangentConeSpec<ModP>&, const Backend&);

}  // namespace jsyz
