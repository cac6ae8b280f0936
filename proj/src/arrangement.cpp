#include "jsyz/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "jsyz/parse.hpp"

namespace jsyz {

namespace {

template <class S>
std::array<S, 3> cross(const std::array<S, 3>& a, const std::array<S, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class S>
std::string key_of(const std::array<S, 3>& v) {
  return jsyz::to_string(v[0]) + ":" + jsyz::to_string(v[1]) + ":" + jsyz::to_string(v[2]);
}

template <class S>
S det3(const LinearMap<S>& M) {
  return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

}  // namespace

template <class S>
std::array<S, 3> normalize_projective(const std::array<S, 3>& v) {
  for (int i = 0; i < 3; ++i) {
    if (is_zero(v[i])) continue;
    const S inv = inverse(v[i]);
    return {v[0] * inv, v[1] * inv, v[2] * inv};
  }
  throw InputError("the zero vector is not a projective point or line");
}

template <class S>
std::string to_string(const ProjPoint<S>& p) {
  return "(" + jsyz::to_string(p.coords[0]) + ":" + jsyz::to_string(p.coords[1]) + ":" + jsyz::to_string(p.coords[2]) +
         ")";
}

template <class S>
std::string to_string(const ProjLine<S>& l) {
  return l.form().to_string();
}

template <class S>
LineArrangement<S>::LineArrangement(field_type field, std::vector<ProjLine<S>> lines)
    : field_(field), lines_(std::move(lines)) {
  std::set<std::string> seen;
  for (auto& l : lines_) {
    l.cov = normalize_projective(l.cov);
    if (!seen.insert(key_of(l.cov)).second) throw InputError("duplicate line " + to_string(l));
  }
}

template <class S>
HomogPoly<S> LineArrangement<S>::polynomial() const {
  HomogPoly<S> f = HomogPoly<S>::constant(field_, field_.one());
  for (const auto& l : lines_) f *= l.form();
  return f;
}

template <class S>
int IntersectionLattice<S>::find(const ProjPoint<S>& p) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].point == p) return static_cast<int>(i);
  return -1;
}

template <class S>
std::vector<int> IntersectionLattice<S>::multiplicity_profile() const {
  std::vector<int> out;
  for (const auto& p : points) out.push_back(p.multiplicity());
  std::sort(out.rbegin(), out.rend());
  return out;
}

template <class S>
IntersectionLattice<S> lattice(const LineArrangement<S>& A) {
  IntersectionLattice<S> L;
  const int n = A.size();
  L.point_of.assign(n, std::vector<int>(n, -1));
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto pt = normalize_projective(cross(A.lines()[i].cov, A.lines()[j].cov));
      auto [it, inserted] = index.try_emplace(key_of(pt), static_cast<int>(L.points.size()));
      if (inserted) L.points.push_back({ProjPoint<S>{pt}, {}});
      L.point_of[i][j] = L.point_of[j][i] = it->second;
    }
  }
  for (auto& p : L.points) {
    for (int i = 0; i < n; ++i)
      if (is_zero(A.lines()[i].evaluate(p.point.coords))) p.lines.push_back(i);
    L.max_multiplicity = std::max(L.max_multiplicity, p.multiplicity());
  }
  return L;
}

template <class S>
long tau_combinatorial(const IntersectionLattice<S>& L) {
  long t = 0;
  for (const auto& p : L.points) t += static_cast<long>(p.multiplicity() - 1) * (p.multiplicity() - 1);
  return t;
}

template <class S>
SyzygyTriple<S> point_syzygy(const LineArrangement<S>& A, const ProjPoint<S>& p) {
  const auto& F = A.field();
  const auto pt = normalize_projective(p.coords);
  std::vector<const ProjLine<S>*> missing;
  int m = 0;
  for (const auto& l : A.lines()) {
    if (is_zero(l.evaluate(pt)))
      ++m;
    else
      missing.push_back(&l);
  }
  if (m < 2) throw InputError("point " + to_string(ProjPoint<S>{pt}) + " is not an intersection point of the arrangement");
  const int d = A.size();
  HomogPoly<S> h = HomogPoly<S>::constant(F, F.one());
  for (const auto* l : missing) h *= l->form();
  HomogPoly<S> P(F, std::max(0, d - m - 1));
  for (std::size_t i = 0; i < missing.size(); ++i) {
    HomogPoly<S> term = HomogPoly<S>::constant(F, missing[i]->evaluate(pt));
    for (std::size_t j = 0; j < missing.size(); ++j)
      if (j != i) term *= missing[j]->form();
    P += term;
  }
  const S dd = F.from_int(d);
  std::array<HomogPoly<S>, 3> comps;
  for (int v = 0; v < 3; ++v) {
    HomogPoly<S> c = h * (dd * pt[v]);
    if (!P.is_zero()) c = HomogPoly<S>::variable(F, v) * P - c;
    else c = -c;
    comps[v] = c;
  }
  return make_triple(comps[0], comps[1], comps[2], d);
}

TrichotomyResult trichotomy_from(int d, int m, int r, long tau) {
  TrichotomyResult t;
  t.d = d;
  t.m = m;
  t.r = r;
  t.tau = tau;
  std::ostringstream why;
  if (r == d - m) {
    t.case_id = 0;
    why << "mdr = d - m = " << r;
  } else if (r > d - m) {
    why << "mdr = " << r << " exceeds d - m = " << d - m << " although the point syzygy has degree d - m";
    throw InconsistencyError(why.str());
  } else if (r <= m - 1) {
    if (r != m - 1) {
      why << "mdr = " << r << " < m - 1 = " << m - 1 << " contradicts the multiple point trichotomy";
      throw InconsistencyError(why.str());
    }
    if (2 * m == d + 1) t.equality_edge = true;
    if (2 * m > d + 1) {
      why << "case 1 with 2m > d + 1 (m = " << m << ", d = " << d << ")";
      throw InconsistencyError(why.str());
    }
    GateVerdict g = thmF_gate(d, r, tau);
    if (!g.attained) {
      why << "case 1 requires freeness with exponents (" << r << ", " << d - m << ") but tau = " << tau
          << " < " << g.bound;
      throw InconsistencyError(why.str());
    }
    t.case_id = 1;
    t.exponents = std::make_pair(m - 1, d - m);
    why << "mdr = m - 1 = " << r << " <= d - m - 1, free with exponents (" << m - 1 << ", " << d - m << ")";
  } else {
    t.case_id = 2;
    why << m << " <= mdr = " << r << " <= d - m - 1 = " << d - m - 1;
  }
  t.description = why.str();
  return t;
}

template <class S>
TrichotomyResult trichotomy(const LineArrangement<S>& A, const ProjPoint<S>& p, const Backend& backend) {
  const auto L = lattice(A);
  const int idx = L.find(make_point(p.coords));
  if (idx < 0) throw InputError("point " + to_string(p) + " is not an intersection point of the arrangement");
  const int r = mdr(A.polynomial(), backend).mdr;
  return trichotomy_from(A.size(), L.points[idx].multiplicity(), r, tau_combinatorial(L));
}

BoundCheck multiplicity_bound_check(int d, int m, int r) {
  BoundCheck b;
  b.lhs = m;
  b.rhs = Rational(2 * d, r + 2);
  b.rhs.canonicalize();
  b.ok = b.lhs >= b.rhs;
  b.equality = b.lhs == b.rhs;
  return b;
}

BoundCheck mdr_lower_bound_check(int d, int m, int r) {
  BoundCheck b;
  b.lhs = r;
  b.rhs = Rational(2 * d, m) - 2;
  b.rhs.canonicalize();
  b.ok = b.lhs >= b.rhs;
  b.equality = b.lhs == b.rhs;
  return b;
}

bool exponent_gap_check(CurveClass cls, std::pair<int, int> exponents, int m) {
  const auto [d1, d2] = exponents;
  if (cls == CurveClass::free) return m == d2 + 1 || m <= d1 + 1;
  if (cls == CurveClass::nearly_free) return m == d2 || m <= d1;
  throw InputError("exponent gap check needs a free or nearly free arrangement");
}

template <class S>
FaenziVallesVerdict faenzi_valles_check(const LineArrangement<S>& A, int k, int l, const Backend& backend) {
  const int d = A.size();
  if (k < 1 || l < 0 || d != 2 * k + l + 1)
    throw InputError("need k >= 1, l >= 0 and d = 2k + l + 1 (d = " + std::to_string(d) + ")");
  const auto L = lattice(A);
  FaenziVallesVerdict v;
  v.k = k;
  v.l = l;
  v.e = -1;
  for (const auto& p : L.points) {
    if (p.multiplicity() >= k && p.multiplicity() <= k + l + 1) v.e = std::max(v.e, p.multiplicity());
  }
  if (v.e < 0) throw InputError("no intersection point of multiplicity in [k, k + l + 1]");
  v.tau = tau_combinatorial(L);
  v.target = static_cast<long>(d - 1) * (d - 1) - static_cast<long>(k) * (k + l);
  v.free_by_tau = v.tau == v.target;
  auto rep = classify(A.polynomial(), backend);
  v.classified = rep.cls;
  v.exponents = rep.exponents;
  const bool classify_free_here = rep.cls == CurveClass::free && rep.exponents == std::make_pair(k, k + l);
  v.agrees = classify_free_here == v.free_by_tau;
  return v;
}

template <class S>
ConeConstruction<S> cone_construction(const LineArrangement<S>& A, const ProjPoint<S>& p) {
  const auto pt = normalize_projective(p.coords);
  for (const auto& l : A.lines())
    if (is_zero(l.evaluate(pt))) throw InputError("apex " + to_string(ProjPoint<S>{pt}) + " lies on the line " + to_string(l));
  const auto L = lattice(A);
  std::vector<ProjLine<S>> lines = A.lines();
  std::set<std::string> added;
  int m = 0;
  for (const auto& q : L.points) {
    const auto cov = normalize_projective(cross(pt, q.point.coords));
    if (!added.insert(key_of(cov)).second) continue;
    lines.push_back(ProjLine<S>{cov});
    ++m;
  }
  ConeConstruction<S> out;
  out.B = LineArrangement<S>(A.field(), std::move(lines));
  out.e = A.size();
  out.m = m;
  out.d = out.e + m;
  out.expected_tau = static_cast<long>(out.d - 1) * (out.d - 1) - static_cast<long>(out.e) * (m - 1);
  out.expected_exponents = sorted_pair(out.e, m - 1);
  return out;
}

namespace {

struct LatticeShape {
  int n = 0;
  std::vector<std::vector<int>> point_of;
  std::vector<int> mult;                   // per point
  std::vector<std::vector<int>> profile;   // per line: sorted multiplicities of its points
};

template <class S>
LatticeShape shape_of(const IntersectionLattice<S>& L, int n) {
  LatticeShape s;
  s.n = n;
  s.point_of = L.point_of;
  for (const auto& p : L.points) s.mult.push_back(p.multiplicity());
  s.profile.assign(n, {});
  for (const auto& p : L.points)
    for (int i : p.lines) s.profile[i].push_back(p.multiplicity());
  for (auto& v : s.profile) std::sort(v.begin(), v.end());
  return s;
}

bool isomorphic_shapes(const LatticeShape& a, const LatticeShape& b) {
  if (a.n != b.n) return false;
  const int n = a.n;
  {
    auto ma = a.mult, mb = b.mult;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return false;
  }
  std::vector<int> sigma(n, -1);
  std::vector<char> used(n, 0);
  // Lines of A with rarer profiles first.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::map<std::vector<int>, int> freq;
  for (const auto& p : a.profile) ++freq[p];
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return freq[a.profile[x]] < freq[a.profile[y]]; });

  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const int i = order[depth];
    for (int c = 0; c < n; ++c) {
      if (used[c] || a.profile[i] != b.profile[c]) continue;
      bool ok = true;
      for (int dj = 0; dj < depth && ok; ++dj) {
        const int j = order[dj];
        const int pa = a.point_of[i][j];
        const int pb = b.point_of[c][sigma[j]];
        if (a.mult[pa] != b.mult[pb]) {
          ok = false;
          break;
        }
        // every assigned line k: k on pa iff sigma(k) on pb
        for (int dk = 0; dk < depth && ok; ++dk) {
          const int k = order[dk];
          if (k == j) continue;
          const bool in_a = a.point_of[i][k] == pa;
          const bool in_b = b.point_of[c][sigma[k]] == pb;
          if (in_a != in_b) ok = false;
        }
      }
      if (!ok) continue;
      sigma[i] = c;
      used[c] = 1;
      if (extend(depth + 1)) return true;
      sigma[i] = -1;
      used[c] = 0;
    }
    return false;
  };
  return extend(0);
}

}  // namespace

template <class S1, class S2>
bool lattice_isomorphic(const IntersectionLattice<S1>& A, int nA, const IntersectionLattice<S2>& B, int nB) {
  if (nA > 24 || nB > 24) throw InputError("lattice isomorphism search is limited to 24 lines");
  return isomorphic_shapes(shape_of(A, nA), shape_of(B, nB));
}

template <class S>
LineArrangement<S> transform_arrangement(const LineArrangement<S>& A, const LinearMap<S>& M) {
  std::vector<ProjLine<S>> lines;
  const auto& F = A.field();
  for (const auto& l : A.lines()) {
    std::array<S, 3> c{F.zero(), F.zero(), F.zero()};
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) c[j] += l.cov[i] * M[i][j];
    lines.push_back(make_line(c));
  }
  return LineArrangement<S>(F, std::move(lines));
}

LineArrangement<Rational> random_arrangement(int n, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<ProjLine<Rational>> lines;
  std::set<std::string> seen;
  int guard = 0;
  while (static_cast<int>(lines.size()) < n) {
    if (++guard > 100000) throw InputError("could not draw enough distinct lines");
    std::array<Rational, 3> c{Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))};
    if (sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0) continue;
    auto l = make_line(c);
    if (!seen.insert(key_of(l.cov)).second) continue;
    lines.push_back(l);
  }
  return LineArrangement<Rational>(RationalField{}, std::move(lines));
}

template <class S>
LinearMap<S> random_invertible(const field_t<S>& field, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (;;) {
    LinearMap<S> M;
    for (auto& row : M)
      for (auto& v : row) v = field.from_int(coef(rng));
    if (!is_zero(det3(M))) return M;
  }
}

namespace {

template <class S>
std::vector<ProjLine<S>> parse_lines(const std::string& text, const std::function<S(const Rational&)>& conv) {
  std::vector<ProjLine<S>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    std::string t;
    while (fields >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 3)
      throw InputError("arrangement line " + std::to_string(lineno) + ": expected three coefficients, found " +
                       std::to_string(tok.size()));
    std::array<S, 3> c;
    for (int i = 0; i < 3; ++i) {
      try {
        c[i] = conv(parse_rational(tok[i]));
      } catch (const ParseError& e) {
        throw InputError("arrangement line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    try {
      lines.push_back(make_line(c));
    } catch (const InputError&) {
      throw InputError("arrangement line " + std::to_string(lineno) + ": zero covector");
    }
  }
  return lines;
}

}  // namespace

LineArrangement<Rational> parse_arrangement(const std::string& text) {
  return LineArrangement<Rational>(RationalField{},
                                   parse_lines<Rational>(text, [](const Rational& q) { return q; }));
}

LineArrangement<ModP> parse_arrangement(const std::string& text, const PrimeField& field) {
  return LineArrangement<ModP>(field, parse_lines<ModP>(text, [&](const Rational& q) { return field.from_rational(q); }));
}

template <class S>
std::string format_arrangement(const LineArrangement<S>& A) {
  std::string out;
  for (const auto& l : A.lines())
    out += jsyz::to_string(l.cov[0]) + " " + jsyz::to_string(l.cov[1]) + " " + jsyz::to_string(l.cov[2]) + "\n";
  return out;
}

#define JSYZ_INSTANTIATE(S)                                                                                   \
  template std::array<S, 3> normalize_projective(const std::array<S, 3>&);                                    \
  template std::string to_string(const ProjPoint<S>&);                                                        \
  template std::string to_string(const ProjLine<S>&);                                                         \
  template class LineArrangement<S>;                                                                          \
  template struct IntersectionLattice<S>;                                                                     \
  template IntersectionLattice<S> lattice(const LineArrangement<S>&);                                         \
  template long tau_combinatorial(const IntersectionLattice<S>&);                                             \
  template SyzygyTriple<S> point_syzygy(const LineArrangement<S>&, const ProjPoint<S>&);                      \
  template TrichotomyResult trichotomy(const LineArrangement<S>&, const ProjPoint<S>&, const Backend&);       \
  template FaenziVallesVerdict faenzi_valles_check(const LineArrangement<S>&, int, int, const Backend&);      \
  template ConeConstruction<S> cone_construction(const LineArrangement<S>&, const ProjPoint<S>&);             \
  template LineArrangement<S> transform_arrangement(const LineArrangement<S>&, const LinearMap<S>&);          \
  template LinearMap<S> random_invertible<S>(const field_t<S>&, int, std::mt19937_64&);                       \
  template std::string format_arrangement(const LineArrangement<S>&);

JSYZ_INSTANTIATE(Rational)
JSYZ_INSTANTIATE(ModP)
#undef JSYZ_INSTANTIATE

template bool lattice_isomorphic(const IntersectionLattice<Rational>&, int, const IntersectionLattice<Rational>&, int);
template bool lattice_isomorphic(const IntersectionLattice<ModP>&, int, const IntersectionLattice<ModP>&, int);
template bool lattice_isomorphic(const IntersectionLattice<Rational>&, int, const IntersectionLattice<ModP>&, int);
template bool lattice_isomorphic(const IntersectionLattice<ModP>&, int, const IntersectionLattice<Rational>&, int);

}  // namespace jsyz
