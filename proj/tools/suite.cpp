#include "suite.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "jsyz/fixtures.hpp"
#include "jsyz/parse.hpp"
#include "jsyz/tangent.hpp"

namespace jsyz::suite {

namespace {

using Q = Rational;
using Pair = std::pair<int, int>;

std::string text(const std::optional<Pair>& e) {
  return e ? "(" + std::to_string(e->first) + "," + std::to_string(e->second) + ")" : "none";
}

class Context {
 public:
  Context(const Options& o, int id) : backend(o.backend), corrupted_(o.corrupt == id) {}

  Backend backend;

  Fixture load(const std::string& name) const {
    Fixture fx = fixture(name);
    if (!corrupted_) return fx;
    const QPoly extra = parse_q("x+2*y+3*z");
    fx.f = fx.f * extra;
    if (fx.arrangement) {
      auto lines = fx.arrangement->lines();
      lines.push_back(make_line<Q>({Q(1), Q(2), Q(3)}));
      fx.arrangement = LineArrangement<Q>(RationalField{}, lines);
    }
    if (fx.split_arrangement) {
      const PrimeField F = fx.split_arrangement->field();
      auto lines = fx.split_arrangement->lines();
      lines.push_back(make_line<ModP>({F.from_int(1), F.from_int(2), F.from_int(3)}));
      fx.split_arrangement = LineArrangement<ModP>(F, lines);
    }
    if (fx.product) fx.product->h = fx.product->h ? *fx.product->h * extra : extra;
    return fx;
  }

  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  bool corrupted() const { return corrupted_; }
  bool passed() const { return failure_.empty(); }
  std::string detail() const { return failure_.empty() ? notes_ : "failed: " + failure_; }

 private:
  bool corrupted_ = false;
  std::string failure_;
  std::string notes_;
};

// classification with expected class, exponents and (optionally) tau
template <class S>
FreenessReport<S> expect_class(Context& cx, const std::string& label, const HomogPoly<S>& f, CurveClass cls,
                               std::optional<Pair> exps, std::optional<long> tau = std::nullopt) {
  auto r = classify(f, cx.backend);
  cx.expect(r.cls == cls, label + ": class " + to_string(r.cls) + ", expected " + to_string(cls));
  if (exps) cx.expect(r.exponents == exps, label + ": exponents " + text(r.exponents) + ", expected " + text(exps));
  if (tau) cx.expect(r.tau == *tau, label + ": tau " + std::to_string(r.tau) + ", expected " + std::to_string(*tau));
  return r;
}

template <class S>
ProjPoint<S> max_point(const IntersectionLattice<S>& L) {
  for (const auto& p : L.points)
    if (p.multiplicity() == L.max_multiplicity) return p.point;
  throw InputError("arrangement has no intersection point");
}

template <class S>
void check_lattice_tau(Context& cx, const std::string& label, const LineArrangement<S>& A, long tau) {
  const long comb = tau_combinatorial(lattice(A));
  cx.expect(comb == tau, label + ": sum (m_p - 1)^2 = " + std::to_string(comb) + " but tau = " + std::to_string(tau));
}

void ex1(Context& cx) {
  const auto fx = cx.load("ex1");
  const auto r = expect_class(cx, "ex1", fx.f, CurveClass::free, Pair{2, 3}, 19);
  cx.expect(r.mdr == 2, "ex1: mdr " + std::to_string(r.mdr));
  check_lattice_tau(cx, "ex1", *fx.arrangement, r.tau);
  const auto L = lattice(*fx.arrangement);
  const auto t = trichotomy_from(r.d, L.max_multiplicity, r.mdr, r.tau);
  cx.expect(t.case_id == 0 && r.mdr == r.d - L.max_multiplicity, "ex1: mdr is not d - m");
  cx.note("mdr 2 = d - m, free (2,3), tau 19 = sum (m_p-1)^2");
}

void ex2(Context& cx) {
  const std::pair<const char*, std::pair<Pair, long>> cases[] = {{"ex2a", {{3, 4}, 37}}, {"ex2b", {{3, 5}, 49}}};
  for (const auto& [name, expected] : cases) {
    const auto fx = cx.load(name);
    const auto r = expect_class(cx, name, fx.f, CurveClass::free, expected.first, expected.second);
    check_lattice_tau(cx, name, *fx.arrangement, r.tau);
    const auto L = lattice(*fx.arrangement);
    const auto t = trichotomy_from(r.d, L.max_multiplicity, r.mdr, r.tau);
    cx.expect(t.case_id == 1 && r.mdr == L.max_multiplicity - 1 && r.mdr == 3,
              std::string(name) + ": trichotomy case " + std::to_string(t.case_id) + ", mdr " + std::to_string(r.mdr));
  }
  cx.note("free (3,4) tau 37, free (3,5) tau 49, case 1 with mdr = m - 1 = 3");
}

void ex3(Context& cx) {
  const auto fx = cx.load("ex3");
  const auto r = expect_class(cx, "ex3", fx.f, CurveClass::free, Pair{9, 9}, 243);
  check_lattice_tau(cx, "ex3", *fx.arrangement, r.tau);
  const auto L = lattice(*fx.arrangement);
  const auto t = trichotomy(*fx.arrangement, max_point(L), cx.backend);
  cx.expect(t.case_id == 2 && t.m == 6 && t.r == 9 && t.m <= t.r && t.r <= t.d - t.m - 1,
            "ex3: trichotomy case " + std::to_string(t.case_id) + " with m " + std::to_string(t.m) + ", r " +
                std::to_string(t.r));
  cx.note("free (9,9), tau 243, case 2 with 6 <= 9 <= 12");
}

void ex5(Context& cx) {
  const auto fx = cx.load("ex5");
  const auto r = expect_class(cx, "ex5", fx.f, CurveClass::free, Pair{4, 4});
  const auto L = lattice(*fx.split_arrangement);
  cx.expect(tau_combinatorial(L) == r.tau, "ex5: lattice tau disagrees");
  const auto b = multiplicity_bound_check(r.d, L.max_multiplicity, r.mdr);
  cx.expect(L.max_multiplicity == 3 && b.ok && b.equality,
            "ex5: m = " + std::to_string(L.max_multiplicity) + " vs 2d/(d1+2) = " + b.rhs.get_str());
  cx.note("free (4,4), m = 3 = 2d/(d1+2)");
}

void ex12i(Context& cx) {
  for (int k = 2; k <= 5; ++k) {
    const auto fx = cx.load("ex12i:" + std::to_string(k));
    const auto r = expect_class(cx, "ex12i k=" + std::to_string(k), fx.f, CurveClass::free, sorted_pair(k + 1, 2 * k - 2));
    check_lattice_tau(cx, "ex12i k=" + std::to_string(k), *fx.split_arrangement, r.tau);
    const auto fe = cx.load("ex12i-ext:" + std::to_string(k));
    const auto re =
        expect_class(cx, "ex12i-ext k=" + std::to_string(k), fe.f, CurveClass::free, sorted_pair(k + 1, 2 * k + 1));
    check_lattice_tau(cx, "ex12i-ext k=" + std::to_string(k), *fe.split_arrangement, re.tau);
  }
  cx.note("k=2..5: free (k+1,2k-2) and with xyz free (k+1,2k+1)");
}

void ex12ii(Context& cx) {
  const auto fx = cx.load("ex12ii");
  const auto r = expect_class(cx, "ex12ii", fx.f, CurveClass::free, Pair{4, 10}, 156);
  cx.expect(r.mdr == 4, "ex12ii: mdr " + std::to_string(r.mdr));
  const auto w = wedge_syzygy(*fx.pencil, fx.f);
  cx.expect(w.degree == 4 && verify_syzygy(fx.f, w), "ex12ii: wedge syzygy of degree " + std::to_string(w.degree));
  cx.expect(is_primitive(w), "ex12ii: wedge syzygy not primitive");
  cx.expect(ar_dimension(fx.f, 4, cx.backend) == 1, "ex12ii: AR(f)_4 is not spanned by one syzygy");
  cx.note("mdr 4, tau 156, free (4,10), wedge syzygy primitive and spans AR(f)_4");
}

void ex14ii(Context& cx) {
  for (int m = 3; m <= 6; ++m) {
    const auto fx = cx.load("ex14ii:" + std::to_string(m));
    const auto r = expect_class(cx, "ex14ii m=" + std::to_string(m), fx.f, CurveClass::nearly_free, Pair{2, m},
                                static_cast<long>(m) * m + 2);
    const auto s = lemma2_syzygy(fx.product->pencil, *fx.product->h, fx.product->m(), fx.f);
    cx.expect(s.degree == r.mdr && s.degree == 2, "ex14ii: residual syzygy degree " + std::to_string(s.degree));
    const auto fp = cx.load("ex14ii-primed:" + std::to_string(m));
    expect_class(cx, "ex14ii' m=" + std::to_string(m), fp.f, CurveClass::free, Pair{2, m - 1});
  }
  cx.note("m=3..6: nearly free (2,m) with tau m^2+2; primed variant free (2,m-1)");
}

void hesse_discriminant(Context& cx) {
  const auto fx = cx.load("hesse");
  const auto D = discriminant(*fx.pencil, cx.backend.seed);
  std::vector<int> mults;
  for (const auto& root : D.roots)
    for (int i = 0; i < (root.at_infinity ? 1 : root.factor.degree()); ++i) mults.push_back(root.multiplicity);
  cx.expect(D.degree == 12 && D.sum_mu == 12, "hesse: degree " + std::to_string(D.degree));
  cx.expect(mults == std::vector<int>{3, 3, 3, 3}, "hesse: root multiplicities differ from {3,3,3,3}");
  cx.expect(D.distinct_roots == 4, "hesse: distinct roots " + std::to_string(D.distinct_roots));
  const auto tm = total_mu_check(*fx.pencil, cx.backend, cx.backend.seed);
  cx.expect(tm.ok && tm.distinct_ok && !tm.equality_case, "hesse: total mu check");
  for (int k = 2; k <= 5; ++k) {
    const auto fe = cx.load("fermat:" + std::to_string(k));
    const auto t = total_mu_check(*fe.pencil, cx.backend, cx.backend.seed);
    cx.expect(t.ok && t.sum_mu == 3 * (k - 1) * (k - 1), "fermat k=" + std::to_string(k) + ": sum mu");
    cx.expect(t.distinct_roots == 3 && t.equality_case, "fermat k=" + std::to_string(k) + ": not the equality case");
    cx.expect(t.concurrent_lines.value_or(false), "fermat k=" + std::to_string(k) + ": members not concurrent lines");
  }
  cx.note("hesse: degree 12, mu {3,3,3,3}, 4 distinct roots; fermat k=2..5: 3 roots, concurrent lines");
}

void pencil_criterion(Context& cx) {
  const auto f5 = cx.load("ex12ii");
  const auto v5 = thmPEN_classify(*f5.product, cx.backend, cx.backend.seed);
  cx.expect(v5.condition1 && v5.free_with_expected && v5.report.exponents == Pair{4, 10},
            "hesse m=5: condition or classification fails");
  const auto f4 = cx.load("hesse4");
  const auto v4 = thmPEN_classify(*f4.product, cx.backend, cx.backend.seed);
  const int d = v4.report.d, r = v4.report.mdr;
  const long free_tau = static_cast<long>(d - 1) * (d - 1) - static_cast<long>(r) * (d - r - 1);
  cx.expect(!v4.condition1 && !v4.free_with_expected, "hesse m=4: condition (1) should fail");
  cx.expect(r == 4, "hesse m=4: mdr " + std::to_string(r));
  cx.expect(v4.report.tau != free_tau && v4.report.cls != CurveClass::free,
            "hesse m=4: tau " + std::to_string(v4.report.tau) + " looks free");
  cx.note("m=5 free (4,10); m=4 mdr 4, tau " + std::to_string(v4.report.tau) + " != " + std::to_string(free_tau) +
          ", " + to_string(v4.report.cls));
}

void cone(Context& cx) {
  std::mt19937_64 rng(cx.backend.seed * 7919 + 10);
  std::uniform_int_distribution<int> lines(3, 6), coord(-5, 5);
  int ok = 0;
  std::string shapes;
  for (int trial = 0; trial < 5; ++trial) {
    const auto A = random_arrangement(lines(rng), 3, rng);
    ProjPoint<Q> p;
    for (;;) {
      p = make_point<Q>({Q(coord(rng)), Q(coord(rng)), Q(1)});
      bool on = false;
      for (const auto& l : A.lines()) on = on || is_zero(l.evaluate(p.coords));
      if (!on) break;
    }
    auto C = cone_construction(A, p);
    if (cx.corrupted()) {
      auto ls = C.B.lines();
      ls.pop_back();
      C.B = LineArrangement<Q>(RationalField{}, ls);
    }
    const auto r = classify(C.B.polynomial(), cx.backend);
    const bool good = r.cls == CurveClass::free && r.exponents == C.expected_exponents && r.tau == C.expected_tau;
    cx.expect(good, "cone " + std::to_string(trial) + ": got " + to_string(r.cls) + " " + text(r.exponents) +
                        " tau " + std::to_string(r.tau) + ", expected " + text(C.expected_exponents) + " tau " +
                        std::to_string(C.expected_tau));
    ok += good;
    shapes += (shapes.empty() ? "" : " ") + std::to_string(C.e) + "+" + std::to_string(C.m);
  }
  cx.note(std::to_string(ok) + "/5 free with exponents {e, m-1}; e+m = " + shapes);
}

template <class S>
void arrangement_properties(Context& cx, const std::string& label, const LineArrangement<S>& A, bool rank_check) {
  const auto f = A.polynomial();
  const int d = f.degree();
  const auto L = lattice(A);
  // Euler relation
  const auto g = gradient(f);
  HomogPoly<S> euler = HomogPoly<S>::variable(f.field(), 0) * g[0] + HomogPoly<S>::variable(f.field(), 1) * g[1] +
                       HomogPoly<S>::variable(f.field(), 2) * g[2];
  cx.expect(euler == f * f.field().from_int(d), label + ": Euler relation fails");
  long pairs = 0;
  for (const auto& p : L.points) pairs += static_cast<long>(p.multiplicity()) * (p.multiplicity() - 1) / 2;
  cx.expect(pairs == static_cast<long>(d) * (d - 1) / 2, label + ": sum C(m_p,2) != C(d,2)");
  const auto r = classify(f, cx.backend);
  cx.expect(r.tau == tau_combinatorial(L), label + ": tau oracle disagrees");
  cx.expect(r.tau <= dpw_bounds(d, r.mdr).value, label + ": du Plessis-Wall bound violated");
  for (const auto& p : L.points) {
    const auto s = point_syzygy(A, p.point);
    cx.expect(verify_syzygy(f, s) && s.degree == d - p.multiplicity(), label + ": point syzygy fails");
  }
  if (r.cls != CurveClass::cone) {
    cx.expect(mdr_lower_bound_check(d, L.max_multiplicity, r.mdr).ok, label + ": mdr lower bound fails");
    try {
      trichotomy_from(d, L.max_multiplicity, r.mdr, r.tau);
    } catch (const InconsistencyError& e) {
      cx.expect(false, label + ": trichotomy has no case: " + e.what());
    }
  }
  if constexpr (std::is_same_v<S, Q>) {
    if (rank_check && d <= 8) {
      for (int deg = 0; deg < d; ++deg)
        cx.expect(ar_dimension(f, deg, Backend::modular(cx.backend.prime_count, cx.backend.seed)) ==
                      ar_dimension(f, deg, Backend::rational()),
                  label + ": modular and rational ranks differ in degree " + std::to_string(deg));
    }
  }
}

void properties(Context& cx) {
  int fixtures = 0;
  for (const char* name : {"ex1", "ex2a", "ex2b", "ex3"}) {
    arrangement_properties(cx, name, *cx.load(name).arrangement, true);
    ++fixtures;
  }
  for (const std::string name : {"ex5", "ex12i:2", "ex12i:4", "ex12i:5", "ex12i-ext:2", "ex12i-ext:3"}) {
    arrangement_properties(cx, name, *cx.load(name).split_arrangement, false);
    ++fixtures;
  }
  std::mt19937_64 rng(cx.backend.seed * 104729 + 11);
  std::uniform_int_distribution<int> size(3, 10);
  int isomorphic = 0;
  for (int i = 0; i < 50; ++i) {
    const auto A = random_arrangement(size(rng), 2, rng);
    const std::string label = "random " + std::to_string(i);
    arrangement_properties(cx, label, A, true);
    const auto M = random_invertible<Q>(RationalField{}, 2, rng);
    const auto B = transform_arrangement(A, M);
    const bool iso = lattice_isomorphic(lattice(A), A.size(), lattice(B), B.size());
    const auto ra = classify(A.polynomial(), cx.backend), rb = classify(B.polynomial(), cx.backend);
    cx.expect(iso && ra.cls == rb.cls && ra.exponents == rb.exponents && ra.tau == rb.tau,
              label + ": transformed copy changes the lattice or the classification");
    isomorphic += iso;
  }
  cx.note(std::to_string(fixtures) + " fixtures and 50 random arrangements; " + std::to_string(isomorphic) +
          " lattice-isomorphic transforms with equal classification");
}

void tangent(Context& cx) {
  const QPoly h = cx.corrupted() ? parse_q("z*y^2 - x^3") : parse_q("z*y^2 - x^2*(x+z)");
  TangentSearchStats stats;
  const auto spec = find_tangent_instance(h, {make_point<Q>({Q(0), Q(0), Q(1)})}, {}, cx.backend, &stats);
  const auto r = tangent_arrangement(spec, cx.backend);
  cx.expect(r.report.cls == CurveClass::free && r.report.exponents == Pair{3, 4}, "nodal cubic: not free (3,4)");
  cx.expect(r.ledger.total() == r.report.tau && r.report.tau == 37,
            "nodal cubic: ledger " + std::to_string(r.ledger.total()) + " vs tau " + std::to_string(r.report.tau));
  cx.note("p = " + std::to_string(spec.h.field().prime()) + " after " + std::to_string(stats.apexes_tried) +
          " apexes; free (3,4), tau 37 = 16 + 16 + 5");
}

struct Entry {
  CriterionInfo info;
  void (*run)(Context&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {{1, "ex1 free (2,3), mdr 2, tau 19", "arrangement", 1}, ex1},
      {{2, "ex2 free (3,4) and (3,5), case 1", "arrangement", 2}, ex2},
      {{3, "ex3 free (9,9), tau 243, case 2", "arrangement", 60}, ex3},
      {{4, "ex5 free (4,4), bound equality", "arrangement", 2}, ex5},
      {{5, "ex12(i) k=2..5 and extended", "pencil", 30}, ex12i},
      {{6, "ex12(ii) Hesse plus smooth member", "pencil", 10}, ex12ii},
      {{7, "ex14(ii) nearly free and primed free", "pencil", 10}, ex14ii},
      {{8, "pencil discriminants (Hesse, Fermat)", "pencil", 10}, hesse_discriminant},
      {{9, "pencil freeness criterion both ways", "pencil", 15}, pencil_criterion},
      {{10, "cone construction on random arrangements", "arrangement", 60}, cone},
      {{11, "arrangement property suite", "property", 90}, properties},
      {{12, "tangent lines to a nodal cubic", "tangent", 60}, tangent},
  };
  return all;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool selected(const CriterionInfo& c, const std::string& filter) {
  if (filter.empty()) return true;
  if (filter == c.group) return true;
  if (std::all_of(filter.begin(), filter.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    return filter == std::to_string(c.id);
  return c.name.find(filter) != std::string::npos;
}

std::vector<CriterionResult> run(const Options& options, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& e : entries()) {
    if (!selected(e.info, options.filter)) continue;
    CriterionResult res;
    res.info = e.info;
    Context cx(options, e.info.id);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(cx);
      res.pass = cx.passed();
      res.detail = cx.detail();
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("failed: ") + ex.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.pass && res.seconds > e.info.budget_seconds) {
      res.pass = false;
      res.detail = "failed: over the time budget of " + std::to_string(static_cast<int>(e.info.budget_seconds)) + " s";
    }
    if (on_result) on_result(res);
    out.push_back(std::move(res));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s  [%2d] ", r.pass ? "PASS" : "FAIL", r.info.id);
  char tail[48];
  std::snprintf(tail, sizeof tail, " (%.2f s) ", r.seconds);
  return head + r.info.name + tail + r.detail;
}

}  // namespace jsyz::suite
