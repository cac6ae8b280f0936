#include "jsyz/syzygy.hpp"

#include "jsyz/gcd.hpp"

namespace jsyz {

namespace {

template <class S>
std::vector<HomogPoly<S>> partial_list(const HomogPoly<S>& f) {
  auto g = gradient(f);
  return {g[0], g[1], g[2]};
}

}  // namespace

template <class S>
std::array<HomogPoly<S>, 3> gradient(const HomogPoly<S>& f) {
  return {f.diff(0), f.diff(1), f.diff(2)};
}

template <class S>
long ar_dimension(const HomogPoly<S>& f, int r, const Backend& backend) {
  if (r < 0) return 0;
  const int n = r + f.degree() - 1;
  return 3 * monomial_count(r) - graded_map_rank(partial_list(f), n, backend);
}

template <class S>
ARSlice<S> ar_slice(const HomogPoly<S>& f, int r, const Backend& backend) {
  ARSlice<S> slice;
  slice.degree = r;
  if (r < 0) return slice;
  const int n = r + f.degree() - 1;
  for (auto& parts : graded_map_kernel(partial_list(f), n, backend)) {
    SyzygyTriple<S> s = make_triple(parts[0], parts[1], parts[2], f.degree());
    if (!verify_syzygy(f, s)) throw InconsistencyError("syzygy basis element fails verification");
    slice.basis.push_back(std::move(s));
  }
  return slice;
}

template <class S>
MdrResult<S> mdr(const HomogPoly<S>& f, const Backend& backend) {
  if (f.is_zero() || f.degree() < 1) throw InputError("mdr needs a nonzero form of degree at least 1");
  MdrResult<S> out;
  out.reduced = is_reduced(f);
  const int d = f.degree();
  for (int r = 0; r <= d - 1; ++r) {
    if (ar_dimension(f, r, backend) == 0) continue;
    ARSlice<S> slice = ar_slice(f, r, backend);
    if (slice.basis.empty()) throw InconsistencyError("rank and kernel computations disagree in degree " + std::to_string(r));
    out.mdr = r;
    out.cone = r == 0;
    out.certificate = slice.basis.front();
    return out;
  }
  throw InconsistencyError("no syzygy found up to degree d-1, contradicting the Koszul relations");
}

template <class S>
SyzygyTriple<S> make_triple(HomogPoly<S> a, HomogPoly<S> b, HomogPoly<S> c, int f_degree) {
  int r = -1;
  for (const auto* p : {&a, &b, &c}) {
    if (p->is_zero()) continue;
    if (r >= 0 && p->degree() != r) throw InputError("syzygy components have different degrees");
    r = p->degree();
  }
  if (r < 0) r = a.degree();
  SyzygyTriple<S> s{std::move(a), std::move(b), std::move(c), r, f_degree};
  return s;
}

template <class S>
bool verify_syzygy(const HomogPoly<S>& f, const SyzygyTriple<S>& s) {
  for (const auto* p : {&s.a, &s.b, &s.c}) {
    if (!p->is_zero() && p->degree() != s.degree)
      throw InputError("syzygy component of degree " + std::to_string(p->degree()) + " in a triple of degree " +
                       std::to_string(s.degree));
  }
  if (s.is_zero()) return false;
  const auto g = gradient(f);
  HomogPoly<S> acc(f.field(), s.degree + f.degree() - 1);
  const HomogPoly<S>* comps[3] = {&s.a, &s.b, &s.c};
  for (int i = 0; i < 3; ++i) {
    if (comps[i]->is_zero() || g[i].is_zero()) continue;
    acc += *comps[i] * g[i];
  }
  return acc.is_zero();
}

template <class S>
bool is_primitive(const SyzygyTriple<S>& s) {
  if (s.is_zero()) return false;
  return gcd_is_constant<S>({s.a, s.b, s.c});
}

template <class S>
std::array<SyzygyTriple<S>, 3> koszul_triples(const HomogPoly<S>& f) {
  const auto g = gradient(f);
  const int r = f.degree() - 1;
  const HomogPoly<S> zero(f.field(), r);
  return {make_triple(g[1], -g[0], zero, f.degree()), make_triple(g[2], zero, -g[0], f.degree()),
          make_triple(zero, g[2], -g[1], f.degree())};
}

#define JSYZ_INSTANTIATE(S)                                                                            \
  template std::array<HomogPoly<S>, 3> gradient(const HomogPoly<S>&);                                  \
  template long ar_dimension(const HomogPoly<S>&, int, const Backend&);                                \
  template ARSlice<S> ar_slice(const HomogPoly<S>&, int, const Backend&);                              \
  template MdrResult<S> mdr(const HomogPoly<S>&, const Backend&);                                      \
  template bool verify_syzygy(const HomogPoly<S>&, const SyzygyTriple<S>&);                            \
  template bool is_primitive(const SyzygyTriple<S>&);                                                  \
  template std::array<SyzygyTriple<S>, 3> koszul_triples(const HomogPoly<S>&);                         \
  template SyzygyTriple<S> make_triple(HomogPoly<S>, HomogPoly<S>, HomogPoly<S>, int);

JSYZ_INSTANTIATE(Rational)
JSYZ_INSTANTIATE(ModP)
#undef JSYZ_INSTANTIATE

}  // namespace jsyz
