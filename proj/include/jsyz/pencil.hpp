#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jsyz/backend.hpp"
#include "jsyz/syzygy.hpp"
#include "jsyz/tjurina.hpp"
#include "jsyz/uni_poly.hpp"

namespace jsyz {

/// The pencil u q1 + v q2 of degree-k curves; the member at parameter t is q1 + t q2.
template <class S>
struct PencilSpec {
  HomogPoly<S> q1;
  HomogPoly<S> q2;

  int k() const { return q1.degree(); }
  const field_t<S>& field() const { return q1.field(); }
};

/// One entry of the parameter list: a value t, the member q2 (t = infinity),
/// or all members q1 + s q2 with s running over the roots of a squarefree
/// polynomial (for parameters outside the base field).
template <class S>
struct MemberParam {
  enum class Kind { value, infinity, roots_of };
  Kind kind = Kind::value;
  S t{};
  UniPoly<S> phi;

  static MemberParam value(const S& t) { return {Kind::value, t, {}}; }
  static MemberParam infinity() { return {Kind::infinity, {}, {}}; }
  static MemberParam roots(const UniPoly<S>& phi) { return {Kind::roots_of, {}, phi}; }

  /// Number of members this entry stands for.
  int count() const { return kind == Kind::roots_of ? phi.degree() : 1; }
  std::string describe(const std::string& var = "t") const;
};

/// f = q1 q2 (members listed in params) h. The members q1 (t = 0) and q2
/// (t = infinity) are always included.
template <class S>
struct PencilProductSpec {
  PencilSpec<S> pencil;
  std::vector<MemberParam<S>> params;
  std::optional<HomogPoly<S>> h;

  /// Number of pencil members in the product.
  int m() const;
};

template <class S>
HomogPoly<S> build_member(const PencilSpec<S>& P, const S& t);
template <class S>
HomogPoly<S> build_member(const PencilSpec<S>& P, const MemberParam<S>& param);

/// Product of the members q1 + s q2 over the roots s of phi:
/// (-1)^n / c_n * sum_j c_j (-q1)^j q2^(n-j) for phi = sum_j c_j s^j of degree n.
template <class S>
HomogPoly<S> build_root_group(const PencilSpec<S>& P, const UniPoly<S>& phi);

/// Checks the parameters (distinct, nonzero, squarefree and coprime groups)
/// and every member for reducedness, then multiplies everything out.
/// Throws InputError on a violation.
template <class S>
HomogPoly<S> build_product(const PencilProductSpec<S>& spec);

/// Triple of dq1 ^ dq2, i.e. grad q1 x grad q2, of degree 2k - 2, verified against f.
/// Throws InputError when q1, q2 are proportional or f is not a function of them.
template <class S>
SyzygyTriple<S> wedge_syzygy(const PencilSpec<S>& P, const HomogPoly<S>& f);

/// Triple of -m h dq1^dq2 - q2 dq1^dh + q1 dq2^dh, of degree 2k - 2 + deg h,
/// verified against f. Throws InputError when q1, q2, h share a zero or the
/// triple does not verify.
template <class S>
SyzygyTriple<S> lemma2_syzygy(const PencilSpec<S>& P, const HomogPoly<S>& h, int m, const HomogPoly<S>& f);

template <class S>
struct DiscriminantRoot {
  UniPoly<S> factor;  // monic squarefree factor in t; empty when at_infinity
  bool at_infinity = false;
  int multiplicity = 0;
};

/// D(u, v) for the members u q1 + v q2, stored through its dehomogenization
/// D(t) = D(1, t) together with the multiplicity of the root (u : v) = (0 : 1).
template <class S>
struct DiscriminantForm {
  int k = 0;
  int degree = 0;  // 3(k-1)^2
  UniPoly<S> affine;
  int infinity_multiplicity = 0;
  std::vector<DiscriminantRoot<S>> roots;
  int sum_mu = 0;
  int distinct_roots = 0;

  /// Squarefree part of D(t) (the finite roots, each once).
  UniPoly<S> radical() const;
  /// Text of the binary form in (u, v); first nonzero coefficient in u-descending order is 1.
  std::string binary_text() const;
};

/// Macaulay resultant of the partials of q1 + t q2 at 3(k-1)^2 + 1 values of t,
/// interpolated. Throws InputError when k < 2 or D vanishes identically.
template <class S>
DiscriminantForm<S> discriminant(const PencilSpec<S>& P, std::uint64_t seed = 1);

struct GenericityReport {
  bool zero_dimensional = false;  // gcd(q1, q2) constant
  bool transverse = false;        // Res_z squarefree of degree k^2 after a coordinate change
  int base_points = 0;            // distinct base points when transverse, else 0
  bool generic() const { return zero_dimensional && transverse; }
};
template <class S>
GenericityReport genericity_check(const PencilSpec<S>& P, std::uint64_t seed = 1);

struct TotalMuReport {
  int sum_mu = 0;
  int expected = 0;
  bool ok = false;
  int distinct_roots = 0;
  bool distinct_ok = false;  // >= 3
  bool equality_case = false;
  /// In the equality case: every singular member is k concurrent lines.
  std::optional<bool> concurrent_lines;
};
template <class S>
TotalMuReport total_mu_check(const PencilSpec<S>& P, const Backend& backend = {}, std::uint64_t seed = 1);

/// Singular member record for a root of D.
template <class S>
struct SingularMember {
  DiscriminantRoot<S> root;
  bool chosen = false;            // among the members of the product
  std::optional<long> tau;        // total Tjurina number of the member(s) at these roots
};

template <class S>
struct ThmPenVerdict {
  int k = 0;
  int m = 0;
  bool condition_a = false;  // every root of D is a chosen parameter
  long member_tau_sum = 0;   // sum of tau over the chosen singular members
  bool condition_b = false;  // that sum equals 3(k-1)^2
  bool condition1 = false;
  std::vector<SingularMember<S>> singular_members;
  FreenessReport<S> report;
  std::pair<int, int> expected_exponents;  // sorted {2k-2, mk-2k+1}
  long expected_tau = 0;                   // 3(k-1)^2 + k^2 (m-1)^2
  bool free_with_expected = false;
};

/// Decides both sides of the pencil freeness criterion and raises
/// InconsistencyError if they disagree. Requires a generic pencil, m >= 3, k >= 2, no h.
template <class S>
ThmPenVerdict<S> thmPEN_classify(const PencilProductSpec<S>& spec, const Backend& backend = {},
                                 std::uint64_t seed = 1);

struct PencilCase {
  int d = 0;
  int k = 0;
  int m = 0;
  int deg_h = 0;
  int r = 0;
  long tau = 0;
  /// 0: the generic value (2k - 2, resp. 2k - 2 + deg h); 1: the free case; 2: the intermediate range.
  int case_id = 0;
  std::optional<std::pair<int, int>> exponents;
  std::string description;
};

/// Case analysis for f = q1 ... qm. Raises InconsistencyError when no case fits.
template <class S>
PencilCase thm11_trichotomy(const PencilProductSpec<S>& spec, const Backend& backend = {});

/// Case analysis for f = q1 ... qm h. Requires q1, q2, h without a common zero;
/// irreducibility of h is the caller's responsibility.
template <class S>
PencilCase thm13_trichotomy(const PencilProductSpec<S>& spec, const Backend& backend = {});

/// Polynomial of a univariate over Q reduced modulo p.
UniPoly<ModP> reduce_mod(const UniPoly<Rational>& u, const PrimeField& field);
PencilSpec<ModP> reduce_mod(const PencilSpec<Rational>& P, const PrimeField& field);

}  // namespace jsyz
