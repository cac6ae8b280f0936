#pragma once

#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "jsyz/syzygy.hpp"
#include "jsyz/tjurina.hpp"

namespace jsyz {

/// A projective line given by its covector; the first nonzero coordinate is 1.
template <class S>
struct ProjLine {
  std::array<S, 3> cov;

  S evaluate(const std::array<S, 3>& pt) const { return cov[0] * pt[0] + cov[1] * pt[1] + cov[2] * pt[2]; }
  HomogPoly<S> form() const { return HomogPoly<S>::linear(field_of(cov[0]), cov); }
  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.cov == b.cov; }
};

/// A point of P^2; the first nonzero coordinate is 1.
template <class S>
struct ProjPoint {
  std::array<S, 3> coords;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords == b.coords; }
};

/// Scales v so that its first nonzero entry is 1. Throws InputError on the zero vector.
template <class S>
std::array<S, 3> normalize_projective(const std::array<S, 3>& v);

template <class S>
ProjLine<S> make_line(const std::array<S, 3>& cov) {
  return ProjLine<S>{normalize_projective(cov)};
}
template <class S>
ProjPoint<S> make_point(const std::array<S, 3>& coords) {
  return ProjPoint<S>{normalize_projective(coords)};
}

template <class S>
std::string to_string(const ProjPoint<S>& p);
template <class S>
std::string to_string(const ProjLine<S>& l);

template <class S>
class LineArrangement {
 public:
  using field_type = field_t<S>;

  LineArrangement() = default;
  /// Throws InputError on duplicate lines.
  LineArrangement(field_type field, std::vector<ProjLine<S>> lines);

  const field_type& field() const { return field_; }
  const std::vector<ProjLine<S>>& lines() const { return lines_; }
  int size() const { return static_cast<int>(lines_.size()); }
  /// Product of the line forms, in the stored line order.
  HomogPoly<S> polynomial() const;

 private:
  field_type field_{};
  std::vector<ProjLine<S>> lines_;
};

template <class S>
struct LatticePoint {
  ProjPoint<S> point;
  std::vector<int> lines;  // indices into the arrangement, increasing
  int multiplicity() const { return static_cast<int>(lines.size()); }
};

template <class S>
struct IntersectionLattice {
  std::vector<LatticePoint<S>> points;
  int max_multiplicity = 0;
  /// point_of[i][j]: index of the point where lines i and j meet (i != j).
  std::vector<std::vector<int>> point_of;

  /// Index of the lattice point equal to p, or -1.
  int find(const ProjPoint<S>& p) const;
  /// Multiplicities in decreasing order.
  std::vector<int> multiplicity_profile() const;
};

/// All pairwise intersection points, ordered by the first pair of lines meeting there.
template <class S>
IntersectionLattice<S> lattice(const LineArrangement<S>& A);

/// Sum over lattice points of (m_p - 1)^2.
template <class S>
long tau_combinatorial(const IntersectionLattice<S>& L);

/// Syzygy of degree d - m attached to a point p of multiplicity m: with h the
/// product of the lines missing p and P = sum over those lines of L(p) h / L,
/// the triple is (xP - d h p_x, yP - d h p_y, zP - d h p_z).
/// Throws InputError when p is not a lattice point.
template <class S>
SyzygyTriple<S> point_syzygy(const LineArrangement<S>& A, const ProjPoint<S>& p);

struct TrichotomyResult {
  int d = 0;
  int m = 0;
  int r = 0;
  long tau = 0;
  /// 0: r = d - m; 1: r = m - 1 <= d - m - 1 and free (m - 1, d - m); 2: m <= r <= d - m - 1.
  int case_id = 0;
  std::optional<std::pair<int, int>> exponents;
  /// 2m = d + 1 was met inside case 1 (never expected).
  bool equality_edge = false;
  std::string description;
};

/// Decides which case of the multiple-point trichotomy holds at p, given r = mdr(f)
/// and tau. Raises InconsistencyError when no case matches.
TrichotomyResult trichotomy_from(int d, int m, int r, long tau);

template <class S>
TrichotomyResult trichotomy(const LineArrangement<S>& A, const ProjPoint<S>& p, const Backend& backend = {});

struct BoundCheck {
  Rational lhs;
  Rational rhs;
  bool ok = false;
  bool equality = false;
};
/// m(A) >= 2d / (r + 2).
BoundCheck multiplicity_bound_check(int d, int m, int r);
/// r >= 2d/m - 2.
BoundCheck mdr_lower_bound_check(int d, int m, int r);

/// Free: m = d2 + 1 or m <= d1 + 1. Nearly free: m = d2 or m <= d1.
bool exponent_gap_check(CurveClass cls, std::pair<int, int> exponents, int m);

struct FaenziVallesVerdict {
  int k = 0;
  int l = 0;
  int e = 0;  // multiplicity of the witnessing point
  long tau = 0;
  long target = 0;
  bool free_by_tau = false;
  CurveClass classified = CurveClass::neither;
  std::optional<std::pair<int, int>> exponents;
  bool agrees = false;
};
/// Requires d = 2k + l + 1 and a lattice point of multiplicity in [k, k + l + 1].
template <class S>
FaenziVallesVerdict faenzi_valles_check(const LineArrangement<S>& A, int k, int l, const Backend& backend = {});

template <class S>
struct ConeConstruction {
  LineArrangement<S> B;
  int e = 0;  // lines of A
  int m = 0;  // added lines
  int d = 0;
  long expected_tau = 0;
  std::pair<int, int> expected_exponents;  // sorted
};
/// Adds the lines joining p to every lattice point of A, each distinct line once.
/// Throws InputError when p lies on A.
template <class S>
ConeConstruction<S> cone_construction(const LineArrangement<S>& A, const ProjPoint<S>& p);

/// Lattice isomorphism by backtracking; throws InputError above 24 lines.
template <class S1, class S2>
bool lattice_isomorphic(const IntersectionLattice<S1>& A, int nA, const IntersectionLattice<S2>& B, int nB);

/// Lines as f o M, i.e. covectors c -> c M.
template <class S>
LineArrangement<S> transform_arrangement(const LineArrangement<S>& A, const LinearMap<S>& M);

/// Random arrangement of n distinct lines with integer covector entries in [-bound, bound].
LineArrangement<Rational> random_arrangement(int n, int bound, std::mt19937_64& rng);

/// Random invertible integer matrix with entries in [-bound, bound].
template <class S>
LinearMap<S> random_invertible(const field_t<S>& field, int bound, std::mt19937_64& rng);

/// Arrangement file: one line per ProjLine, three rationals separated by
/// whitespace, '#' starts a comment.
LineArrangement<Rational> parse_arrangement(const std::string& text);
LineArrangement<ModP> parse_arrangement(const std::string& text, const PrimeField& field);
template <class S>
std::string format_arrangement(const LineArrangement<S>& A);

}  // namespace jsyz
