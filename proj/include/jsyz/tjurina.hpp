#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "jsyz/syzygy.hpp"

namespace jsyz {

/// dim (S/J_f)_k with J_f = (f_x, f_y, f_z).
template <class S>
long milnor_hilbert(const HomogPoly<S>& f, int k, const Backend& backend = {});

struct MilnorProfile {
  int d = 0;
  std::map<int, long> values;  // sampled k -> dim (S/J_f)_k
  long tau = 0;
  /// k with values[k] == values[k + 1] == tau.
  int stabilization_degree = 0;
  /// The witness pair lies beyond the first sampled pair (3d-6, 3d-5).
  bool extended = false;
};

/// Global Tjurina number as the stable Hilbert value of the Milnor algebra,
/// sampled from k = 3d - 6 upward until two consecutive values agree.
/// Throws InputError if no pair agrees by k = 3d - 3 (non-reduced input).
template <class S>
MilnorProfile global_tjurina(const HomogPoly<S>& f, const Backend& backend = {});

/// (d-1)^2 - r(d-1-r)
long dpw_phi1(int d, int r);
/// phi1 - C(2r+2-d, 2)
long dpw_phi2(int d, int r);

struct DpwBound {
  long value = 0;
  std::string branch;  // "phi1" or "phi2"
};
/// phi1(r) when r <= (d-1)/2, else phi2(r).
DpwBound dpw_bounds(int d, int r);

/// (min(a, b), max(a, b))
inline std::pair<int, int> sorted_pair(int a, int b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; }

enum class CurveClass { free, nearly_free, neither, cone };
std::string to_string(CurveClass c);

template <class S>
struct FreenessReport {
  int d = 0;
  int mdr = 0;
  long tau = 0;
  CurveClass cls = CurveClass::neither;
  std::optional<std::pair<int, int>> exponents;
  SyzygyTriple<S> certificate;
  long phi1 = 0;
  long phi2 = 0;
  DpwBound bound;
  MilnorProfile profile;
  Backend backend;
  std::string field;
};

/// mdr, tau and the free / nearly-free / cone / neither verdict. Throws
/// InputError for non-reduced f or d < 2, InconsistencyError when tau
/// exceeds the du Plessis-Wall bound.
template <class S>
FreenessReport<S> classify(const HomogPoly<S>& f, const Backend& backend = {});

/// Classification from already known (d, r, tau).
CurveClass classify_numbers(int d, int r, long tau, std::optional<std::pair<int, int>>* exponents);

struct GateVerdict {
  bool attained = false;
  long bound = 0;
  std::pair<int, int> exponents;  // (r0, d - r0 - 1)
};
/// tau against (d-1)^2 - r0(d-r0-1); InconsistencyError when tau is above it.
GateVerdict thmF_gate(int d, int r0, long tau);

/// Drops candidates r whose du Plessis-Wall bound is below tau.
std::set<int> refine_mdr_candidates(int d, long tau, const std::set<int>& candidates);

}  // namespace jsyz
