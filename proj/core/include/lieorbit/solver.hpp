#ifndef LIEORBIT_SOLVER_HPP
#define LIEORBIT_SOLVER_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lieorbit/orbit.hpp"
#include "lieorbit/real_form.hpp"

namespace lieorbit {

enum class SolutionKind { Point, Cone };

/// A solution of phi' = lambda * phi with prescribed support.
///
/// Point: up to scale a single dominant phi; `phi_w` holds its primitive
/// integer weight coordinates and `lambda` the (integer) factor at that
/// representative. Cone: every dominant phi with exactly this support
/// satisfies phi' = 0; `phi_w` holds the indicator vector of the support as
/// an interior representative and `lambda` is zero.
struct SpecialSolution {
  SolutionKind kind;
  std::vector<int> support;     // 1-based, ascending
  std::vector<long long> phi_w; // weight basis
  Rational lambda;
};

/// Solves phi' = lambda * phi among dominant phi supported exactly on S.
/// S must contain the painted set. The computation is exact and integral:
/// with c = eta - 2 * (sum of positive roots supported off S), the weight
/// vector w = A c either vanishes (cone), is lambda times a dominant
/// S-supported phi (point), or rules the support out.
std::optional<SpecialSolution> solve_subset(const RootData& rd, const std::set<int>& S);

/// All solutions over supports containing the painted set, ordered by
/// (|S|, lexicographic S).
std::vector<SpecialSolution> enumerate_special(const RootData& rd);

/// Re-derives the solution through the orbit-analytics path: rebuilt phi'
/// and lambda = (eta, phi)/|phi|^2 must agree, points must be primitive and
/// dominant with the claimed support, and cones must stay special at seeded
/// random interior points.
bool verify_solution(const RootData& rd, const SpecialSolution& sol);

/// Everything reported about one solution row.
struct OrbitReport {
  DynkinType type;
  std::set<int> painted;
  std::vector<int> support;
  bool cone = false;
  WeightVec phi;                      // representative (cone: interior point)
  std::optional<Rational> lambda;     // empty when phi is not special
  std::optional<std::string> type_label; // GT, sGT, CY, sCY, F, sF
  Rational s;
  OrbitDimensions dims{};
  std::string real_form;
  StabilizerDecomposition stabilizer;
  bool integrable = false;
  bool phi_is_root = false;
  Rational nijenhuis_sq;

  /// "phi_1+2phi_4", or "t1 phi_1 + t2 phi_3 (all ti > 0)" for a cone.
  std::string phi_str() const;
};

/// Full report for one enumerated solution, with internal cross-checks
/// (curvature-vs-lambda and integrability-vs-Nijenhuis) that raise
/// internal_error on mismatch.
OrbitReport classify(const RootData& rd, const SpecialSolution& sol);

/// Full report for an arbitrary admissible phi (not necessarily special).
OrbitReport analyze_orbit(const RootData& rd, const WeightVec& phi);

} // namespace lieorbit

#endif
