#ifndef LIEORBIT_TESTS_ORACLE_HPP
#define LIEORBIT_TESTS_ORACLE_HPP

#include <optional>
#include <set>
#include <vector>

#include "lieorbit/dynkin.hpp"
#include "lieorbit/rational.hpp"

/// Independent implementation of the root-system quantities, built from
/// explicit coordinate models (integer vectors in a euclidean ambient space)
/// instead of the library's Cartan-matrix closure and packed-lattice lookups.
/// Inner products are literal dot products; orthogonality to phi is decided
/// numerically, not by support masks. Overall metric scale differs from the
/// library's normalization, which all compared quantities are invariant to.
namespace oracle {

using lieorbit::DynkinType;
using lieorbit::Rational;

using Vec = std::vector<long long>;  // ambient integer coordinates
using QVec = std::vector<Rational>;  // ambient rational coordinates

struct Model {
  DynkinType type;
  int dim = 0;                       // ambient dimension
  std::vector<Vec> simple;           // gamma_1..gamma_r
  std::vector<Vec> positive;         // positive roots, model coordinates
  std::vector<Vec> pos_in_gamma;     // gamma-coefficients, aligned with positive
  std::vector<std::vector<Rational>> gram_inv; // inverse of (gamma_i, gamma_j)
};

Model build_model(const DynkinType& t);

long long dot(const Vec& a, const Vec& b);
Rational dot(const QVec& a, const Vec& b);

/// +1 when the painted-coefficient sum of positive root k is odd
/// (non-compact), else -1.
int epsilon(const Model& m, const std::set<int>& painted, int k);

/// Ambient coordinates of eta = -2 sum(eps_a * a).
Vec eta_vec(const Model& m, const std::set<int>& painted);

/// Ambient rational vector with weight coordinates phi_w:
/// (phi, gamma_i) = phi_w[i] * |gamma_i|^2 / 2.
QVec phi_vec(const Model& m, const std::vector<Rational>& phi_w);

/// Positive-root indices with (phi, alpha) = 0, decided by dot products.
std::vector<int> phi_perp(const Model& m, const QVec& phi);

/// lambda with phi' = lambda * phi (ambient comparison), or empty.
std::optional<Rational> check_special(const Model& m, const std::set<int>& painted,
                                      const std::vector<Rational>& phi_w);

/// Factored curvature formula s = sum over beta off phi-perp of
/// (phi', beta)/(phi, beta), equal to the library's literal double sum.
Rational curvature(const Model& m, const std::set<int>& painted,
                   const std::vector<Rational>& phi_w);

/// Nijenhuis norm via direct string scans in model coordinates, including a
/// literal scan through -beta for the mixed sum.
Rational nijenhuis(const Model& m, const std::set<int>& painted,
                   const std::vector<Rational>& phi_w);

} // namespace oracle

#endif
