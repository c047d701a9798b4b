#ifndef LIEORBIT_ORBIT_HPP
#define LIEORBIT_ORBIT_HPP

#include <optional>
#include <vector>

#include "lieorbit/vogan.hpp"

namespace lieorbit {

/// An adjoint-orbit parameter: a painted diagram together with a dominant
/// functional phi in the weight basis whose support contains every painted
/// node. The support condition keeps the stabilizer compact and makes every
/// root orthogonal to phi compact, which the analytics below rely on.
struct OrbitSpec {
  const RootData* rd;
  WeightVec phi;
};

/// Validates dominance and the support condition; throws usage_error.
OrbitSpec make_orbit_spec(const RootData& rd, WeightVec phi);

/// Indices of the positive roots orthogonal to phi. For dominant phi these
/// are exactly the roots supported on the complement of supp(phi).
std::vector<int> phi_perp_positive_roots(const OrbitSpec& os);

/// Root-basis coordinates of phi' = eta - 2 * sum of the roots in phi-perp.
/// Always integral.
std::vector<long long> phi_prime(const OrbitSpec& os);

/// The proportionality factor lambda with phi' = lambda * phi, when phi' is
/// an exact rational multiple of phi; empty otherwise.
std::optional<Rational> check_special(const OrbitSpec& os);

/// Hermitian scalar curvature
///   s = -2 * sum over alpha, beta not orthogonal to phi of
///       eps_alpha (alpha, beta) / (phi, beta).
Rational hermitian_scalar_curvature(const OrbitSpec& os);

struct OrbitDimensions {
  long long dim_g;
  long long dim_v; // stabilizer: rank + 2 |phi-perp|
  long long dim_m; // orbit: dim_g - dim_v
};

OrbitDimensions orbit_dimensions(const OrbitSpec& os);

/// True when no two non-compact positive roots sum to a root. Independent of
/// phi for admissible orbit parameters (supp(phi) contains the painted set),
/// because every non-compact positive root then pairs strictly with phi.
bool is_integrable(const RootData& rd);

/// Squared norm of the Nijenhuis tensor of the canonical almost-complex
/// structure:
///   sum over non-compact alpha, beta off phi-perp with alpha+beta a root of
///     (phi, alpha+beta) / ((phi,alpha)(phi,beta)) * N^2(alpha, beta)
/// + sum over compact alpha, non-compact beta off phi-perp with alpha-beta a
///   positive root of
///     2 (phi, alpha-beta) / ((phi,alpha)(phi,beta)) * N^2(alpha, -beta),
/// where N^2(alpha, beta) = q(1+p)(alpha,alpha)/2 from the alpha-string
/// through beta. Zero exactly when is_integrable holds.
Rational nijenhuis_norm_sq(const OrbitSpec& os);

/// Literal membership: phi itself (not a multiple) lies in the root set.
bool phi_in_delta(const OrbitSpec& os);

} // namespace lieorbit

#endif
