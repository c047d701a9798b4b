#include "lieorbit/orbit.hpp"

#include <algorithm>

#include "lieorbit/errors.hpp"

namespace lieorbit {

namespace {

std::vector<char> support_mask(const WeightVec& phi) {
  std::vector<char> mask(phi.size(), 0);
  for (std::size_t i = 0; i < phi.size(); ++i) mask[i] = phi[i].is_zero() ? 0 : 1;
  return mask;
}

bool vanishes_on_support(const RootVec& root, const std::vector<char>& mask) {
  for (std::size_t i = 0; i < root.size(); ++i)
    if (mask[i] && root[i] != 0) return false;
  return true;
}

/// Positive-root indices split by orthogonality to phi, with (phi, beta)
/// cached for the non-orthogonal part.
struct Split {
  std::vector<int> perp;
  std::vector<int> off;
  std::vector<Rational> ip_off; // (phi, off[k])
};

Split split_by_phi(const OrbitSpec& os) {
  const RootSystem& rs = os.rd->rs;
  const std::vector<char> mask = support_mask(os.phi);
  Split sp;
  for (int k = 0; k < rs.positive_count(); ++k) {
    if (vanishes_on_support(rs.positive_roots()[k], mask)) {
      sp.perp.push_back(k);
    } else {
      sp.off.push_back(k);
      sp.ip_off.push_back(rs.inner_weight_root(os.phi, rs.positive_roots()[k]));
    }
  }
  return sp;
}

} // namespace

OrbitSpec make_orbit_spec(const RootData& rd, WeightVec phi) {
  if (static_cast<int>(phi.size()) != rd.rs.rank())
    throw usage_error("phi must have one coordinate per node");
  if (!RootSystem::is_dominant(phi))
    throw usage_error("phi must be dominant: all weight coordinates >= 0");
  bool nonzero = false;
  for (const Rational& c : phi) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw usage_error("phi must be nonzero");
  for (int node : rd.vd.painted)
    if (phi[node - 1].is_zero())
      throw usage_error("support of phi must contain every painted node");
  return OrbitSpec{&rd, std::move(phi)};
}

std::vector<int> phi_perp_positive_roots(const OrbitSpec& os) {
  return split_by_phi(os).perp;
}

std::vector<long long> phi_prime(const OrbitSpec& os) {
  const RootSystem& rs = os.rd->rs;
  std::vector<long long> out(os.rd->eta.begin(), os.rd->eta.end());
  for (int k : phi_perp_positive_roots(os)) {
    const RootVec& root = rs.positive_roots()[k];
    for (int i = 0; i < rs.rank(); ++i) out[i] -= 2LL * root[i];
  }
  return out;
}

std::optional<Rational> check_special(const OrbitSpec& os) {
  const RootSystem& rs = os.rd->rs;
  const std::vector<long long> pw = rs.to_weight_basis_int(phi_prime(os));
  // Proportionality coordinate by coordinate in the weight basis.
  Rational lambda(0);
  bool have = false;
  for (int i = 0; i < rs.rank(); ++i) {
    if (os.phi[i].is_zero()) {
      if (pw[i] != 0) return std::nullopt;
      continue;
    }
    Rational ratio = Rational(pw[i]) / os.phi[i];
    if (!have) {
      lambda = ratio;
      have = true;
    } else if (ratio != lambda) {
      return std::nullopt;
    }
  }
  if (!have) throw internal_error("check_special on zero phi");
  return lambda;
}

Rational hermitian_scalar_curvature(const OrbitSpec& os) {
  const RootSystem& rs = os.rd->rs;
  const Split sp = split_by_phi(os);
  Rational s(0);
  for (std::size_t a = 0; a < sp.off.size(); ++a) {
    const RootVec& alpha = rs.positive_roots()[sp.off[a]];
    const int eps = os.rd->eps[sp.off[a]];
    for (std::size_t b = 0; b < sp.off.size(); ++b) {
      const Rational ip = rs.inner_root_root(alpha, rs.positive_roots()[sp.off[b]]);
      if (ip.is_zero()) continue;
      s = s + Rational(eps) * ip / sp.ip_off[b];
    }
  }
  return Rational(-2) * s;
}

OrbitDimensions orbit_dimensions(const OrbitSpec& os) {
  const RootSystem& rs = os.rd->rs;
  const long long n_perp = static_cast<long long>(phi_perp_positive_roots(os).size());
  OrbitDimensions d;
  d.dim_g = rs.dim_g();
  d.dim_v = rs.rank() + 2 * n_perp;
  d.dim_m = d.dim_g - d.dim_v;
  return d;
}

bool is_integrable(const RootData& rd) {
  const RootSystem& rs = rd.rs;
  std::vector<int> nc;
  for (int k = 0; k < rs.positive_count(); ++k)
    if (rd.eps[k] > 0) nc.push_back(k); // eps = +1 marks non-compact roots
  RootVec sum(rs.rank());
  for (std::size_t a = 0; a < nc.size(); ++a) {
    for (std::size_t b = a + 1; b < nc.size(); ++b) {
      const RootVec& x = rs.positive_roots()[nc[a]];
      const RootVec& y = rs.positive_roots()[nc[b]];
      for (int i = 0; i < rs.rank(); ++i) sum[i] = x[i] + y[i];
      if (rs.is_root(sum)) return false;
    }
  }
  return true;
}

Rational nijenhuis_norm_sq(const OrbitSpec& os) {
  const RootSystem& rs = os.rd->rs;
  const Split sp = split_by_phi(os);
  std::vector<int> nc, cp; // non-compact / compact positions within sp.off
  for (std::size_t k = 0; k < sp.off.size(); ++k)
    (os.rd->eps[sp.off[k]] > 0 ? nc : cp).push_back(static_cast<int>(k));

  Rational total(0);
  RootVec tmp(rs.rank());

  // Pairs of non-compact roots whose sum is a root.
  for (int a : nc) {
    const RootVec& alpha = rs.positive_roots()[sp.off[a]];
    const Rational len = rs.root_length_sq(sp.off[a]);
    for (int b : nc) {
      if (a == b) continue; // 2*alpha is never a root
      const RootVec& beta = rs.positive_roots()[sp.off[b]];
      for (int i = 0; i < rs.rank(); ++i) tmp[i] = alpha[i] + beta[i];
      if (!rs.is_root(tmp)) continue;
      const auto [p, q] = rs.root_string(alpha, beta);
      const Rational n2 = Rational(q) * Rational(1 + p) * len / Rational(2);
      const Rational ip_sum = rs.inner_weight_root(os.phi, tmp);
      total = total + ip_sum / (sp.ip_off[a] * sp.ip_off[b]) * n2;
    }
  }

  // Compact alpha against non-compact beta with alpha - beta a positive root.
  for (int a : cp) {
    const RootVec& alpha = rs.positive_roots()[sp.off[a]];
    const Rational len = rs.root_length_sq(sp.off[a]);
    for (int b : nc) {
      const RootVec& beta = rs.positive_roots()[sp.off[b]];
      for (int i = 0; i < rs.rank(); ++i) tmp[i] = alpha[i] - beta[i];
      if (!rs.is_root(tmp)) continue;
      bool positive = false;
      for (int i = 0; i < rs.rank(); ++i) {
        if (tmp[i] > 0) { positive = true; break; }
        if (tmp[i] < 0) break;
      }
      if (!positive) continue; // the sign factor vanishes on negative differences
      // The alpha-string through -beta mirrors the one through beta.
      const auto [p, q] = rs.root_string(alpha, beta);
      const Rational n2 = Rational(p) * Rational(1 + q) * len / Rational(2);
      const Rational ip_diff = rs.inner_weight_root(os.phi, tmp);
      total = total + Rational(2) * ip_diff / (sp.ip_off[a] * sp.ip_off[b]) * n2;
    }
  }
  return total;
}

bool phi_in_delta(const OrbitSpec& os) {
  const RootSystem& rs = os.rd->rs;
  const WeightVec in_roots = rs.to_root_basis(os.phi);
  RootVec cand(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    if (!in_roots[i].is_integer()) return false;
    const long long v = in_roots[i].num();
    if (v < -64 || v > 64) return false;
    cand[i] = static_cast<int>(v);
  }
  return rs.is_root(cand);
}

} // namespace lieorbit
