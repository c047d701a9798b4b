#include "lieorbit/solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "lieorbit/errors.hpp"

namespace lieorbit {

namespace {

WeightVec rationalize(const std::vector<long long>& v) {
  return WeightVec(v.begin(), v.end());
}

/// (w, x) for a weight-basis w and root-basis x, via (w, gamma_j) =
/// w_j * |gamma_j|^2 / 2.
Rational inner_weight_rootvec(const RootSystem& rs, const WeightVec& w,
                              const std::vector<long long>& x) {
  Rational acc(0);
  for (int i = 0; i < rs.rank(); ++i) {
    if (x[i] == 0 || w[i].is_zero()) continue;
    acc += w[i] * Rational(x[i]) * rs.lengths_sq()[i];
  }
  return acc / Rational(2);
}

uint64_t mix_seed(const RootData& rd, const std::vector<int>& support) {
  uint64_t h = 0x9e3779b97f4a7c15ULL;
  auto fold = [&h](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  fold(static_cast<uint64_t>(static_cast<char>(rd.vd.type.family)));
  fold(static_cast<uint64_t>(rd.vd.type.rank));
  uint64_t painted_bits = 0, support_bits = 0;
  for (int p : rd.vd.painted) painted_bits |= 1ULL << p;
  for (int s : support) support_bits |= 1ULL << s;
  fold(painted_bits);
  fold(support_bits);
  return h;
}

std::string type_label_for(const Rational& lambda, bool integrable) {
  std::string base;
  if (lambda.sign() < 0) {
    base = "GT";
  } else if (lambda.is_zero()) {
    base = "CY";
  } else {
    base = "F";
    if (integrable)
      throw internal_error("integrable structure with positive proportionality factor");
  }
  return integrable ? base : "s" + base;
}

} // namespace

std::optional<SpecialSolution> solve_subset(const RootData& rd, const std::set<int>& S) {
  const RootSystem& rs = rd.rs;
  std::vector<char> in_S(rs.rank(), 0);
  for (int node : S) {
    if (node < 1 || node > rs.rank()) throw usage_error("support node out of range");
    in_S[node - 1] = 1;
  }
  for (int node : rd.vd.painted)
    if (!in_S[node - 1]) throw usage_error("support must contain the painted set");

  // c = eta - 2 * sum of positive roots vanishing on S.
  std::vector<long long> c(rd.eta);
  for (int k = 0; k < rs.positive_count(); ++k) {
    const RootVec& root = rs.positive_roots()[k];
    bool off_S = true;
    for (int i = 0; i < rs.rank() && off_S; ++i)
      if (in_S[i] && root[i] != 0) off_S = false;
    if (!off_S) continue;
    for (int i = 0; i < rs.rank(); ++i) c[i] -= 2LL * root[i];
  }
  const std::vector<long long> w = rs.to_weight_basis_int(c);

  bool all_zero = true;
  for (long long v : w) all_zero = all_zero && v == 0;
  if (all_zero) {
    SpecialSolution sol;
    sol.kind = SolutionKind::Cone;
    sol.support.assign(S.begin(), S.end());
    sol.phi_w.assign(rs.rank(), 0);
    for (int node : S) sol.phi_w[node - 1] = 1;
    sol.lambda = Rational(0);
    return sol;
  }

  int sigma = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (!in_S[i]) {
      if (w[i] != 0) return std::nullopt;
      continue;
    }
    if (w[i] == 0) return std::nullopt; // support would shrink below S
    const int s = w[i] > 0 ? 1 : -1;
    if (sigma == 0) sigma = s;
    if (s != sigma) return std::nullopt;
  }

  long long g = 0;
  for (long long v : w) g = std::gcd(g, v < 0 ? -v : v);
  SpecialSolution sol;
  sol.kind = SolutionKind::Point;
  sol.support.assign(S.begin(), S.end());
  sol.phi_w.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) sol.phi_w[i] = sigma * w[i] / g;
  sol.lambda = Rational(sigma * g);
  return sol;
}

std::vector<SpecialSolution> enumerate_special(const RootData& rd) {
  const int r = rd.rs.rank();
  std::vector<int> free_nodes;
  for (int node = 1; node <= r; ++node)
    if (!rd.vd.painted.count(node)) free_nodes.push_back(node);

  std::vector<SpecialSolution> out;
  for (uint64_t mask = 0; mask < (1ULL << free_nodes.size()); ++mask) {
    std::set<int> S(rd.vd.painted);
    for (std::size_t b = 0; b < free_nodes.size(); ++b)
      if (mask & (1ULL << b)) S.insert(free_nodes[b]);
    if (auto sol = solve_subset(rd, S)) out.push_back(std::move(*sol));
  }
  std::sort(out.begin(), out.end(), [](const SpecialSolution& a, const SpecialSolution& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    return a.support < b.support;
  });
  return out;
}

bool verify_solution(const RootData& rd, const SpecialSolution& sol) {
  const RootSystem& rs = rd.rs;
  const OrbitSpec os = make_orbit_spec(rd, rationalize(sol.phi_w));
  if (RootSystem::support(os.phi) != sol.support) return false;
  const std::optional<Rational> lambda = check_special(os);
  if (!lambda || *lambda != sol.lambda) return false;

  if (sol.kind == SolutionKind::Point) {
    if (sol.lambda.is_zero()) return false;
    long long g = 0;
    for (long long v : sol.phi_w) {
      if (v < 0) return false;
      g = std::gcd(g, v);
    }
    if (g != 1) return false;
    // Independent factor: lambda = (eta, phi) / |phi|^2, valid because the
    // phi-perp correction in phi' is orthogonal to phi.
    const Rational lam2 = inner_weight_rootvec(rs, os.phi, rd.eta) /
                          rs.inner_weight_weight(os.phi, os.phi);
    if (lam2 != sol.lambda) return false;
    return true;
  }

  // Cone: phi' must vanish identically on the open cone, checked at the
  // barycenter and at seeded random interior points.
  for (long long v : phi_prime(os))
    if (v != 0) return false;
  std::mt19937_64 rng(mix_seed(rd, sol.support));
  std::uniform_int_distribution<int> digit(1, 9);
  for (int trial = 0; trial < 8; ++trial) {
    WeightVec phi(rs.rank(), Rational(0));
    for (int node : sol.support) phi[node - 1] = Rational(digit(rng), digit(rng));
    const OrbitSpec pt = make_orbit_spec(rd, phi);
    const std::optional<Rational> lam = check_special(pt);
    if (!lam || !lam->is_zero()) return false;
  }
  return true;
}

std::string OrbitReport::phi_str() const {
  std::ostringstream os;
  if (cone && support.size() >= 2) {
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (k > 0) os << " + ";
      os << "t" << (k + 1) << " phi_" << support[k];
    }
    os << " (all ti > 0)";
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i].is_zero()) continue;
    if (!first) os << "+";
    if (phi[i].is_integer()) {
      if (phi[i].num() != 1) os << phi[i].num();
    } else {
      os << "(" << phi[i].str() << ")";
    }
    os << "phi_" << (i + 1);
    first = false;
  }
  return os.str();
}

namespace {

OrbitReport report_common(const RootData& rd, const OrbitSpec& os) {
  OrbitReport rep;
  rep.type = rd.vd.type;
  rep.painted = rd.vd.painted;
  rep.support = RootSystem::support(os.phi);
  rep.phi = os.phi;
  rep.s = hermitian_scalar_curvature(os);
  rep.dims = orbit_dimensions(os);
  rep.real_form = identify_real_form(rd);
  rep.stabilizer = stabilizer_decomposition(rd.rs, rep.support);
  rep.integrable = is_integrable(rd);
  rep.nijenhuis_sq = nijenhuis_norm_sq(os);
  if (rep.nijenhuis_sq.is_zero() != rep.integrable)
    throw internal_error("Nijenhuis norm inconsistent with the root-pair criterion");
  if (rep.stabilizer.dim_v != rep.dims.dim_v)
    throw internal_error("stabilizer dimension mismatch");
  return rep;
}

} // namespace

OrbitReport classify(const RootData& rd, const SpecialSolution& sol) {
  WeightVec phi = rationalize(sol.phi_w);
  const OrbitSpec os = make_orbit_spec(rd, std::move(phi));
  OrbitReport rep = report_common(rd, os);
  rep.cone = sol.kind == SolutionKind::Cone;
  rep.lambda = sol.lambda;
  rep.type_label = type_label_for(sol.lambda, rep.integrable);
  // s = (dim_m / 2) * lambda for special phi.
  if (rep.s != Rational(rep.dims.dim_m, 2) * sol.lambda)
    throw internal_error("scalar curvature inconsistent with proportionality factor");
  rep.phi_is_root = rep.cone && rep.support.size() >= 2 ? false : phi_in_delta(os);
  return rep;
}

OrbitReport analyze_orbit(const RootData& rd, const WeightVec& phi) {
  const OrbitSpec os = make_orbit_spec(rd, phi);
  OrbitReport rep = report_common(rd, os);
  rep.cone = false;
  if (auto lam = check_special(os)) {
    rep.lambda = *lam;
    rep.type_label = type_label_for(*lam, rep.integrable);
  }
  rep.phi_is_root = phi_in_delta(os);
  return rep;
}

} // namespace lieorbit
