#include "lieorbit/selfcheck.hpp"

#include <functional>
#include <string>
#include <vector>

#include "lieorbit/solver.hpp"

namespace lieorbit {

namespace {

std::vector<DynkinType> types_up_to(int max_rank) {
  std::vector<DynkinType> out;
  for (int r = 1; r <= max_rank; ++r) {
    out.push_back({Family::A, r});
    if (r >= 2) out.push_back({Family::B, r});
    if (r >= 3) out.push_back({Family::C, r});
    if (r >= 4) out.push_back({Family::D, r});
    if (r == 2) out.push_back({Family::G, 2});
    if (r == 4) out.push_back({Family::F, 4});
    if (r >= 6 && r <= 8) out.push_back({Family::E, r});
  }
  return out;
}

long long expected_positive_count(const DynkinType& t) {
  const long long l = t.rank;
  switch (t.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

bool check_root_counts(int max_rank) {
  for (const DynkinType& t : types_up_to(max_rank)) {
    RootSystem rs(t);
    if (rs.positive_count() != expected_positive_count(t)) return false;
  }
  return true;
}

bool check_string_identity(int max_rank) {
  // p - q = 2 (beta, alpha) / (alpha, alpha) for the alpha-string through beta.
  for (const DynkinType& t : types_up_to(max_rank)) {
    RootSystem rs(t);
    const auto& pos = rs.positive_roots();
    for (int a = 0; a < rs.positive_count(); ++a) {
      for (int b = 0; b < rs.positive_count(); ++b) {
        if (a == b) continue;
        const auto [p, q] = rs.root_string(pos[a], pos[b]);
        const Rational lhs(p - q);
        const Rational rhs = Rational(2) * rs.inner_root_root(pos[b], pos[a]) /
                             rs.root_length_sq(a);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool check_epsilon_multiplicative(int max_rank) {
  for (const DynkinType& t : types_up_to(max_rank)) {
    for (uint64_t mask = 1; mask < (1ULL << t.rank); ++mask) {
      std::set<int> painted;
      for (int b = 0; b < t.rank; ++b)
        if (mask & (1ULL << b)) painted.insert(b + 1);
      RootData rd(VoganDiagram(t, painted));
      const auto& pos = rd.rs.positive_roots();
      RootVec sum(t.rank);
      for (int a = 0; a < rd.rs.positive_count(); ++a)
        for (int b = a; b < rd.rs.positive_count(); ++b) {
          for (int i = 0; i < t.rank; ++i) sum[i] = pos[a][i] + pos[b][i];
          const int k = rd.rs.positive_index(sum);
          if (k < 0) continue;
          if (rd.eps[k] != -rd.eps[a] * rd.eps[b]) return false;
        }
    }
  }
  return true;
}

bool check_weight_round_trip(int max_rank) {
  for (const DynkinType& t : types_up_to(max_rank)) {
    RootSystem rs(t);
    for (int j = 0; j < t.rank; ++j) {
      WeightVec e(t.rank, Rational(0));
      e[j] = Rational(1);
      const std::vector<Rational> in_roots = rs.to_root_basis(e);
      if (rs.to_weight_basis(in_roots) != e) return false;
      for (int i = 0; i < t.rank; ++i)
        if (in_roots[i] != rs.cartan_inverse()[i][j]) return false;
    }
  }
  return true;
}

bool check_solver(int max_rank) {
  for (const DynkinType& t : types_up_to(max_rank)) {
    for (uint64_t mask = 1; mask < (1ULL << t.rank); ++mask) {
      std::set<int> painted;
      for (int b = 0; b < t.rank; ++b)
        if (mask & (1ULL << b)) painted.insert(b + 1);
      RootData rd(VoganDiagram(t, painted));
      bool has_neg = false, has_pos = false;
      int negatives = 0;
      for (const SpecialSolution& sol : enumerate_special(rd)) {
        if (!verify_solution(rd, sol)) return false;
        classify(rd, sol); // raises internal_error on any cross-check failure
        if (sol.lambda.sign() < 0) {
          has_neg = true;
          ++negatives;
        }
        if (sol.lambda.sign() > 0) has_pos = true;
      }
      if (has_neg && has_pos) return false;
      if (negatives > 1) return false;
    }
  }
  return true;
}

bool check_single_painted_special(int max_rank) {
  // A diagram with one painted node always admits a solution on that node.
  for (const DynkinType& t : types_up_to(max_rank)) {
    for (int node = 1; node <= t.rank; ++node) {
      RootData rd(VoganDiagram(t, {node}));
      if (!solve_subset(rd, {node})) return false;
    }
  }
  return true;
}

} // namespace

bool run_selfcheck(std::ostream& out, bool quick) {
  struct Check {
    std::string name;
    std::function<bool()> fn;
  };
  const int small = quick ? 3 : 4;
  const int mid = quick ? 4 : 5;
  const int large = quick ? 5 : 8;
  const std::vector<Check> checks = {
      {"positive-root counts match closed forms",
       [&] { return check_root_counts(large); }},
      {"root-string lengths match inner products",
       [&] { return check_string_identity(small); }},
      {"sign assignment is multiplicative on root sums",
       [&] { return check_epsilon_multiplicative(small); }},
      {"weight/root basis conversions round-trip",
       [&] { return check_weight_round_trip(large); }},
      {"solutions verify and stay sign-coherent",
       [&] { return check_solver(mid); }},
      {"single painted node is always special",
       [&] { return check_single_painted_special(quick ? 4 : 6); }},
  };
  bool all_ok = true;
  for (const Check& c : checks) {
    bool ok = false;
    std::string detail;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    out << (ok ? "ok" : "FAIL") << ": " << c.name << detail << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok;
}

} // namespace lieorbit
