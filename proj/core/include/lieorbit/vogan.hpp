#ifndef LIEORBIT_VOGAN_HPP
#define LIEORBIT_VOGAN_HPP

#include <set>
#include <string>
#include <vector>

#include "lieorbit/root_system.hpp"

namespace lieorbit {

/// A connected Dynkin diagram with a nonempty set of painted nodes (1-based).
/// Painted nodes mark the non-compact simple root spaces; the empty set would
/// describe a compact form, which carries no orbit geometry here, so it is
/// rejected at construction.
struct VoganDiagram {
  DynkinType type;
  std::set<int> painted;

  VoganDiagram(const DynkinType& t, std::set<int> painted_nodes);

  std::string str() const;
};

/// Root system plus the compact/non-compact sign of every positive root.
/// eps[k] is +1 when positive root k is non-compact, -1 when compact:
/// eps = (-1)^(1 + sum of painted coordinates).
struct RootData {
  RootSystem rs;
  VoganDiagram vd;
  std::vector<int> eps;
  std::vector<long long> eta; // root-basis coordinates of -2 * sum(eps_a * a)

  RootData(const VoganDiagram& diagram);
  RootData(const VoganDiagram& diagram, std::vector<Rational> lengths_sq);

  int compact_positive_count() const;
  int noncompact_positive_count() const;

private:
  void finish();
};

/// Sign of a positive root given by index or coordinates.
int epsilon(const RootData& rd, int positive_idx);
int epsilon(const RootData& rd, const RootVec& alpha);

/// Root-basis coordinates of eta = -2 * sum over positive roots of eps_a * a.
const std::vector<long long>& eta(const RootData& rd);

} // namespace lieorbit

#endif
