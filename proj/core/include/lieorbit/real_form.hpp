#ifndef LIEORBIT_REAL_FORM_HPP
#define LIEORBIT_REAL_FORM_HPP

#include <string>
#include <vector>

#include "lieorbit/vogan.hpp"

namespace lieorbit {

/// One simple summand of the semisimple part of a stabilizer.
struct StabilizerSummand {
  std::string name; // compact form: "su(3)", "so(7)", "sp(2)", "so(10)", "e6"
  long long dim;
};

/// Stabilizer of a generic point with the given support: a compact group
/// whose Lie algebra is (semisimple part) + R^center_rank.
struct StabilizerDecomposition {
  std::vector<StabilizerSummand> summands; // sorted by dim desc, then name
  int center_rank;                         // = |support|
  long long dim_v;                         // sum of summand dims + center_rank

  /// "su(3)+su(2)+R+R"; just "R" factors when the semisimple part is empty.
  std::string str() const;
};

/// Decomposes the root subsystem generated by the nodes outside `support`
/// (1-based node labels) into simple components and names their compact
/// forms. The ambient type disambiguates the rank-2 double-bond component.
StabilizerDecomposition stabilizer_decomposition(const RootSystem& rs,
                                                 const std::vector<int>& support);

/// Dimension of the maximal compact subgroup determined by the painting:
/// rank + 2 * (number of compact positive roots).
long long maximal_compact_dim(const RootData& rd);

/// Corank of the span of the compact roots inside the Cartan: the dimension
/// of the center of the maximal compact subgroup.
int compact_center_rank(const RootData& rd);

/// Names the real form of the ambient simple Lie algebra fixed by the
/// painting, e.g. "su(1,3)", "so(2,7)", "sp(4,R)", "so*(10)", "e7(-25)".
/// The pair (maximal compact dimension, its center rank) separates every
/// real form arising from a painted diagram; a miss is an internal error.
std::string identify_real_form(const RootData& rd);

} // namespace lieorbit

#endif
