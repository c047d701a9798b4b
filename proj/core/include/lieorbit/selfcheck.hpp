#ifndef LIEORBIT_SELFCHECK_HPP
#define LIEORBIT_SELFCHECK_HPP

#include <ostream>

namespace lieorbit {

/// Runs the built-in invariant battery (root counts, string identities,
/// sign multiplicativity, basis round-trips, solver cross-checks) and
/// writes one line per check. `quick` shrinks the rank windows. Returns
/// false when any check fails.
bool run_selfcheck(std::ostream& out, bool quick);

} // namespace lieorbit

#endif
