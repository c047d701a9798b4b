#ifndef LIEORBIT_DYNKIN_HPP
#define LIEORBIT_DYNKIN_HPP

#include <set>
#include <string>
#include <vector>

#include "lieorbit/rational.hpp"

namespace lieorbit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Simple type of a complex simple Lie algebra, e.g. B4.
/// Admissible ranks: A >= 1, B >= 2, C >= 3, D >= 4, E in {6,7,8}, F = 4, G = 2.
/// The lower bounds make every type appear exactly once (no B1 = A1 aliases).
struct DynkinType {
  Family family;
  int rank;

  std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator<(const DynkinType& a, const DynkinType& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return static_cast<char>(a.family) < static_cast<char>(b.family);
  }
};

/// Maximum supported rank. Keeps root coordinates packable into 64 bits for
/// fast membership tests; far above every bundled table and sweep.
constexpr int kMaxRank = 12;

/// Throws usage_error when the (family, rank) pair is not admissible.
void validate_type(const DynkinType& t);

/// Parses "B4", "b4", "e6"... Throws usage_error on anything else.
DynkinType parse_type(const std::string& text);

/// Undirected bond between simple roots i and j (0-based), with multiplicity
/// 1, 2 or 3. Node numbering follows the table convention:
///   A/B/C: a path 1..rank; B has its double bond at (1,2) with node 1 short,
///          C at (rank-1, rank) with node rank long.
///   D: path 1..rank-1 with node rank attached to node rank-2.
///   E: path 1..rank-1 with node rank attached to node 3 (E6), 4 (E7), 5 (E8).
///   F4: path with the double bond at (2,3); nodes 1,2 short.
///   G2: one triple bond; node 1 short.
struct Bond {
  int i;
  int j;
  int mult;
};

std::vector<Bond> bonds(const DynkinType& t);

/// Squared simple-root lengths in the default normalization: 1 on every node
/// of a simply laced type, 1/2 for short/long in B, C, F4, and 1/3 in G2.
std::vector<Rational> default_lengths(const DynkinType& t);

/// All diagram automorphisms as node permutations (0-based, perm[i] = image).
/// Identity included. Used to list painted sets up to diagram symmetry.
std::vector<std::vector<int>> diagram_automorphisms(const DynkinType& t);

/// Lexicographically smallest image of a painted set (1-based indices) under
/// the diagram automorphism group.
std::set<int> canonical_painted(const DynkinType& t, const std::set<int>& painted);

} // namespace lieorbit

#endif
