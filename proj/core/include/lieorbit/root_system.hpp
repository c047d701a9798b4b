#ifndef LIEORBIT_ROOT_SYSTEM_HPP
#define LIEORBIT_ROOT_SYSTEM_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lieorbit/dynkin.hpp"
#include "lieorbit/rational.hpp"

namespace lieorbit {

/// Integer coordinates over the simple roots.
using RootVec = std::vector<int>;

/// Rational coordinates over the fundamental weights.
using WeightVec = std::vector<Rational>;

/// Cartan matrix A_ij = 2(g_i, g_j) / (g_i, g_i) for the node convention in
/// dynkin.hpp. Entries are exact integers.
std::vector<std::vector<int>> cartan_matrix(const DynkinType& t);

/// A simple root system: positive roots generated from the Cartan matrix by
/// root-string closure, plus the invariant form, fundamental weights and
/// basis conversions. Positive roots are ordered by height, starting with
/// the simple roots in node order; above height one each height level is
/// sorted lexicographically. That order is part of the interface.
class RootSystem {
public:
  explicit RootSystem(const DynkinType& t);

  /// Same type with globally rescaled squared lengths (must keep the default
  /// ratios). Used to check that reported quantities do not depend on the
  /// normalization of the invariant form.
  RootSystem(const DynkinType& t, std::vector<Rational> lengths_sq);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rational>>& cartan_inverse() const { return cartan_inv_; }

  /// Squared simple-root lengths (g_i, g_i).
  const std::vector<Rational>& lengths_sq() const { return lengths_; }

  /// (g_i, g_j) as a matrix; the invariant form on root coordinates.
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  const std::vector<RootVec>& positive_roots() const { return positive_; }
  int positive_count() const { return static_cast<int>(positive_.size()); }

  /// rank + 2 * |positive roots| = dimension of the ambient Lie algebra.
  long long dim_g() const { return rank() + 2LL * positive_count(); }

  /// Membership in the full root set (either sign).
  bool is_root(const RootVec& v) const;

  /// Index into positive_roots(), or -1.
  int positive_index(const RootVec& v) const;

  int height(int positive_idx) const { return heights_[static_cast<size_t>(positive_idx)]; }
  Rational root_length_sq(int positive_idx) const { return root_len_[static_cast<size_t>(positive_idx)]; }

  Rational inner_root_root(const RootVec& a, const RootVec& b) const;

  /// (psi, alpha) = 1/2 * sum_i w_i n_i (g_i, g_i) for psi in the weight
  /// basis and alpha in the root basis.
  Rational inner_weight_root(const WeightVec& w, const RootVec& alpha) const;

  Rational inner_weight_weight(const WeightVec& a, const WeightVec& b) const;

  /// Weight basis -> root basis (n = A^{-1} w).
  std::vector<Rational> to_root_basis(const WeightVec& w) const;

  /// Root basis -> weight basis (w = A n).
  WeightVec to_weight_basis(const std::vector<Rational>& root_coords) const;
  std::vector<long long> to_weight_basis_int(const std::vector<long long>& root_coords) const;

  /// Alpha-string through beta: beta - p*alpha ... beta + q*alpha all roots.
  /// Preconditions: alpha a positive root, beta a root, beta != +-alpha.
  std::pair<int, int> root_string(const RootVec& alpha, const RootVec& beta) const;

  static bool is_dominant(const WeightVec& w);

  /// 1-based indices of the nonzero weight coordinates.
  static std::vector<int> support(const WeightVec& w);

private:
  void build();
  static uint64_t pack(const RootVec& v, bool& ok);

  DynkinType type_;
  std::vector<Rational> lengths_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<RootVec> positive_;
  std::vector<int> heights_;
  std::vector<Rational> root_len_;
  std::unordered_map<uint64_t, int> index_;
};

} // namespace lieorbit

#endif
