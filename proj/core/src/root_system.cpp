#include "lieorbit/root_system.hpp"

#include <algorithm>

#include "lieorbit/errors.hpp"

namespace lieorbit {

namespace {

std::vector<std::vector<Rational>> gram_from_lengths(const DynkinType& t,
                                                     const std::vector<Rational>& len) {
  const size_t r = static_cast<size_t>(t.rank);
  std::vector<std::vector<Rational>> g(r, std::vector<Rational>(r, Rational(0)));
  for (size_t i = 0; i < r; ++i) g[i][i] = len[i];
  // Bonded simple roots meet at an obtuse angle with (g_i, g_j) = -max/2;
  // combined with the length ratios this encodes the bond multiplicity.
  for (const Bond& b : bonds(t)) {
    const size_t i = static_cast<size_t>(b.i), j = static_cast<size_t>(b.j);
    Rational m = len[i] > len[j] ? len[i] : len[j];
    g[i][j] = -m / Rational(2);
    g[j][i] = g[i][j];
  }
  return g;
}

std::vector<std::vector<int>> cartan_from_gram(const std::vector<std::vector<Rational>>& g) {
  const size_t r = g.size();
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      Rational v = Rational(2) * g[i][j] / g[i][i];
      if (!v.is_integer()) throw internal_error("non-integral Cartan entry");
      a[i][j] = static_cast<int>(v.num());
    }
  }
  return a;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& a) {
  const size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n + i] = Rational(1);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw internal_error("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    Rational d = m[col][col];
    for (size_t j = 0; j < 2 * n; ++j) m[col][j] /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

} // namespace

std::vector<std::vector<int>> cartan_matrix(const DynkinType& t) {
  validate_type(t);
  return cartan_from_gram(gram_from_lengths(t, default_lengths(t)));
}

RootSystem::RootSystem(const DynkinType& t) : RootSystem(t, default_lengths(t)) {}

RootSystem::RootSystem(const DynkinType& t, std::vector<Rational> lengths_sq)
    : type_(t), lengths_(std::move(lengths_sq)) {
  validate_type(type_);
  if (lengths_.size() != static_cast<size_t>(type_.rank))
    throw usage_error("lengths vector does not match rank");
  for (const Rational& l : lengths_)
    if (l.sign() <= 0) throw usage_error("squared lengths must be positive");
  gram_ = gram_from_lengths(type_, lengths_);
  cartan_ = cartan_from_gram(gram_);
  // The Cartan matrix is an invariant of the type; any rescaling that breaks
  // the default length ratios would change it, so verify against the default.
  if (cartan_ != cartan_matrix(type_))
    throw usage_error("lengths must be a global rescaling of the default normalization");
  cartan_inv_ = invert(cartan_);
  build();
}

uint64_t RootSystem::pack(const RootVec& v, bool& ok) {
  uint64_t key = 0;
  ok = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < -7 || v[i] > 7) {
      ok = false; // genuine root coordinates stay within [-6, 6]
      return 0;
    }
    key |= static_cast<uint64_t>(v[i] + 8) << (4 * i);
  }
  return key;
}

void RootSystem::build() {
  const int r = type_.rank;
  positive_.clear();
  heights_.clear();
  index_.clear();

  auto insert = [this](const RootVec& v, int h) {
    bool ok = false;
    uint64_t key = pack(v, ok);
    if (!ok) throw internal_error("root coordinate out of packing range");
    if (index_.count(key)) return false;
    index_.emplace(key, static_cast<int>(positive_.size()));
    positive_.push_back(v);
    heights_.push_back(h);
    return true;
  };

  for (int i = 0; i < r; ++i) {
    RootVec e(static_cast<size_t>(r), 0);
    e[static_cast<size_t>(i)] = 1;
    insert(e, 1);
  }

  // Height-by-height closure: beta + g_i is a root iff q = p - <beta, g_i^v>
  // is positive, where p counts how far the string extends below beta.
  size_t frontier_begin = 0;
  int h = 1;
  while (frontier_begin < positive_.size()) {
    size_t frontier_end = positive_.size();
    std::vector<RootVec> next;
    for (size_t k = frontier_begin; k < frontier_end; ++k) {
      RootVec beta = positive_[k];
      for (int i = 0; i < r; ++i) {
        long long pairing = 0;
        for (int j = 0; j < r; ++j)
          pairing += static_cast<long long>(cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]) * beta[static_cast<size_t>(j)];
        int p = 0;
        RootVec down = beta;
        for (;;) {
          down[static_cast<size_t>(i)] -= 1;
          bool any = false;
          for (int j = 0; j < r; ++j) any = any || down[static_cast<size_t>(j)] != 0;
          if (!any) break; // hit zero: beta was g_i itself
          bool ok = false;
          uint64_t key = pack(down, ok);
          if (!ok || !index_.count(key)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          RootVec up = beta;
          up[static_cast<size_t>(i)] += 1;
          next.push_back(std::move(up));
        }
      }
    }
    ++h;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier_begin = frontier_end;
    for (const RootVec& v : next) insert(v, h);
  }

  root_len_.reserve(positive_.size());
  for (const RootVec& v : positive_) root_len_.push_back(inner_root_root(v, v));
}

bool RootSystem::is_root(const RootVec& v) const {
  if (positive_index(v) >= 0) return true;
  RootVec neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  return positive_index(neg) >= 0;
}

int RootSystem::positive_index(const RootVec& v) const {
  if (v.size() != static_cast<size_t>(type_.rank)) throw usage_error("coordinate size mismatch");
  bool ok = false;
  uint64_t key = pack(v, ok);
  if (!ok) return -1;
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

Rational RootSystem::inner_root_root(const RootVec& a, const RootVec& b) const {
  const size_t r = a.size();
  Rational acc(0);
  for (size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < r; ++j) {
      if (b[j] == 0 || gram_[i][j].is_zero()) continue;
      acc += Rational(static_cast<long long>(a[i]) * b[j]) * gram_[i][j];
    }
  }
  return acc;
}

Rational RootSystem::inner_weight_root(const WeightVec& w, const RootVec& alpha) const {
  // (phi_i, alpha) = n_i(alpha) * (g_i, g_i) / 2 by duality.
  Rational acc(0);
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_zero() || alpha[i] == 0) continue;
    acc += w[i] * Rational(alpha[i]) * lengths_[i];
  }
  return acc / Rational(2);
}

Rational RootSystem::inner_weight_weight(const WeightVec& a, const WeightVec& b) const {
  std::vector<Rational> nb = to_root_basis(b);
  Rational acc(0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || nb[i].is_zero()) continue;
    acc += a[i] * nb[i] * lengths_[i];
  }
  return acc / Rational(2);
}

std::vector<Rational> RootSystem::to_root_basis(const WeightVec& w) const {
  const size_t r = w.size();
  if (r != static_cast<size_t>(type_.rank)) throw usage_error("coordinate size mismatch");
  std::vector<Rational> n(r, Rational(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (!w[j].is_zero()) n[i] += cartan_inv_[i][j] * w[j];
  return n;
}

WeightVec RootSystem::to_weight_basis(const std::vector<Rational>& root_coords) const {
  const size_t r = root_coords.size();
  if (r != static_cast<size_t>(type_.rank)) throw usage_error("coordinate size mismatch");
  WeightVec w(r, Rational(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (!root_coords[j].is_zero())
        w[i] += Rational(cartan_[i][j]) * root_coords[j];
  return w;
}

std::vector<long long> RootSystem::to_weight_basis_int(const std::vector<long long>& root_coords) const {
  const size_t r = root_coords.size();
  std::vector<long long> w(r, 0);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      w[i] += static_cast<long long>(cartan_[i][j]) * root_coords[j];
  return w;
}

std::pair<int, int> RootSystem::root_string(const RootVec& alpha, const RootVec& beta) const {
  if (positive_index(alpha) < 0) throw usage_error("alpha must be a positive root");
  if (!is_root(beta)) throw usage_error("beta must be a root");
  const size_t r = alpha.size();
  bool same = true, opposite = true;
  for (size_t i = 0; i < r; ++i) {
    same = same && alpha[i] == beta[i];
    opposite = opposite && alpha[i] == -beta[i];
  }
  if (same || opposite) throw usage_error("string through +-alpha is undefined");

  auto shifted = [&](int k) {
    RootVec v(r);
    for (size_t i = 0; i < r; ++i) v[i] = beta[i] + k * alpha[i];
    return v;
  };
  int p = 0;
  while (is_root(shifted(-(p + 1)))) ++p;
  int q = 0;
  while (is_root(shifted(q + 1))) ++q;
  return {p, q};
}

bool RootSystem::is_dominant(const WeightVec& w) {
  for (const Rational& x : w)
    if (x.sign() < 0) return false;
  return true;
}

std::vector<int> RootSystem::support(const WeightVec& w) {
  std::vector<int> s;
  for (size_t i = 0; i < w.size(); ++i)
    if (!w[i].is_zero()) s.push_back(static_cast<int>(i) + 1);
  return s;
}

} // namespace lieorbit
