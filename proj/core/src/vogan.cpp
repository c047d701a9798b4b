#include "lieorbit/vogan.hpp"

#include "lieorbit/errors.hpp"

namespace lieorbit {

VoganDiagram::VoganDiagram(const DynkinType& t, std::set<int> painted_nodes)
    : type(t), painted(std::move(painted_nodes)) {
  validate_type(type);
  if (painted.empty()) throw usage_error("painted set must be nonempty");
  for (int i : painted)
    if (i < 1 || i > type.rank)
      throw usage_error("painted node " + std::to_string(i) + " out of range for " + type.str());
}

std::string VoganDiagram::str() const {
  std::string s = type.str() + " painted=";
  bool first = true;
  for (int i : painted) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s;
}

RootData::RootData(const VoganDiagram& diagram) : rs(diagram.type), vd(diagram) { finish(); }

RootData::RootData(const VoganDiagram& diagram, std::vector<Rational> lengths_sq)
    : rs(diagram.type, std::move(lengths_sq)), vd(diagram) { finish(); }

void RootData::finish() {
  const auto& roots = rs.positive_roots();
  eps.resize(roots.size());
  for (size_t k = 0; k < roots.size(); ++k) {
    long long painted_sum = 0;
    for (int i : vd.painted) painted_sum += roots[k][static_cast<size_t>(i - 1)];
    eps[k] = (painted_sum % 2 == 0) ? -1 : 1; // (-1)^(1 + painted_sum)
  }
  eta.assign(static_cast<size_t>(rs.rank()), 0);
  for (size_t k = 0; k < roots.size(); ++k)
    for (int j = 0; j < rs.rank(); ++j)
      eta[static_cast<size_t>(j)] -= 2LL * eps[k] * roots[k][static_cast<size_t>(j)];
}

int RootData::compact_positive_count() const {
  int c = 0;
  for (int e : eps) c += (e < 0);
  return c;
}

int RootData::noncompact_positive_count() const {
  return static_cast<int>(eps.size()) - compact_positive_count();
}

int epsilon(const RootData& rd, int positive_idx) {
  return rd.eps[static_cast<size_t>(positive_idx)];
}

int epsilon(const RootData& rd, const RootVec& alpha) {
  int idx = rd.rs.positive_index(alpha);
  if (idx < 0) throw usage_error("alpha is not a positive root");
  return rd.eps[static_cast<size_t>(idx)];
}

const std::vector<long long>& eta(const RootData& rd) { return rd.eta; }

} // namespace lieorbit
