#include "lieorbit/real_form.hpp"

#include <algorithm>
#include <sstream>

#include "lieorbit/errors.hpp"

namespace lieorbit {

namespace {

long long dim_su(long long n) { return n * n - 1; }
long long dim_so(long long m) { return m * (m - 1) / 2; }
long long dim_sp(long long k) { return k * (2 * k + 1); }

/// Names the compact form of one connected subdiagram. `nodes` are 0-based
/// ambient node indices; bonds and lengths come from the ambient system.
StabilizerSummand classify_component(const RootSystem& rs, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return {"su(2)", dim_su(2)};

  std::vector<int> pos(rs.rank(), -1);
  for (int i = 0; i < k; ++i) pos[nodes[i]] = i;
  int max_mult = 1;
  std::vector<std::vector<int>> adj(k);
  for (const Bond& b : bonds(rs.type())) {
    if (pos[b.i] < 0 || pos[b.j] < 0) continue;
    adj[pos[b.i]].push_back(pos[b.j]);
    adj[pos[b.j]].push_back(pos[b.i]);
    max_mult = std::max(max_mult, b.mult);
  }

  if (max_mult == 3) {
    // Only the full G2 diagram; a proper subdiagram never contains it.
    throw internal_error("triple bond inside a proper subdiagram");
  }

  if (max_mult == 2) {
    Rational lmin = rs.lengths_sq()[nodes[0]];
    Rational lmax = lmin;
    for (int v : nodes) {
      lmin = std::min(lmin, rs.lengths_sq()[v]);
      lmax = std::max(lmax, rs.lengths_sq()[v]);
    }
    int shorts = 0;
    for (int v : nodes)
      if (rs.lengths_sq()[v] == lmin) ++shorts;
    const int longs = k - shorts;
    if (k == 2) {
      // B2 and C2 coincide; keep the ambient family's spelling.
      if (rs.type().family == Family::C) return {"sp(2)", dim_sp(2)};
      return {"so(5)", dim_so(5)};
    }
    if (shorts == 1) return {"so(" + std::to_string(2 * k + 1) + ")", dim_so(2 * k + 1)};
    if (longs == 1) return {"sp(" + std::to_string(k) + ")", dim_sp(k)};
    throw internal_error("unrecognized doubly-laced subdiagram");
  }

  // Simply-laced component: a path or a single degree-3 branch point.
  int branch = -1;
  for (int v = 0; v < k; ++v) {
    if (adj[v].size() > 3) throw internal_error("node of degree > 3 in subdiagram");
    if (adj[v].size() == 3) {
      if (branch >= 0) throw internal_error("two branch points in one subdiagram");
      branch = v;
    }
  }
  if (branch < 0) return {"su(" + std::to_string(k + 1) + ")", dim_su(k + 1)};

  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 0, prev = branch, cur = start;
    while (true) {
      ++len;
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1)
    return {"so(" + std::to_string(2 * k) + ")", dim_so(2 * k)};
  if (arms[0] == 1 && arms[1] == 2) {
    if (k == 6) return {"e6", 78};
    if (k == 7) return {"e7", 133};
    if (k == 8) return {"e8", 248};
  }
  throw internal_error("unrecognized simply-laced subdiagram");
}

struct FormEntry {
  long long dim_k;
  int center;
  std::string name;
};

std::vector<FormEntry> catalog(const DynkinType& t) {
  std::vector<FormEntry> out;
  const long long l = t.rank;
  switch (t.family) {
    case Family::A:
      for (long long p = 1; 2 * p <= l + 1; ++p) {
        const long long q = l + 1 - p;
        out.push_back({p * p + q * q - 1, 1,
                       "su(" + std::to_string(p) + "," + std::to_string(q) + ")"});
      }
      break;
    case Family::B:
      for (long long p = 2; p <= 2 * l; p += 2) {
        const long long q = 2 * l + 1 - p;
        out.push_back({dim_so(p) + dim_so(q), p == 2 ? 1 : 0,
                       "so(" + std::to_string(p) + "," + std::to_string(q) + ")"});
      }
      break;
    case Family::C:
      for (long long p = 1; 2 * p <= l; ++p) {
        const long long q = l - p;
        out.push_back({dim_sp(p) + dim_sp(q), 0,
                       "sp(" + std::to_string(p) + "," + std::to_string(q) + ")"});
      }
      out.push_back({l * l, 1, "sp(" + std::to_string(l) + ",R)"});
      break;
    case Family::D:
      for (long long p = 2; p <= l; p += 2) {
        const long long q = 2 * l - p;
        out.push_back({dim_so(p) + dim_so(q), p == 2 ? 1 : 0,
                       "so(" + std::to_string(p) + "," + std::to_string(q) + ")"});
      }
      // At rank 4 the quaternionic form is isomorphic to so(2,6) via
      // triality; keep the single canonical name to avoid a key collision.
      if (l != 4) out.push_back({l * l, 1, "so*(" + std::to_string(2 * l) + ")"});
      break;
    case Family::E:
      if (l == 6) {
        out.push_back({38, 0, "e6(2)"});
        out.push_back({46, 1, "e6(-14)"});
      } else if (l == 7) {
        out.push_back({63, 0, "e7(7)"});
        out.push_back({69, 0, "e7(-5)"});
        out.push_back({79, 1, "e7(-25)"});
      } else {
        out.push_back({120, 0, "e8(8)"});
        out.push_back({136, 0, "e8(-24)"});
      }
      break;
    case Family::F:
      out.push_back({24, 0, "f4(4)"});
      out.push_back({36, 0, "f4(-20)"});
      break;
    case Family::G:
      out.push_back({6, 0, "g2(2)"});
      break;
  }
  return out;
}

} // namespace

std::string StabilizerDecomposition::str() const {
  std::ostringstream os;
  bool first = true;
  for (const StabilizerSummand& s : summands) {
    os << (first ? "" : "+") << s.name;
    first = false;
  }
  for (int i = 0; i < center_rank; ++i) {
    os << (first ? "" : "+") << "R";
    first = false;
  }
  return os.str();
}

StabilizerDecomposition stabilizer_decomposition(const RootSystem& rs,
                                                 const std::vector<int>& support) {
  std::vector<char> in_support(rs.rank(), 0);
  for (int node : support) {
    if (node < 1 || node > rs.rank()) throw usage_error("support node out of range");
    in_support[node - 1] = 1;
  }

  std::vector<std::vector<int>> adj(rs.rank());
  for (const Bond& b : bonds(rs.type())) {
    if (in_support[b.i] || in_support[b.j]) continue;
    adj[b.i].push_back(b.j);
    adj[b.j].push_back(b.i);
  }

  StabilizerDecomposition dec;
  dec.center_rank = 0;
  for (char c : in_support) dec.center_rank += c;

  std::vector<char> seen(rs.rank(), 0);
  for (int v = 0; v < rs.rank(); ++v) {
    if (in_support[v] || seen[v]) continue;
    std::vector<int> comp, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    dec.summands.push_back(classify_component(rs, comp));
  }

  std::sort(dec.summands.begin(), dec.summands.end(),
            [](const StabilizerSummand& a, const StabilizerSummand& b) {
              if (a.dim != b.dim) return a.dim > b.dim;
              return a.name < b.name;
            });
  dec.dim_v = dec.center_rank;
  for (const StabilizerSummand& s : dec.summands) dec.dim_v += s.dim;
  return dec;
}

long long maximal_compact_dim(const RootData& rd) {
  return rd.rs.rank() + 2LL * rd.compact_positive_count();
}

int compact_center_rank(const RootData& rd) {
  // Corank of the span of the compact roots, by Gaussian elimination on
  // their root-basis coordinates.
  const int r = rd.rs.rank();
  std::vector<std::vector<Rational>> rows;
  for (int k = 0; k < rd.rs.positive_count(); ++k) {
    if (rd.eps[k] > 0) continue; // keep compact roots (eps = -1)
    const RootVec& root = rd.rs.positive_roots()[k];
    rows.emplace_back(root.begin(), root.end());
  }
  int rank_span = 0;
  for (int col = 0; col < r && rank_span < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank_span; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank_span], rows[piv]);
    for (int i = rank_span + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col] / rows[rank_span][col];
      for (int j = col; j < r; ++j) rows[i][j] -= f * rows[rank_span][j];
    }
    ++rank_span;
  }
  return r - rank_span;
}

std::string identify_real_form(const RootData& rd) {
  const long long dim_k = maximal_compact_dim(rd);
  const int center = compact_center_rank(rd);
  std::string found;
  for (const FormEntry& e : catalog(rd.vd.type)) {
    if (e.dim_k != dim_k || e.center != center) continue;
    if (!found.empty()) throw internal_error("ambiguous real-form key for " + rd.vd.str());
    found = e.name;
  }
  if (found.empty())
    throw internal_error("real-form catalog miss for " + rd.vd.str() + ": dim_k=" +
                         std::to_string(dim_k) + " center=" + std::to_string(center));
  return found;
}

} // namespace lieorbit
