#include "lieorbit/dynkin.hpp"

#include <algorithm>
#include <cctype>

#include "lieorbit/errors.hpp"

namespace lieorbit {

void validate_type(const DynkinType& t) {
  const int r = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 3; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) throw usage_error("inadmissible type " + t.str());
  if (r > kMaxRank) throw usage_error("rank " + std::to_string(r) + " exceeds supported maximum " + std::to_string(kMaxRank));
}

DynkinType parse_type(const std::string& text) {
  if (text.size() < 2) throw usage_error("cannot parse type '" + text + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') throw usage_error("unknown family '" + std::string(1, text[0]) + "'");
  for (size_t k = 1; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw usage_error("cannot parse type '" + text + "'");
  int rank = 0;
  try {
    rank = std::stoi(text.substr(1));
  } catch (const std::exception&) {
    throw usage_error("cannot parse type '" + text + "'");
  }
  DynkinType t{static_cast<Family>(c), rank};
  validate_type(t);
  return t;
}

std::vector<Bond> bonds(const DynkinType& t) {
  const int r = t.rank;
  std::vector<Bond> out;
  auto path = [&out](int from, int to) {
    for (int i = from; i < to; ++i) out.push_back({i, i + 1, 1});
  };
  switch (t.family) {
    case Family::A:
      path(0, r - 1);
      break;
    case Family::B:
      out.push_back({0, 1, 2});
      path(1, r - 1);
      break;
    case Family::C:
      path(0, r - 2);
      out.push_back({r - 2, r - 1, 2});
      break;
    case Family::D:
      path(0, r - 2);
      out.push_back({r - 3, r - 1, 1});
      break;
    case Family::E:
      path(0, r - 2);
      out.push_back({r == 6 ? 2 : (r == 7 ? 3 : 4), r - 1, 1});
      break;
    case Family::F:
      out.push_back({0, 1, 1});
      out.push_back({1, 2, 2});
      out.push_back({2, 3, 1});
      break;
    case Family::G:
      out.push_back({0, 1, 3});
      break;
  }
  return out;
}

std::vector<Rational> default_lengths(const DynkinType& t) {
  const int r = t.rank;
  std::vector<Rational> len(static_cast<size_t>(r), Rational(1));
  switch (t.family) {
    case Family::B:
      for (int i = 1; i < r; ++i) len[static_cast<size_t>(i)] = Rational(2);
      break;
    case Family::C:
      len[static_cast<size_t>(r - 1)] = Rational(2);
      break;
    case Family::F:
      len[2] = Rational(2);
      len[3] = Rational(2);
      break;
    case Family::G:
      len[1] = Rational(3);
      break;
    default:
      break;
  }
  return len;
}

std::vector<std::vector<int>> diagram_automorphisms(const DynkinType& t) {
  const int r = t.rank;
  std::vector<int> id(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) id[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> out{id};

  auto add = [&out](std::vector<int> p) { out.push_back(std::move(p)); };

  switch (t.family) {
    case Family::A:
      if (r >= 2) {
        std::vector<int> rev(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) rev[static_cast<size_t>(i)] = r - 1 - i;
        add(rev);
      }
      break;
    case Family::D:
      if (r == 4) {
        // Nodes 1, 3, 4 (0-based 0, 2, 3) all hang off node 2; S3 on them.
        const int tips[3] = {0, 2, 3};
        int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int k = 1; k < 6; ++k) {
          std::vector<int> p = id;
          for (int m = 0; m < 3; ++m) p[static_cast<size_t>(tips[m])] = tips[perm3[k][m]];
          add(p);
        }
      } else {
        std::vector<int> p = id;
        std::swap(p[static_cast<size_t>(r - 2)], p[static_cast<size_t>(r - 1)]);
        add(p);
      }
      break;
    case Family::E:
      if (r == 6) {
        // Chain 1..5 reverses; nodes 3 and 6 are fixed.
        std::vector<int> p = id;
        std::swap(p[0], p[4]);
        std::swap(p[1], p[3]);
        add(p);
      }
      break;
    default:
      break;
  }
  return out;
}

std::set<int> canonical_painted(const DynkinType& t, const std::set<int>& painted) {
  std::set<int> best = painted;
  for (const auto& perm : diagram_automorphisms(t)) {
    std::set<int> image;
    for (int i : painted) image.insert(perm[static_cast<size_t>(i - 1)] + 1);
    if (std::lexicographical_compare(image.begin(), image.end(), best.begin(), best.end()))
      best = image;
  }
  return best;
}

} // namespace lieorbit
