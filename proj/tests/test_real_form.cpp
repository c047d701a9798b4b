#include <doctest.h>

#include "lieorbit/real_form.hpp"

using namespace lieorbit;

namespace {

std::string stab(const DynkinType& t, const std::vector<int>& support) {
  RootSystem rs(t);
  return stabilizer_decomposition(rs, support).str();
}

std::string form(Family f, int r, std::set<int> painted) {
  return identify_real_form(RootData(VoganDiagram({f, r}, std::move(painted))));
}

} // namespace

TEST_CASE("stabilizer components by shape") {
  CHECK(stab({Family::B, 4}, {1}) == "su(4)+R");          // long A3 tail
  CHECK(stab({Family::B, 4}, {4}) == "so(7)+R");          // short-node component
  CHECK(stab({Family::B, 4}, {2}) == "su(3)+su(2)+R");
  CHECK(stab({Family::B, 4}, {1, 4}) == "su(3)+R+R");
  CHECK(stab({Family::B, 3}, {3}) == "so(5)+R");          // double bond, ambient B
  CHECK(stab({Family::C, 3}, {1}) == "sp(2)+R");          // double bond, ambient C
  CHECK(stab({Family::C, 4}, {2}) == "sp(2)+su(2)+R");    // dimension sorts first
  CHECK(stab({Family::C, 4}, {4}) == "su(4)+R");
  CHECK(stab({Family::D, 4}, {2}) == "su(2)+su(2)+su(2)+R");
  CHECK(stab({Family::D, 5}, {2}) == "su(4)+su(2)+R"); // path 4-3-5 plus node 1
  CHECK(stab({Family::F, 4}, {1}) == "so(7)+R");
  CHECK(stab({Family::F, 4}, {4}) == "sp(3)+R");
  CHECK(stab({Family::F, 4}, {1, 4}) == "so(5)+R+R");
  CHECK(stab({Family::G, 2}, {1}) == "su(2)+R");
  CHECK(stab({Family::G, 2}, {2}) == "su(2)+R");
  CHECK(stab({Family::E, 6}, {1}) == "so(10)+R");         // D5 branch
  CHECK(stab({Family::E, 7}, {1}) == "e6+R");             // exceptional branch
  CHECK(stab({Family::E, 7}, {7}) == "su(7)+R");
  CHECK(stab({Family::E, 8}, {2}) == "e6+su(2)+R");
  CHECK(stab({Family::E, 8}, {1, 6}) == "su(6)+su(2)+R+R");
  CHECK(stab({Family::A, 4}, {1, 2, 3, 4}) == "R+R+R+R"); // empty semisimple part
}

TEST_CASE("stabilizer bookkeeping") {
  RootSystem rs({Family::E, 7});
  const auto d = stabilizer_decomposition(rs, {4});
  CHECK(d.center_rank == 1);
  CHECK(d.dim_v == 27); // su(4) + su(3) + su(2) + R
  long long total = d.center_rank;
  for (const auto& s : d.summands) total += s.dim;
  CHECK(total == d.dim_v);
  CHECK(d.str() == "su(4)+su(3)+su(2)+R");

  const auto d2 = stabilizer_decomposition(rs, {1, 4});
  CHECK(d2.center_rank == 2);
}

TEST_CASE("real form names across the catalog") {
  CHECK(form(Family::A, 2, {1}) == "su(1,2)");
  CHECK(form(Family::A, 3, {2}) == "su(2,2)");
  CHECK(form(Family::A, 4, {2}) == "su(2,3)");
  CHECK(form(Family::A, 4, {1, 4}) == "su(2,3)");
  CHECK(form(Family::B, 2, {1}) == "so(4,1)");
  CHECK(form(Family::B, 2, {2}) == "so(2,3)");
  CHECK(form(Family::B, 3, {2}) == "so(4,3)");
  CHECK(form(Family::B, 4, {4}) == "so(2,7)");
  CHECK(form(Family::C, 3, {1}) == "sp(1,2)");
  CHECK(form(Family::C, 3, {3}) == "sp(3,R)");
  CHECK(form(Family::C, 3, {1, 3}) == "sp(3,R)");
  CHECK(form(Family::C, 4, {2}) == "sp(2,2)");
  CHECK(form(Family::D, 4, {1}) == "so(2,6)");
  CHECK(form(Family::D, 4, {2}) == "so(4,4)");
  CHECK(form(Family::D, 4, {3}) == "so(2,6)"); // so*(8) is isomorphic to it
  CHECK(form(Family::D, 5, {5}) == "so*(10)");
  CHECK(form(Family::D, 5, {1}) == "so(2,8)");
  CHECK(form(Family::D, 6, {6}) == "so*(12)");
  CHECK(form(Family::G, 2, {1}) == "g2(2)");
  CHECK(form(Family::G, 2, {2}) == "g2(2)");
  CHECK(form(Family::F, 4, {1}) == "f4(-20)");
  CHECK(form(Family::F, 4, {3}) == "f4(4)");
  CHECK(form(Family::E, 6, {1}) == "e6(-14)");
  CHECK(form(Family::E, 6, {2}) == "e6(2)");
  CHECK(form(Family::E, 6, {6}) == "e6(2)");
  CHECK(form(Family::E, 7, {1}) == "e7(-25)");
  CHECK(form(Family::E, 7, {2}) == "e7(-5)");
  CHECK(form(Family::E, 7, {3}) == "e7(7)");
  CHECK(form(Family::E, 8, {1}) == "e8(-24)");
  CHECK(form(Family::E, 8, {3}) == "e8(8)");
}

TEST_CASE("real form name is a painting invariant") {
  // Equivalent paintings (diagram symmetry) name the same form, and the
  // compact data behind the name stays consistent.
  for (DynkinType t : {DynkinType{Family::A, 4}, DynkinType{Family::D, 4},
                       DynkinType{Family::D, 5}, DynkinType{Family::E, 6}}) {
    const int full = 1 << t.rank;
    for (int mask = 1; mask < full; ++mask) {
      std::set<int> painted;
      for (int i = 0; i < t.rank; ++i)
        if (mask & (1 << i)) painted.insert(i + 1);
      RootData rd(VoganDiagram(t, painted));
      RootData canon(VoganDiagram(t, canonical_painted(t, painted)));
      CHECK(identify_real_form(rd) == identify_real_form(canon));
      CHECK(maximal_compact_dim(rd) ==
            t.rank + 2LL * rd.compact_positive_count());
      CHECK(compact_center_rank(rd) >= 0);
      CHECK(compact_center_rank(rd) <= t.rank);
    }
  }
}
