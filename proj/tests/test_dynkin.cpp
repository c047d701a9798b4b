#include <doctest.h>

#include <map>

#include "lieorbit/dynkin.hpp"
#include "lieorbit/errors.hpp"

using namespace lieorbit;

TEST_CASE("type parsing accepts the admissible families") {
  CHECK(parse_type("A1") == DynkinType{Family::A, 1});
  CHECK(parse_type("b4") == DynkinType{Family::B, 4});
  CHECK(parse_type("C3") == DynkinType{Family::C, 3});
  CHECK(parse_type("d12") == DynkinType{Family::D, 12});
  CHECK(parse_type("E6") == DynkinType{Family::E, 6});
  CHECK(parse_type("F4") == DynkinType{Family::F, 4});
  CHECK(parse_type("g2") == DynkinType{Family::G, 2});
  // Numeric part goes through integer parsing, so leading zeros pass.
  CHECK(parse_type("B04") == DynkinType{Family::B, 4});
}

TEST_CASE("type parsing rejects aliases and junk") {
  for (const char* bad : {"", "B", "4", "H3", "A0", "B1", "C2", "D3", "E5",
                          "E9", "F5", "G3", "A13", "B4x", " B4"})
    CHECK_THROWS_AS(parse_type(bad), usage_error);
}

TEST_CASE("bond layout per family") {
  auto mult_at = [](const DynkinType& t) {
    std::map<std::pair<int, int>, int> m;
    for (const Bond& b : bonds(t)) m[{b.i, b.j}] = b.mult;
    return m;
  };

  auto a4 = mult_at({Family::A, 4});
  CHECK(a4.size() == 3);
  CHECK(a4[{0, 1}] == 1);
  CHECK(a4[{2, 3}] == 1);

  auto b4 = mult_at({Family::B, 4});
  CHECK(b4.size() == 3);
  CHECK(b4[{0, 1}] == 2);
  CHECK(b4[{1, 2}] == 1);

  auto c4 = mult_at({Family::C, 4});
  CHECK(c4.size() == 3);
  CHECK(c4[{0, 1}] == 1);
  CHECK(c4[{2, 3}] == 2);

  auto d5 = mult_at({Family::D, 5});
  CHECK(d5.size() == 4);
  CHECK(d5[{0, 1}] == 1);
  CHECK(d5.count({3, 4}) == 0); // absent: node 5 hangs off node 3
  CHECK(d5[{2, 4}] == 1);

  auto e7 = mult_at({Family::E, 7});
  CHECK(e7.size() == 6);
  CHECK(e7[{3, 6}] == 1); // node 7 on node 4

  auto f4 = mult_at({Family::F, 4});
  CHECK(f4[{1, 2}] == 2);
  CHECK(f4[{0, 1}] == 1);

  auto g2 = mult_at({Family::G, 2});
  CHECK(g2.size() == 1);
  CHECK(g2[{0, 1}] == 3);
}

TEST_CASE("default lengths mark the short nodes") {
  const auto a3 = default_lengths({Family::A, 3});
  for (const Rational& l : a3) CHECK(l == Rational(1));

  const auto b3 = default_lengths({Family::B, 3});
  CHECK(b3[0] == Rational(1));
  CHECK(b3[1] == Rational(2));
  CHECK(b3[2] == Rational(2));

  const auto c3 = default_lengths({Family::C, 3});
  CHECK(c3[0] == Rational(1));
  CHECK(c3[1] == Rational(1));
  CHECK(c3[2] == Rational(2));

  const auto f4 = default_lengths({Family::F, 4});
  CHECK(f4[0] == Rational(1));
  CHECK(f4[1] == Rational(1));
  CHECK(f4[2] == Rational(2));
  CHECK(f4[3] == Rational(2));

  const auto g2 = default_lengths({Family::G, 2});
  CHECK(g2[0] == Rational(1));
  CHECK(g2[1] == Rational(3));
}

TEST_CASE("diagram automorphism group sizes") {
  auto count = [](Family f, int r) {
    return diagram_automorphisms({f, r}).size();
  };
  CHECK(count(Family::A, 1) == 1);
  CHECK(count(Family::A, 2) == 2);
  CHECK(count(Family::A, 5) == 2);
  CHECK(count(Family::B, 3) == 1);
  CHECK(count(Family::C, 4) == 1);
  CHECK(count(Family::D, 4) == 6);
  CHECK(count(Family::D, 5) == 2);
  CHECK(count(Family::E, 6) == 2);
  CHECK(count(Family::E, 7) == 1);
  CHECK(count(Family::E, 8) == 1);
  CHECK(count(Family::F, 4) == 1);
  CHECK(count(Family::G, 2) == 1);
}

TEST_CASE("automorphisms permute bonds") {
  for (DynkinType t : {DynkinType{Family::A, 4}, DynkinType{Family::D, 4},
                       DynkinType{Family::D, 6}, DynkinType{Family::E, 6}}) {
    std::set<std::pair<int, int>> edges;
    for (const Bond& b : bonds(t))
      edges.insert({std::min(b.i, b.j), std::max(b.i, b.j)});
    for (const auto& perm : diagram_automorphisms(t)) {
      std::set<std::pair<int, int>> mapped;
      for (const auto& e : edges)
        mapped.insert({std::min(perm[e.first], perm[e.second]),
                       std::max(perm[e.first], perm[e.second])});
      CHECK(mapped == edges);
    }
  }
}

TEST_CASE("canonical painted set picks the least image") {
  CHECK(canonical_painted({Family::A, 3}, {3}) == std::set<int>{1});
  CHECK(canonical_painted({Family::A, 3}, {1}) == std::set<int>{1});
  CHECK(canonical_painted({Family::A, 3}, {2}) == std::set<int>{2});
  CHECK(canonical_painted({Family::A, 4}, {3, 4}) == std::set<int>{1, 2});
  CHECK(canonical_painted({Family::D, 4}, {3}) == std::set<int>{1});
  CHECK(canonical_painted({Family::D, 4}, {4}) == std::set<int>{1});
  CHECK(canonical_painted({Family::D, 4}, {1, 4}) == std::set<int>{1, 3});
  CHECK(canonical_painted({Family::D, 5}, {5}) == std::set<int>{4});
  CHECK(canonical_painted({Family::E, 6}, {5}) == std::set<int>{1});
  CHECK(canonical_painted({Family::E, 6}, {4}) == std::set<int>{2});
  CHECK(canonical_painted({Family::E, 6}, {3}) == std::set<int>{3});
  CHECK(canonical_painted({Family::B, 4}, {2}) == std::set<int>{2});
}

TEST_CASE("type validation bounds") {
  CHECK_NOTHROW(validate_type({Family::A, kMaxRank}));
  CHECK_THROWS_AS(validate_type({Family::A, kMaxRank + 1}), usage_error);
  CHECK_THROWS_AS(validate_type({Family::G, 3}), usage_error);
  CHECK_THROWS_AS(validate_type({Family::D, 2}), usage_error);
}
