#include "doctest.h"

#include "covlat/classical.hpp"
#include "covlat/iso.hpp"
#include "oracles.hpp"

using namespace covlat;

namespace {

GradedLattice lattice_of(std::vector<std::string> ground,
                         std::vector<std::vector<std::string>> blocks) {
  return build_lattice(
             MatroidOracle(validate_covering(std::move(ground), std::move(blocks))))
      .graph();
}

bool preserves_covers(const GradedLattice& a, const GradedLattice& b,
                      const std::vector<int>& map) {
  auto b_down = covers_down(b);
  for (int i = 0; i < a.size(); ++i) {
    if (a.heights[i] != b.heights[map[i]]) return false;
    for (int j : a.covers_up[i]) {
      const auto& ups = b.covers_up[map[i]];
      if (std::find(ups.begin(), ups.end(), map[j]) == ups.end()) return false;
    }
  }
  std::vector<int> inverse(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inverse[map[i]] = static_cast<int>(i);
  for (int i = 0; i < b.size(); ++i) {
    for (int j : b.covers_up[i]) {
      const auto& ups = a.covers_up[inverse[i]];
      if (std::find(ups.begin(), ups.end(), inverse[j]) == ups.end()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("the two-block example is isomorphic to the partition lattice on three points") {
  GradedLattice l = lattice_of({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  GradedLattice p3 = gen_partition_lattice(3);
  auto bijection = lattice_isomorphic(l, p3);
  REQUIRE(bijection.has_value());
  CHECK(preserves_covers(l, p3, *bijection));
}

TEST_CASE("every lattice is isomorphic to itself") {
  for (const GradedLattice& l :
       {gen_partition_lattice(4), gen_subspace_lattice(2, 3),
        gen_dowling_lattice(2, GroupTable::cyclic(3))}) {
    auto bijection = lattice_isomorphic(l, l);
    REQUIRE(bijection.has_value());
    CHECK(preserves_covers(l, l, *bijection));
  }
}

TEST_CASE("atom count mismatch is detected") {
  GradedLattice singles = lattice_of({"a", "b", "c", "d"}, {{"a"}, {"b"}, {"c"}, {"d"}});
  CHECK_FALSE(lattice_isomorphic(singles, gen_partition_lattice(4)).has_value());
}

TEST_CASE("isomorphism is symmetric") {
  GradedLattice a = lattice_of({"a", "b", "c", "d"}, {{"a", "b", "d"}, {"a", "c", "d"}});
  GradedLattice b = gen_subspace_lattice(3, 2);
  auto forward = lattice_isomorphic(a, b);
  auto backward = lattice_isomorphic(b, a);
  REQUIRE(forward.has_value());
  REQUIRE(backward.has_value());
  CHECK(preserves_covers(a, b, *forward));
  CHECK(preserves_covers(b, a, *backward));

  GradedLattice c = gen_partition_lattice(4);
  CHECK_FALSE(lattice_isomorphic(a, c).has_value());
  CHECK_FALSE(lattice_isomorphic(c, a).has_value());
}

TEST_CASE("same profile but different cover structure is rejected") {
  GradedLattice cube = lattice_of({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}});
  REQUIRE(cube.size() == 8);
  // canonical order puts {a},{b},{c} at 1..3 and {a,b},{a,c},{b,c} at 4..6
  REQUIRE(cube.covers_up[1] == std::vector<int>{4, 5});

  GradedLattice other = cube;
  auto& ups = other.covers_up[1];
  std::replace(ups.begin(), ups.end(), 4, 6);  // {a} now sits under {b,c}
  std::sort(ups.begin(), ups.end());
  CHECK_FALSE(lattice_isomorphic(cube, other).has_value());
}

TEST_CASE("node budget is enforced") {
  IsoOptions tight;
  tight.node_budget = 4;
  GradedLattice p3 = gen_partition_lattice(3);
  CHECK_THROWS_WITH_AS(lattice_isomorphic(p3, p3, tight),
                       "TooLarge: lattice exceeds the node budget of 4", Error);
}

TEST_CASE("large symmetric positives stay tractable") {
  GradedLattice p6 = gen_partition_lattice(6);
  auto bijection = lattice_isomorphic(p6, p6);
  REQUIRE(bijection.has_value());

  GradedLattice f24 = gen_subspace_lattice(2, 4);
  REQUIRE(lattice_isomorphic(f24, f24).has_value());
}

TEST_CASE("shuffled copies of random covering lattices are always matched") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    GradedLattice l =
        build_lattice(MatroidOracle(oracle::random_covering(rng, 6, 4))).graph();
    int n = l.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    GradedLattice shuffled;
    shuffled.labels.resize(n);
    shuffled.heights.resize(n);
    shuffled.covers_up.resize(n);
    for (int i = 0; i < n; ++i) {
      shuffled.labels[perm[i]] = l.labels[i];
      shuffled.heights[perm[i]] = l.heights[i];
      for (int j : l.covers_up[i]) shuffled.covers_up[perm[i]].push_back(perm[j]);
    }
    for (auto& ups : shuffled.covers_up) std::sort(ups.begin(), ups.end());
    shuffled.bottom = perm[l.bottom];
    shuffled.top = perm[l.top];

    auto bijection = lattice_isomorphic(l, shuffled);
    REQUIRE(bijection.has_value());
    CHECK(preserves_covers(l, shuffled, *bijection));
  }
}

TEST_CASE("rank-2 lattices are classified by atom count alone") {
  GradedLattice q2z3 = gen_dowling_lattice(2, GroupTable::cyclic(3));
  GradedLattice f22 = gen_subspace_lattice(2, 2);  // 3 atoms
  CHECK_FALSE(lattice_isomorphic(q2z3, f22).has_value());  // 5 atoms vs 3

  // five-atom rank-2 covering lattice
  GradedLattice five = lattice_of({"a", "b", "c", "d", "e"},
                                  {{"a", "b", "d", "e"}, {"a", "c", "d", "e"}});
  CHECK(lattice_isomorphic(five, q2z3).has_value());
}
