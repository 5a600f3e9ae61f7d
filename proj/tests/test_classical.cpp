#include "doctest.h"

#include "covlat/classical.hpp"
#include "covlat/iso.hpp"
#include "oracles.hpp"

using namespace covlat;

TEST_CASE("stirling2 values") {
  CHECK(stirling2(4, 3) == 6);
  CHECK(stirling2(7, 7) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  CHECK_THROWS_AS(stirling2(3, 4), Error);
}

TEST_CASE("binomial and gaussian binomial values") {
  CHECK(binomial(4, 2) == 6);
  CHECK(gaussian_binomial(2, 1, 3) == 4);
  CHECK(gaussian_binomial(5, 0, 7) == 1);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), Error);
}

TEST_CASE("gaussian binomial agrees with brute-force span counting") {
  CHECK(oracle::count_subspaces_bruteforce(2, 4, 2) == 35);
  for (int q : {2, 3}) {
    for (int n = 0; n <= 3; ++n) {
      for (int d = 0; d <= std::min(n, 2); ++d) {
        CHECK(gaussian_binomial(n, d, q) ==
              static_cast<BigUint>(oracle::count_subspaces_bruteforce(q, n, d)));
      }
    }
  }
}

TEST_CASE("whitney2 values") {
  CHECK(whitney2(2, 1, 2) == 4);
  CHECK(whitney2(4, 0, 3) == 1);
  // n=3, level 2, |G|=2: one nonzero block B; 3 + 3*2 + 1*4 labeled choices
  CHECK(whitney2(3, 2, 2) == 13);
  CHECK(whitney2(3, 1, 2) == BigUint{3} + 3 * 2);  // n + C(n,2)|G|
}

TEST_CASE("whitney2 level-1 identity") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 4; ++m) {
      CHECK(whitney2(n, 1, m) == static_cast<BigUint>(n) + binomial(n, 2) * static_cast<BigUint>(m));
    }
  }
}

TEST_CASE("dowling_cover_count values") {
  CHECK(dowling_cover_count(2, 2) == 4);
  CHECK(dowling_cover_count(0, 3) == 0);
  CHECK(dowling_cover_count(3, 1) == 6);
  CHECK(dowling_cover_count(2, 1) == 3);
}

TEST_CASE("to_string on 128-bit counts") {
  CHECK(to_string(BigUint{0}) == "0");
  CHECK(to_string(BigUint{12345}) == "12345");
  BigUint big = 1;
  for (int i = 0; i < 36; ++i) big *= 10;
  CHECK(to_string(big) == "1" + std::string(36, '0'));
}

TEST_CASE("partition lattice small cases") {
  GradedLattice p3 = gen_partition_lattice(3);
  CHECK(p3.size() == 5);
  CHECK(level_profile(p3).counts == std::vector<std::int64_t>{1, 3, 1});

  CHECK(gen_partition_lattice(1).size() == 1);

  GradedLattice p4 = gen_partition_lattice(4);
  CHECK(level_profile(p4).counts == std::vector<std::int64_t>{1, 6, 7, 1});

  CHECK_THROWS_AS(gen_partition_lattice(0), Error);
  CHECK_THROWS_AS(gen_partition_lattice(9), Error);
}

TEST_CASE("partition lattice level counts match stirling2") {
  for (int n = 1; n <= 7; ++n) {
    auto profile = level_profile(gen_partition_lattice(n));
    REQUIRE(profile.num_levels() == n);
    for (int l = 0; l < n; ++l) {
      REQUIRE(static_cast<BigUint>(profile.counts[l]) == stirling2(n, n - l));
    }
  }
}

TEST_CASE("every partition lattice atom has C(n-1,2) covers") {
  for (int n = 2; n <= 7; ++n) {
    GradedLattice p = gen_partition_lattice(n);
    for (int atom : atoms(p)) {
      REQUIRE(static_cast<BigUint>(cover_count(p, atom)) == binomial(n - 1, 2));
    }
  }
}

TEST_CASE("subspace lattice small cases") {
  GradedLattice f32 = gen_subspace_lattice(3, 2);
  CHECK(atoms(f32).size() == 4);

  GradedLattice f21 = gen_subspace_lattice(2, 1);
  CHECK(f21.size() == 2);

  GradedLattice f23 = gen_subspace_lattice(2, 3);
  CHECK(level_profile(f23).counts == std::vector<std::int64_t>{1, 7, 7, 1});

  CHECK(gen_subspace_lattice(2, 0).size() == 1);
  CHECK_THROWS_AS(gen_subspace_lattice(4, 2), Error);
  CHECK_THROWS_AS(gen_subspace_lattice(2, 20), Error);
}

TEST_CASE("subspace lattice level counts match gaussian binomials") {
  for (long long q : {2LL, 3LL, 5LL}) {
    for (int n = 0; n <= 4; ++n) {
      auto profile = level_profile(gen_subspace_lattice(q, n));
      REQUIRE(profile.num_levels() == n + 1);
      for (int l = 0; l <= n; ++l) {
        REQUIRE(static_cast<BigUint>(profile.counts[l]) == gaussian_binomial(n, l, q));
      }
    }
  }
}

TEST_CASE("subspace atom cover counts follow the q-analog") {
  for (long long q : {2LL, 3LL}) {
    for (int n = 2; n <= 4; ++n) {
      GradedLattice l = gen_subspace_lattice(q, n);
      for (int atom : atoms(l)) {
        REQUIRE(static_cast<BigUint>(cover_count(l, atom)) == gaussian_binomial(n - 1, 1, q));
      }
    }
  }
}

TEST_CASE("group table validation") {
  GroupTable z3 = GroupTable::cyclic(3);
  CHECK(z3.order() == 3);
  CHECK(z3.mul(1, 2) == 0);
  CHECK(z3.inv(1) == 2);

  CHECK_THROWS_AS(GroupTable::from_table({{0, 1}, {1, 1}}), Error);  // not a latin square
  CHECK_THROWS_AS(GroupTable::from_table({{1, 0}, {0, 1}}), Error);  // identity not at 0
  // Klein four-group
  GroupTable v4 = GroupTable::from_table(
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(v4.inv(2) == 2);
}

TEST_CASE("dowling lattice small cases") {
  GradedLattice q2z2 = gen_dowling_lattice(2, GroupTable::cyclic(2));
  CHECK(atoms(q2z2).size() == 4);
  CHECK(q2z2.size() == 6);

  CHECK(gen_dowling_lattice(1, GroupTable::cyclic(3)).size() == 2);
  CHECK(gen_dowling_lattice(0, GroupTable::cyclic(2)).size() == 1);

  GradedLattice q2z1 = gen_dowling_lattice(2, GroupTable::cyclic(1));
  CHECK(level_profile(q2z1).counts == std::vector<std::int64_t>{1, 3, 1});
  CHECK(lattice_isomorphic(q2z1, gen_partition_lattice(3)).has_value());

  CHECK_THROWS_AS(gen_dowling_lattice(5, GroupTable::cyclic(2)), Error);
  CHECK_THROWS_AS(gen_dowling_lattice(2, GroupTable::cyclic(5)), Error);
}

TEST_CASE("dowling lattice over the trivial group is the partition lattice") {
  for (int n = 1; n <= 4; ++n) {
    GradedLattice q = gen_dowling_lattice(n, GroupTable::cyclic(1));
    GradedLattice p = gen_partition_lattice(n + 1);
    REQUIRE(q.size() == p.size());
    REQUIRE(lattice_isomorphic(q, p).has_value());
  }
}

TEST_CASE("dowling level counts match whitney2 for cyclic and Klein groups") {
  std::vector<GroupTable> groups;
  for (int m = 1; m <= 4; ++m) groups.push_back(GroupTable::cyclic(m));
  groups.push_back(GroupTable::from_table(
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
  for (const GroupTable& g : groups) {
    for (int n = 0; n <= 4; ++n) {
      auto profile = level_profile(gen_dowling_lattice(n, g));
      REQUIRE(profile.num_levels() == n + 1);
      for (int l = 0; l <= n; ++l) {
        REQUIRE(static_cast<BigUint>(profile.counts[l]) == whitney2(n, l, g.order()));
      }
    }
  }
}

TEST_CASE("dowling cover counts depend only on the nonzero block count") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      GradedLattice q = gen_dowling_lattice(n, GroupTable::cyclic(m));
      for (int i = 0; i < q.size(); ++i) {
        int k = n - q.heights[i];
        REQUIRE(static_cast<BigUint>(cover_count(q, i)) == dowling_cover_count(k, m));
      }
    }
  }
}

TEST_CASE("generated lattices pass the structural validator") {
  validate_graded_lattice(gen_partition_lattice(1));
  validate_graded_lattice(gen_partition_lattice(6));
  validate_graded_lattice(gen_subspace_lattice(2, 4));
  validate_graded_lattice(gen_subspace_lattice(3, 3));
  validate_graded_lattice(gen_subspace_lattice(5, 2));
  validate_graded_lattice(gen_dowling_lattice(3, GroupTable::cyclic(3)));
  validate_graded_lattice(gen_dowling_lattice(4, GroupTable::cyclic(2)));
  validate_graded_lattice(gen_dowling_lattice(0, GroupTable::cyclic(1)));
}
