#include "doctest.h"

#include "covlat/covering.hpp"
#include "covlat/iso.hpp"
#include "covlat/lattice.hpp"
#include "oracles.hpp"

using namespace covlat;

namespace {

Covering cov(std::vector<std::string> ground, std::vector<std::vector<std::string>> blocks) {
  return validate_covering(std::move(ground), std::move(blocks));
}

}  // namespace

TEST_CASE("validate_covering accepts the two-block example") {
  Covering c = cov({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  CHECK(c.block_count() == 2);
  CHECK(c.ground().size() == 3);
  CHECK(c.block(0) == (bit(0) | bit(1)));
  CHECK(c.block(1) == (bit(0) | bit(2)));
}

TEST_CASE("validate_covering accepts the empty covering") {
  Covering c = cov({}, {});
  CHECK(c.block_count() == 0);
  CHECK(c.ground().size() == 0);
  CHECK(c.ground().full_mask() == 0);
}

TEST_CASE("validate_covering error paths") {
  CHECK_THROWS_WITH_AS(cov({"a", "b"}, {{"a"}}), "NotACovering: b", Error);
  CHECK_THROWS_WITH_AS(cov({"a", "a"}, {{"a"}}), "DuplicateLabel: a", Error);
  CHECK_THROWS_WITH_AS(cov({"a"}, {{"z"}}), "UnknownLabel: z", Error);
  CHECK_THROWS_WITH_AS(cov({"a"}, {{"a"}, {}}), "EmptyBlock: block 1", Error);
}

TEST_CASE("blocks are an indexed family: duplicates kept") {
  Covering c = cov({"a", "b"}, {{"a", "b"}, {"a", "b"}});
  CHECK(c.block_count() == 2);
  CHECK(c.block(0) == c.block(1));
}

TEST_CASE("blocks_meeting on the worked examples") {
  Covering c = cov({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  CHECK(c.blocks_meeting(std::vector<std::string>{"a"}) == BlockMask{0b11});
  CHECK(c.blocks_meeting(Mask{0}) == BlockMask{0});

  Covering d = cov({"a", "b", "c", "d"}, {{"a", "b", "d"}, {"a", "c", "d"}});
  CHECK(d.blocks_meeting(std::vector<std::string>{"b"}) == BlockMask{0b01});
  CHECK_THROWS_WITH_AS(d.blocks_meeting(std::vector<std::string>{"zz"}), "UnknownLabel: zz",
                       Error);
}

TEST_CASE("blocks_meeting is monotone in the queried set") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Covering c = oracle::random_covering(rng, 6, 4);
    Mask full = c.ground().full_mask();
    Mask h = rng() & full;
    Mask sub = rng() & h;
    CHECK(subset_of(c.blocks_meeting(sub), c.blocks_meeting(h)));
  }
}

TEST_CASE("simplify collapses a single all-covering block to one element") {
  auto [quotient, mapping] = simplify(cov({"a", "b", "c"}, {{"a", "b", "c"}}));
  CHECK(quotient.ground().labels() == std::vector<std::string>{"a"});
  CHECK(quotient.block_labels() == std::vector<std::vector<std::string>>{{"a"}});
  CHECK(mapping.at("b") == "a");
  CHECK(mapping.at("c") == "a");
}

TEST_CASE("simplify keeps already-reduced coverings intact") {
  Covering c = cov({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  auto [quotient, mapping] = simplify(c);
  CHECK(quotient.ground().labels() == c.ground().labels());
  CHECK(quotient.blocks() == c.blocks());
  for (const auto& [from, to] : mapping) CHECK(from == to);
}

TEST_CASE("simplify of the empty covering") {
  auto [quotient, mapping] = simplify(cov({}, {}));
  CHECK(quotient.ground().size() == 0);
  CHECK(mapping.empty());
}

TEST_CASE("simplify is idempotent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Covering c = oracle::random_covering(rng, 6, 4);
    Covering once = simplify(c).covering;
    auto [twice, mapping] = simplify(once);
    CHECK(twice.ground().labels() == once.ground().labels());
    CHECK(twice.blocks() == once.blocks());
    for (const auto& [from, to] : mapping) CHECK(from == to);
  }
}

TEST_CASE("quotient covering has an isomorphic flat lattice") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& blocks : oracle::all_coverings(n, 3)) {
      Covering c = oracle::make_covering(n, blocks);
      GradedLattice original = build_lattice(MatroidOracle(c)).graph();
      GradedLattice reduced = build_lattice(MatroidOracle(simplify(c).covering)).graph();
      REQUIRE(lattice_isomorphic(original, reduced).has_value());
    }
  }
}
