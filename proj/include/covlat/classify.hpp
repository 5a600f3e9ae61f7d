#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "covlat/classical.hpp"
#include "covlat/iso.hpp"
#include "covlat/lattice.hpp"

namespace covlat {

// Outcome of the two-block-incidence analysis on a simplified covering.
// E({x}) = { y : blocks_meeting({y}) is contained in blocks_meeting({x}) } for
// each x meeting exactly two blocks. When these sets partition the ground set
// with a common size s >= 2, the covering has k = m/s classes, every atom has
// m - s + 1 covers, and the level-2 flat count is
// C(m,2) - (C(s,2) - 1) * k. When no element meets two blocks (or every class
// is a singleton), every pair is closed: k = m, s = 1, level-2 count C(m,2).
struct UniformAnalysis {
  std::vector<Mask> e_classes;  // over the simplified ground set, by least element
  int k = 0;
  int class_size = 1;
  std::int64_t cov_atom = 0;
  std::int64_t predicted_level2 = 0;
  bool degenerate = false;  // no element meets exactly two blocks
};

struct UniformFailure {
  std::string condition;
};

using UniformOutcome = std::variant<UniformAnalysis, UniformFailure>;

// Requires a simplified covering (throws NotSimplified otherwise). Returns the
// analysis, or the specific structural condition that failed: an element
// meeting three or more blocks, E-sets not partitioning the ground set, or
// class sizes differing.
UniformOutcome uniform_analysis(const Covering& c, const MatroidOracle& m);

enum class Family { partition, subspace, dowling };

const char* family_name(Family f);

struct ClassificationReport {
  Family family = Family::partition;
  bool verdict = false;

  // witness parameters, populated on a yes verdict
  std::optional<int> n;
  std::optional<long long> q;           // subspace only
  std::optional<int> group_order;       // dowling only

  // evidence
  int m = 0;  // simplified ground size
  std::optional<int> k;
  std::optional<int> class_size;
  std::vector<std::int64_t> level_profile;
  std::string branch;
};

// Closed-form classification (simplification applied internally):
//   partition: yes n=1 iff the ground set is empty; yes n=2 iff the lattice has
//     exactly two levels; yes n=3 iff m=3 and k=1.
//   subspace:  yes n=0 / n=1 for the two trivial heights; yes (q=m-1, n=2) iff
//     k=1 and m-1 is a prime power.
//   dowling:   yes n=0 / n=1 for the trivial heights; yes (|G|=m-2, n=2) iff
//     k=1 and m >= 3.
ClassificationReport classify_partition(const Covering& c);
ClassificationReport classify_subspace(const Covering& c);
ClassificationReport classify_dowling(const Covering& c);

struct SearchOptions {
  int max_elements = 0;
  int max_blocks = 0;
  int threads = 0;  // 0 = hardware concurrency
  std::size_t node_budget = 2000;
};

// All coverings with at most max_elements ground elements and max_blocks
// blocks, one per relabeling class (canonical form = lexicographically least
// sorted block signature). Deterministic order.
std::vector<std::vector<Mask>> enumerate_coverings_canonical(int n, int max_blocks);

// All block families over a ground set of exactly n elements (not reduced by
// relabeling), in nondecreasing block-mask order. Test and sweep helper.
std::vector<std::vector<Mask>> enumerate_coverings_all(int n, int max_blocks);

// Builds a covering over ground labels "a","b",... from block masks.
Covering covering_from_block_masks(int n, const std::vector<Mask>& blocks);

// Exhaustive search for coverings whose flat lattice is isomorphic to the
// target, up to relabeling, within the stated bounds. Candidates are
// distributed across worker threads; the result order is canonical regardless
// of the thread count. Errors: BudgetExceeded for bounds past (6, 4).
std::vector<Covering> search_isomorphic_coverings(const GradedLattice& target,
                                                  const SearchOptions& opts);

}  // namespace covlat
