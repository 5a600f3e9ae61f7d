#include "covlat/matroid.hpp"

#include <algorithm>
#include <vector>

namespace covlat {

namespace {

// Kuhn's augmenting-path matching on the element/block incidence graph.
// block_owner[b] is the element matched to block b, or -1.
struct Matcher {
  const Covering& covering;
  std::vector<int> block_owner;

  explicit Matcher(const Covering& c) : covering(c), block_owner(c.block_count(), -1) {}

  bool augment(int e, BlockMask& visited) {
    BlockMask candidates = covering.element_incidence(e) & ~visited;
    visited |= candidates;
    // free block first, then try to displace an owner
    BlockMask rest = candidates;
    while (rest) {
      int b = std::countr_zero(rest);
      rest &= rest - 1;
      if (block_owner[b] < 0) {
        block_owner[b] = e;
        return true;
      }
    }
    while (candidates) {
      int b = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (augment(block_owner[b], visited)) {
        block_owner[b] = e;
        return true;
      }
    }
    return false;
  }

  bool add(int e) {
    BlockMask visited = 0;
    return augment(e, visited);
  }
};

}  // namespace

bool MatroidOracle::is_independent(Mask h) const {
  Matcher m(covering_);
  bool ok = true;
  for_each_element(h, [&](int e) { ok = ok && m.add(e); });
  return ok;
}

int MatroidOracle::rank(Mask x) const {
  Matcher m(covering_);
  int r = 0;
  for_each_element(x, [&](int e) { r += m.add(e) ? 1 : 0; });
  return r;
}

Mask MatroidOracle::closure(Mask x) const {
  Matcher base(covering_);
  for_each_element(x, [&](int e) { base.add(e); });

  Mask cl = x;
  Mask outside = ground().full_mask() & ~x;
  std::vector<int> saved;
  for_each_element(outside, [&](int y) {
    saved = base.block_owner;
    if (base.add(y)) {
      base.block_owner = saved;  // rank would grow: y stays outside
    } else {
      cl |= bit(y);
    }
  });
  return cl;
}

std::optional<Mask> MatroidOracle::closure_witness(Mask h, int g) const {
  if (!is_independent(h)) {
    throw Error("NotIndependent", ground().set_text(h));
  }
  if (!contains(closure(h), g)) return std::nullopt;

  // subsets of h by cardinality, then dictionary order
  std::vector<Mask> subsets;
  subsets.push_back(0);
  Mask sub = h;
  while (sub != 0) {
    subsets.push_back(sub);
    sub = (sub - 1) & h;
  }
  std::sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return set_lex_less(a, b);
  });

  BlockMask g_blocks = covering_.element_incidence(g);
  for (Mask candidate : subsets) {
    BlockMask met = covering_.blocks_meeting(candidate);
    if (popcount(met) == popcount(candidate) && subset_of(g_blocks, met)) {
      return candidate;
    }
  }
  throw Error("InternalInconsistency",
              "element in closure without a tight witness subset");
}

}  // namespace covlat
