#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "covlat/errors.hpp"
#include "covlat/sets.hpp"

namespace covlat {

// Set of block indices, as a mask over 0..block_count-1.
using BlockMask = Mask;

// Finite set with opaque string labels. Input order is the canonical order
// that every downstream enumeration and export follows.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  int index_of(const std::string& label) const;

  Mask full_mask() const;
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;
  std::string set_text(Mask m) const;  // "{a,b,c}", "{}" for the empty set

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// Indexed family of nonempty blocks whose union is the ground set. Blocks are
// addressed by index and never deduplicated: two equal blocks are two distinct
// matching partners. Immutable after validation.
class Covering {
 public:
  static constexpr int kMaxBlocks = 64;

  const GroundSet& ground() const { return ground_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  Mask block(int i) const;
  const std::vector<Mask>& blocks() const { return blocks_; }
  std::vector<std::vector<std::string>> block_labels() const;

  // Indices of the blocks meeting h non-trivially.
  BlockMask blocks_meeting(Mask h) const;
  BlockMask blocks_meeting(const std::vector<std::string>& h) const;

  // blocks_meeting({e}), precomputed per element.
  BlockMask element_incidence(int e) const { return incidence_.at(e); }

  friend Covering validate_covering(std::vector<std::string> ground,
                                    std::vector<std::vector<std::string>> blocks);
  friend Covering covering_from_masks(GroundSet ground, std::vector<Mask> blocks);

 private:
  Covering(GroundSet ground, std::vector<Mask> blocks);

  GroundSet ground_;
  std::vector<Mask> blocks_;
  std::vector<BlockMask> incidence_;
};

// Checks label distinctness, block membership, non-emptiness of blocks and the
// covering condition. Errors: DuplicateLabel, UnknownLabel, EmptyBlock,
// NotACovering, OutOfRange.
Covering validate_covering(std::vector<std::string> ground,
                           std::vector<std::vector<std::string>> blocks);

// Same validation for blocks already given as masks over an existing ground set.
Covering covering_from_masks(GroundSet ground, std::vector<Mask> blocks);

struct SimplifyResult {
  Covering covering;
  // element label -> representative label of its class
  std::map<std::string, std::string> representative;
};

// Quotient covering under x ~ y iff x = y, or the two elements meet the same
// single block. The representative of a class is its first member in canonical
// order. In the result every class is a singleton (idempotent).
SimplifyResult simplify(const Covering& c);

}  // namespace covlat
