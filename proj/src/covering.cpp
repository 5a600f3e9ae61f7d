#include "covlat/covering.hpp"

#include <algorithm>

namespace covlat {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxElements)) {
    throw Error("OutOfRange",
                "ground set exceeds " + std::to_string(kMaxElements) + " elements");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [_, fresh] = index_.try_emplace(labels_[i], static_cast<int>(i));
    if (!fresh) throw Error("DuplicateLabel", labels_[i]);
  }
}

int GroundSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error("UnknownLabel", label);
  return it->second;
}

Mask GroundSet::full_mask() const {
  int n = size();
  return n == 0 ? Mask{0} : (n == kMaxElements ? ~Mask{0} : (bit(n) - 1));
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_element(m, [&](int e) { out.push_back(label(e)); });
  return out;
}

std::string GroundSet::set_text(Mask m) const {
  std::string out = "{";
  bool first = true;
  for_each_element(m, [&](int e) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  });
  out += "}";
  return out;
}

Covering::Covering(GroundSet ground, std::vector<Mask> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  incidence_.assign(ground_.size(), 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for_each_element(blocks_[i], [&](int e) { incidence_[e] |= bit(static_cast<int>(i)); });
  }
}

Mask Covering::block(int i) const {
  if (i < 0 || i >= block_count()) {
    throw Error("IndexOutOfRange", "block " + std::to_string(i));
  }
  return blocks_[i];
}

std::vector<std::vector<std::string>> Covering::block_labels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(blocks_.size());
  for (Mask b : blocks_) out.push_back(ground_.labels_of(b));
  return out;
}

BlockMask Covering::blocks_meeting(Mask h) const {
  BlockMask out = 0;
  for_each_element(h, [&](int e) { out |= incidence_[e]; });
  return out;
}

BlockMask Covering::blocks_meeting(const std::vector<std::string>& h) const {
  return blocks_meeting(ground_.mask_of(h));
}

Covering covering_from_masks(GroundSet ground, std::vector<Mask> blocks) {
  if (blocks.size() > static_cast<std::size_t>(Covering::kMaxBlocks)) {
    throw Error("OutOfRange",
                "more than " + std::to_string(Covering::kMaxBlocks) + " blocks");
  }
  Mask full = ground.full_mask();
  Mask covered = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == 0) throw Error("EmptyBlock", "block " + std::to_string(i));
    if (!subset_of(blocks[i], full)) {
      throw Error("UnknownLabel", "block " + std::to_string(i) + " outside ground set");
    }
    covered |= blocks[i];
  }
  if (covered != full) {
    int missing = std::countr_zero(full & ~covered);
    throw Error("NotACovering", ground.label(missing));
  }
  return Covering(std::move(ground), std::move(blocks));
}

Covering validate_covering(std::vector<std::string> ground,
                           std::vector<std::vector<std::string>> blocks) {
  GroundSet gs(std::move(ground));
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw Error("EmptyBlock", "block " + std::to_string(i));
    masks.push_back(gs.mask_of(blocks[i]));
  }
  return covering_from_masks(std::move(gs), std::move(masks));
}

SimplifyResult simplify(const Covering& c) {
  const GroundSet& g = c.ground();
  int n = g.size();

  std::vector<int> rep(n);
  std::unordered_map<BlockMask, int> first_with_single;
  for (int e = 0; e < n; ++e) {
    rep[e] = e;
    BlockMask inc = c.element_incidence(e);
    if (popcount(inc) == 1) {
      auto [it, fresh] = first_with_single.try_emplace(inc, e);
      if (!fresh) rep[e] = it->second;
    }
  }

  std::vector<std::string> quotient_ground;
  for (int e = 0; e < n; ++e) {
    if (rep[e] == e) quotient_ground.push_back(g.label(e));
  }
  std::vector<std::vector<std::string>> quotient_blocks;
  quotient_blocks.reserve(static_cast<std::size_t>(c.block_count()));
  for (Mask b : c.blocks()) {
    Mask image = 0;
    for_each_element(b, [&](int e) { image |= bit(rep[e]); });
    std::vector<std::string> labels;
    for_each_element(image, [&](int e) { labels.push_back(g.label(e)); });
    quotient_blocks.push_back(std::move(labels));
  }

  std::map<std::string, std::string> mapping;
  for (int e = 0; e < n; ++e) mapping[g.label(e)] = g.label(rep[e]);

  return SimplifyResult{validate_covering(std::move(quotient_ground), std::move(quotient_blocks)),
                        std::move(mapping)};
}

}  // namespace covlat
