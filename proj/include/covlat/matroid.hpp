#pragma once

#include <optional>

#include "covlat/covering.hpp"

namespace covlat {

// Independence, rank and closure oracles for the transversal matroid of a
// covering, backed by augmenting-path bipartite matching between elements and
// block indices. Immutable; queries are pure and keep their scratch state on
// the stack, so concurrent use is safe.
class MatroidOracle {
 public:
  explicit MatroidOracle(Covering covering) : covering_(std::move(covering)) {}

  const Covering& covering() const { return covering_; }
  const GroundSet& ground() const { return covering_.ground(); }

  // True iff some matching saturates h, i.e. h is a partial transversal.
  bool is_independent(Mask h) const;

  // Size of a maximum matching between x and the block indices.
  int rank(Mask x) const;

  // All elements whose addition leaves rank(x) unchanged. Extensive, monotone
  // and idempotent; computes the base matching of x once and tries a single
  // augmentation per candidate element.
  Mask closure(Mask x) const;

  // For independent h and g outside h: if g lies in closure(h), returns the
  // first (by cardinality, then dictionary order) h' of h with
  // |blocks_meeting(h')| = |h'| and blocks_meeting({g}) inside
  // blocks_meeting(h'); otherwise nullopt. Errors: NotIndependent.
  std::optional<Mask> closure_witness(Mask h, int g) const;

 private:
  Covering covering_;
};

}  // namespace covlat
