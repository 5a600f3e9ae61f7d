#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "covlat/matroid.hpp"

namespace covlat {

struct LevelProfile {
  std::vector<std::int64_t> counts;  // counts[l] = number of elements at height l
  int num_levels() const { return static_cast<int>(counts.size()); }
  bool operator==(const LevelProfile&) const = default;
};

// Graded lattice skeleton: heights, upward cover edges and display labels.
// The covering-induced lattice and the generated classical lattices all reduce
// to this shape for isomorphism testing, validation and export.
struct GradedLattice {
  std::vector<std::string> labels;
  std::vector<int> heights;
  std::vector<std::vector<int>> covers_up;  // sorted index lists
  int bottom = 0;
  int top = 0;

  int size() const { return static_cast<int>(labels.size()); }
  bool operator==(const GradedLattice&) const = default;
};

std::vector<int> atoms(const GradedLattice& l);
int cover_count(const GradedLattice& l, int f);  // errors: IndexOutOfRange
LevelProfile level_profile(const GradedLattice& l);
std::vector<std::vector<int>> covers_down(const GradedLattice& l);

// Structural validation: unique bottom and top, cover edges connect adjacent
// heights, every element reachable from the bottom, every non-extreme element
// has covers both ways, and every pair has a meet and a join. Throws
// InternalInconsistency naming the violated condition.
void validate_graded_lattice(const GradedLattice& l);

// Lattice of flats (closed sets) of a transversal matroid. Flats are bitsets
// over dense element indices in canonical order: by (height, dictionary order
// of the element list).
class FlatLattice {
 public:
  FlatLattice(MatroidOracle oracle, std::vector<Mask> flats,
              std::vector<int> heights, std::vector<std::vector<int>> covers_up);

  const MatroidOracle& oracle() const { return oracle_; }
  const GroundSet& ground() const { return oracle_.ground(); }
  const std::vector<Mask>& flats() const { return flats_; }
  Mask flat(int i) const;
  int size() const { return static_cast<int>(flats_.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  const std::vector<int>& heights() const { return heights_; }
  int height(int i) const;
  const std::vector<std::vector<int>>& covers_up() const { return covers_up_; }

  // Index of a stored flat, -1 if the mask is not a flat.
  int index_of(Mask flat) const;

  // Meet is intersection, join is the closure of the union. Both results must
  // be stored flats; a miss signals an enumeration bug (InternalInconsistency).
  int meet(int f1, int f2) const;
  int join(int f1, int f2) const;

  GradedLattice graph() const;

 private:
  void check_index(int f) const;

  MatroidOracle oracle_;
  std::vector<Mask> flats_;
  std::vector<int> heights_;
  std::vector<std::vector<int>> covers_up_;
  std::unordered_map<Mask, int> index_;
};

// Enumerates all flats level by level from closure(empty), recording cover
// edges as it sweeps. Heights are checked against matroid rank.
FlatLattice build_lattice(const MatroidOracle& m);

std::vector<int> atoms(const FlatLattice& l);
int cover_count(const FlatLattice& l, int f);
LevelProfile level_profile(const FlatLattice& l);

// DOT digraph, one node per element labeled by its display text, one edge per
// cover pair, elements of equal height ranked together. Byte-deterministic.
std::string export_dot(const GradedLattice& l);
std::string export_dot(const FlatLattice& l);

// JSON document with keys "flats", "covers", "heights", "bottom", "top"
// (sorted keys, trailing newline). FlatLattice stores each flat as an array of
// element labels; GradedLattice stores the display label string.
std::string export_json(const GradedLattice& l);
std::string export_json(const FlatLattice& l);

}  // namespace covlat
