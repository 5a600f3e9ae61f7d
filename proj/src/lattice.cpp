#include "covlat/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"

namespace covlat {

std::vector<int> atoms(const GradedLattice& l) {
  std::vector<int> out;
  for (int i = 0; i < l.size(); ++i) {
    if (l.heights[i] == 1) out.push_back(i);
  }
  return out;
}

int cover_count(const GradedLattice& l, int f) {
  if (f < 0 || f >= l.size()) throw Error("IndexOutOfRange", std::to_string(f));
  return static_cast<int>(l.covers_up[f].size());
}

LevelProfile level_profile(const GradedLattice& l) {
  LevelProfile p;
  int max_height = 0;
  for (int h : l.heights) max_height = std::max(max_height, h);
  p.counts.assign(static_cast<std::size_t>(max_height) + 1, 0);
  for (int h : l.heights) ++p.counts[h];
  return p;
}

std::vector<std::vector<int>> covers_down(const GradedLattice& l) {
  std::vector<std::vector<int>> down(l.labels.size());
  for (int i = 0; i < l.size(); ++i) {
    for (int j : l.covers_up[i]) down[j].push_back(i);
  }
  for (auto& list : down) std::sort(list.begin(), list.end());
  return down;
}

namespace {

void fail_lattice(const std::string& what) { throw Error("InternalInconsistency", what); }

// Bit rows of the reflexive order relation derived from the cover edges.
std::vector<std::vector<std::uint64_t>> below_relation(const GradedLattice& l,
                                                       const std::vector<std::vector<int>>& down) {
  int n = l.size();
  std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> below(n, std::vector<std::uint64_t>(words, 0));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return l.heights[a] < l.heights[b]; });
  for (int i : order) {
    below[i][i / 64] |= std::uint64_t{1} << (i % 64);
    for (int d : down[i]) {
      for (std::size_t w = 0; w < words; ++w) below[i][w] |= below[d][w];
    }
  }
  return below;
}

bool bit_at(const std::vector<std::uint64_t>& row, int i) {
  return (row[i / 64] >> (i % 64)) & 1;
}

}  // namespace

void validate_graded_lattice(const GradedLattice& l) {
  int n = l.size();
  if (n == 0) fail_lattice("empty lattice");
  if (static_cast<int>(l.heights.size()) != n || static_cast<int>(l.covers_up.size()) != n) {
    fail_lattice("field sizes disagree");
  }
  if (l.bottom < 0 || l.bottom >= n || l.top < 0 || l.top >= n) {
    fail_lattice("bottom/top index out of range");
  }
  if (l.heights[l.bottom] != 0) fail_lattice("bottom not at height 0");

  auto down = covers_down(l);
  int max_height = 0;
  for (int h : l.heights) max_height = std::max(max_height, h);
  if (l.heights[l.top] != max_height) fail_lattice("top not at maximal height");

  for (int i = 0; i < n; ++i) {
    for (int j : l.covers_up[i]) {
      if (j < 0 || j >= n) fail_lattice("cover edge out of range");
      if (l.heights[j] != l.heights[i] + 1) fail_lattice("cover edge skips a level");
    }
    if (i != l.bottom && down[i].empty()) fail_lattice("second minimal element");
    if (i != l.top && l.covers_up[i].empty()) fail_lattice("second maximal element");
  }

  auto below = below_relation(l, down);
  for (int i = 0; i < n; ++i) {
    if (!bit_at(below[i], l.bottom)) fail_lattice("element not above the bottom");
  }
  for (int i = 0; i < n; ++i) {
    if (!bit_at(below[l.top], i)) fail_lattice("element not below the top");
  }

  // meets and joins exist: the common lower (upper) bounds of every pair have a
  // unique greatest (least) element
  std::size_t words = below[0].size();
  std::vector<std::uint64_t> common(words);
  std::vector<int> by_height(n);
  for (int i = 0; i < n; ++i) by_height[i] = i;
  std::sort(by_height.begin(), by_height.end(),
            [&](int a, int b) { return l.heights[a] > l.heights[b]; });
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (std::size_t w = 0; w < words; ++w) common[w] = below[a][w] & below[b][w];
      int greatest = -1;
      for (int c : by_height) {
        if (bit_at(common, c)) {
          greatest = c;
          break;
        }
      }
      if (greatest < 0) fail_lattice("pair without common lower bound");
      for (std::size_t w = 0; w < words; ++w) {
        if ((common[w] & ~below[greatest][w]) != 0) fail_lattice("pair without a meet");
      }
    }
  }
  // joins: dual argument on the transposed relation
  std::vector<std::vector<std::uint64_t>> above(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (bit_at(below[j], i)) above[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  std::vector<int> by_height_asc(by_height.rbegin(), by_height.rend());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (std::size_t w = 0; w < words; ++w) common[w] = above[a][w] & above[b][w];
      int least = -1;
      for (int c : by_height_asc) {
        if (bit_at(common, c)) {
          least = c;
          break;
        }
      }
      if (least < 0) fail_lattice("pair without common upper bound");
      for (std::size_t w = 0; w < words; ++w) {
        if ((common[w] & ~above[least][w]) != 0) fail_lattice("pair without a join");
      }
    }
  }
}

FlatLattice::FlatLattice(MatroidOracle oracle, std::vector<Mask> flats,
                         std::vector<int> heights, std::vector<std::vector<int>> covers_up)
    : oracle_(std::move(oracle)),
      flats_(std::move(flats)),
      heights_(std::move(heights)),
      covers_up_(std::move(covers_up)) {
  index_.reserve(flats_.size());
  for (std::size_t i = 0; i < flats_.size(); ++i) index_[flats_[i]] = static_cast<int>(i);
}

Mask FlatLattice::flat(int i) const {
  check_index(i);
  return flats_[i];
}

int FlatLattice::height(int i) const {
  check_index(i);
  return heights_[i];
}

int FlatLattice::index_of(Mask flat) const {
  auto it = index_.find(flat);
  return it == index_.end() ? -1 : it->second;
}

void FlatLattice::check_index(int f) const {
  if (f < 0 || f >= size()) throw Error("IndexOutOfRange", std::to_string(f));
}

int FlatLattice::meet(int f1, int f2) const {
  check_index(f1);
  check_index(f2);
  int i = index_of(flats_[f1] & flats_[f2]);
  if (i < 0) {
    throw Error("InternalInconsistency",
                "intersection of flats is not a stored flat: " +
                    ground().set_text(flats_[f1] & flats_[f2]));
  }
  return i;
}

int FlatLattice::join(int f1, int f2) const {
  check_index(f1);
  check_index(f2);
  Mask closed = oracle_.closure(flats_[f1] | flats_[f2]);
  int i = index_of(closed);
  if (i < 0) {
    throw Error("InternalInconsistency",
                "closure of a union is not a stored flat: " + ground().set_text(closed));
  }
  return i;
}

GradedLattice FlatLattice::graph() const {
  GradedLattice g;
  g.labels.reserve(flats_.size());
  for (Mask f : flats_) g.labels.push_back(ground().set_text(f));
  g.heights = heights_;
  g.covers_up = covers_up_;
  g.bottom = bottom();
  g.top = top();
  return g;
}

FlatLattice build_lattice(const MatroidOracle& m) {
  Mask full = m.ground().full_mask();

  std::vector<std::vector<Mask>> levels;
  levels.push_back({m.closure(0)});

  std::vector<std::vector<std::pair<Mask, Mask>>> edges_by_level;
  while (true) {
    const std::vector<Mask>& current = levels.back();
    std::unordered_set<Mask> next_set;
    std::vector<std::pair<Mask, Mask>> edges;
    for (Mask f : current) {
      for_each_element(full & ~f, [&](int e) {
        Mask grown = m.closure(f | bit(e));
        edges.emplace_back(f, grown);
        next_set.insert(grown);
      });
    }
    if (next_set.empty()) break;
    std::vector<Mask> next(next_set.begin(), next_set.end());
    std::sort(next.begin(), next.end(), set_lex_less);
    edges_by_level.push_back(std::move(edges));
    levels.push_back(std::move(next));
  }

  std::vector<Mask> flats;
  std::vector<int> heights;
  std::unordered_map<Mask, int> index;
  for (std::size_t level = 0; level < levels.size(); ++level) {
    for (Mask f : levels[level]) {
      index[f] = static_cast<int>(flats.size());
      flats.push_back(f);
      heights.push_back(static_cast<int>(level));
    }
  }

  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (m.rank(flats[i]) != heights[i]) {
      throw Error("InternalInconsistency",
                  "height differs from rank at " + m.ground().set_text(flats[i]));
    }
  }

  std::vector<std::vector<int>> covers_up(flats.size());
  for (const auto& edges : edges_by_level) {
    for (const auto& [from, to] : edges) covers_up[index.at(from)].push_back(index.at(to));
  }
  for (auto& list : covers_up) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  return FlatLattice(m, std::move(flats), std::move(heights), std::move(covers_up));
}

std::vector<int> atoms(const FlatLattice& l) {
  std::vector<int> out;
  for (int i = 0; i < l.size(); ++i) {
    if (l.heights()[i] == 1) out.push_back(i);
  }
  return out;
}

int cover_count(const FlatLattice& l, int f) {
  if (f < 0 || f >= l.size()) throw Error("IndexOutOfRange", std::to_string(f));
  return static_cast<int>(l.covers_up()[f].size());
}

LevelProfile level_profile(const FlatLattice& l) {
  LevelProfile p;
  int max_height = 0;
  for (int h : l.heights()) max_height = std::max(max_height, h);
  p.counts.assign(static_cast<std::size_t>(max_height) + 1, 0);
  for (int h : l.heights()) ++p.counts[h];
  return p;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dot_document(const GradedLattice& l) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (int i = 0; i < l.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(l.labels[i]) + "\"];\n";
  }
  int max_height = 0;
  for (int h : l.heights) max_height = std::max(max_height, h);
  for (int h = 0; h <= max_height; ++h) {
    out += "  { rank=same;";
    for (int i = 0; i < l.size(); ++i) {
      if (l.heights[i] == h) out += " n" + std::to_string(i) + ";";
    }
    out += " }\n";
  }
  for (int i = 0; i < l.size(); ++i) {
    for (int j : l.covers_up[i]) {
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

nlohmann::json cover_pairs(const std::vector<std::vector<int>>& covers_up) {
  auto pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < covers_up.size(); ++i) {
    for (int j : covers_up[i]) pairs.push_back({i, j});
  }
  return pairs;
}

}  // namespace

std::string export_dot(const GradedLattice& l) { return dot_document(l); }

std::string export_dot(const FlatLattice& l) { return dot_document(l.graph()); }

std::string export_json(const GradedLattice& l) {
  nlohmann::json j;
  j["flats"] = l.labels;
  j["covers"] = cover_pairs(l.covers_up);
  j["heights"] = l.heights;
  j["bottom"] = l.bottom;
  j["top"] = l.top;
  return j.dump(2) + "\n";
}

std::string export_json(const FlatLattice& l) {
  nlohmann::json j;
  auto flats = nlohmann::json::array();
  for (Mask f : l.flats()) flats.push_back(l.ground().labels_of(f));
  j["flats"] = flats;
  j["covers"] = cover_pairs(l.covers_up());
  j["heights"] = l.heights();
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  return j.dump(2) + "\n";
}

}  // namespace covlat
