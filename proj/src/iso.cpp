#include "covlat/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace covlat {

namespace {

struct Refined {
  std::vector<int> color;   // stable class id per node
  std::vector<int> counts;  // class id -> size within this lattice
};

// Joint iterated refinement of both lattices: start from (height, up-degree,
// down-degree) and repeatedly fold in the sorted neighbor color multisets.
// Class ids are shared between the two lattices so histograms are comparable.
bool refine(const GradedLattice& a, const GradedLattice& b,
            const std::vector<std::vector<int>>& a_down,
            const std::vector<std::vector<int>>& b_down, Refined& ra, Refined& rb) {
  int na = a.size(), nb = b.size();
  ra.color.assign(na, 0);
  rb.color.assign(nb, 0);

  using Signature = std::vector<int>;
  auto assign = [&](auto&& signature_of) {
    std::map<Signature, int> ids;
    auto remap = [&](const GradedLattice& l, const std::vector<std::vector<int>>& down,
                     std::vector<int>& color) {
      std::vector<int> next(l.size());
      for (int i = 0; i < l.size(); ++i) {
        next[i] = ids.try_emplace(signature_of(l, down, color, i), static_cast<int>(ids.size()))
                      .first->second;
      }
      color = std::move(next);
    };
    remap(a, a_down, ra.color);
    remap(b, b_down, rb.color);
    return static_cast<int>(ids.size());
  };

  int classes = assign([](const GradedLattice& l, const std::vector<std::vector<int>>& down,
                          const std::vector<int>&, int i) -> Signature {
    return {l.heights[i], static_cast<int>(l.covers_up[i].size()),
            static_cast<int>(down[i].size())};
  });

  while (true) {
    int next_classes =
        assign([](const GradedLattice& l, const std::vector<std::vector<int>>& down,
                  const std::vector<int>& color, int i) -> Signature {
          Signature sig;
          sig.push_back(color[i]);
          std::vector<int> up, dn;
          for (int j : l.covers_up[i]) up.push_back(color[j]);
          for (int j : down[i]) dn.push_back(color[j]);
          std::sort(up.begin(), up.end());
          std::sort(dn.begin(), dn.end());
          sig.push_back(-1);
          sig.insert(sig.end(), up.begin(), up.end());
          sig.push_back(-1);
          sig.insert(sig.end(), dn.begin(), dn.end());
          return sig;
        });
    if (next_classes == classes) break;
    classes = next_classes;
  }

  ra.counts.assign(classes, 0);
  rb.counts.assign(classes, 0);
  for (int c : ra.color) ++ra.counts[c];
  for (int c : rb.color) ++rb.counts[c];
  return ra.counts == rb.counts;
}

bool verify_bijection(const GradedLattice& a, const GradedLattice& b,
                      const std::vector<int>& map) {
  std::size_t a_edges = 0, b_edges = 0;
  for (int i = 0; i < a.size(); ++i) {
    a_edges += a.covers_up[i].size();
    for (int j : a.covers_up[i]) {
      const auto& image = b.covers_up[map[i]];
      if (!std::binary_search(image.begin(), image.end(), map[j])) return false;
    }
  }
  for (int i = 0; i < b.size(); ++i) b_edges += b.covers_up[i].size();
  return a_edges == b_edges && b.heights[map[a.bottom]] == 0;
}

}  // namespace

std::optional<std::vector<int>> lattice_isomorphic(const GradedLattice& a,
                                                   const GradedLattice& b,
                                                   const IsoOptions& opts) {
  if (static_cast<std::size_t>(a.size()) > opts.node_budget ||
      static_cast<std::size_t>(b.size()) > opts.node_budget) {
    throw Error("TooLarge", "lattice exceeds the node budget of " +
                                std::to_string(opts.node_budget));
  }
  if (a.size() != b.size()) return std::nullopt;
  if (level_profile(a) != level_profile(b)) return std::nullopt;

  auto a_down = covers_down(a);
  auto b_down = covers_down(b);
  Refined ra, rb;
  if (!refine(a, b, a_down, b_down, ra, rb)) return std::nullopt;

  int n = a.size();
  // most-constrained first: ascending refinement class size
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (ra.counts[ra.color[x]] != ra.counts[ra.color[y]]) {
      return ra.counts[ra.color[x]] < ra.counts[ra.color[y]];
    }
    if (ra.color[x] != ra.color[y]) return ra.color[x] < ra.color[y];
    return x < y;
  });

  std::vector<std::vector<int>> candidates_by_color(ra.counts.size());
  for (int j = 0; j < n; ++j) candidates_by_color[rb.color[j]].push_back(j);

  std::vector<int> map(n, -1), inverse(n, -1);

  auto consistent = [&](int u, int v) {
    for (int w : a.covers_up[u]) {
      if (map[w] >= 0 &&
          !std::binary_search(b.covers_up[v].begin(), b.covers_up[v].end(), map[w])) {
        return false;
      }
    }
    for (int w : a_down[u]) {
      if (map[w] >= 0 &&
          !std::binary_search(b_down[v].begin(), b_down[v].end(), map[w])) {
        return false;
      }
    }
    for (int z : b.covers_up[v]) {
      if (inverse[z] >= 0 &&
          !std::binary_search(a.covers_up[u].begin(), a.covers_up[u].end(), inverse[z])) {
        return false;
      }
    }
    for (int z : b_down[v]) {
      if (inverse[z] >= 0 &&
          !std::binary_search(a_down[u].begin(), a_down[u].end(), inverse[z])) {
        return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int u = order[depth];
    for (int v : candidates_by_color[ra.color[u]]) {
      if (inverse[v] >= 0 || !consistent(u, v)) continue;
      map[u] = v;
      inverse[v] = u;
      if (self(self, depth + 1)) return true;
      map[u] = -1;
      inverse[v] = -1;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  if (!verify_bijection(a, b, map)) {
    throw Error("InternalInconsistency", "bijection failed cover verification");
  }
  return map;
}

}  // namespace covlat
