#include "covlat/classical.hpp"

#include <algorithm>
#include <map>

namespace covlat {

namespace {

constexpr int kStirlingCap = 30;  // keeps every intermediate product inside 128 bits

BigUint checked_mul(BigUint a, BigUint b) {
  if (a != 0 && b > ~BigUint{0} / a) throw Error("OutOfRange", "count exceeds 128 bits");
  return a * b;
}

BigUint checked_add(BigUint a, BigUint b) {
  if (b > ~BigUint{0} - a) throw Error("OutOfRange", "count exceeds 128 bits");
  return a + b;
}

BigUint power(BigUint base, int exp) {
  BigUint out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

std::string to_string(BigUint v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigUint binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigUint out = 1;
  for (int i = 1; i <= k; ++i) {
    out = checked_mul(out, static_cast<BigUint>(n - k + i));
    out /= static_cast<BigUint>(i);
  }
  return out;
}

BigUint stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error("OutOfRange", "stirling2 needs 0 <= k <= n");
  if (n > kStirlingCap) {
    throw Error("OutOfRange", "stirling2 limited to n <= " + std::to_string(kStirlingCap));
  }
  std::vector<BigUint> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = checked_mul(static_cast<BigUint>(j), row[j]) + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

BigUint gaussian_binomial(int n, int l, long long q) {
  if (n < 0 || l < 0 || l > n) {
    throw Error("OutOfRange", "gaussian_binomial needs 0 <= l <= n");
  }
  if (q < 2) throw Error("OutOfRange", "gaussian_binomial needs q >= 2");
  BigUint numerator = 1;
  BigUint denominator = 1;
  for (int i = 0; i < l; ++i) {
    numerator = checked_mul(numerator, power(static_cast<BigUint>(q), n - i) - 1);
    denominator = checked_mul(denominator, power(static_cast<BigUint>(q), l - i) - 1);
  }
  return numerator / denominator;
}

BigUint whitney2(int n, int l, int group_order) {
  if (n < 0 || l < 0 || l > n) throw Error("OutOfRange", "whitney2 needs 0 <= l <= n");
  if (group_order < 1) throw Error("OutOfRange", "whitney2 needs a positive group order");
  int target = n - l;  // number of nonzero blocks
  BigUint sum = 0;
  for (int i = target; i <= n; ++i) {
    sum = checked_add(
        sum, checked_mul(checked_mul(binomial(n, i),
                                     power(static_cast<BigUint>(group_order), i - target)),
                         stirling2(i, target)));
  }
  return sum;
}

BigUint dowling_cover_count(int k, int group_order) {
  if (k < 0 || group_order < 1) {
    throw Error("OutOfRange", "dowling_cover_count needs k >= 0 and a positive group order");
  }
  return static_cast<BigUint>(k) +
         checked_mul(static_cast<BigUint>(group_order), binomial(k, 2));
}

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

bool is_prime_power(long long v, long long* base, int* exponent) {
  if (v < 2 || v > 1000000) return false;
  long long p = v;
  for (long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      p = d;
      break;
    }
  }
  int e = 0;
  long long rest = v;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return false;
  if (base != nullptr) *base = p;
  if (exponent != nullptr) *exponent = e;
  return true;
}

GroupTable GroupTable::cyclic(int order) {
  if (order < 1) throw Error("InvalidGroup", "order must be positive");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  }
  return from_table(std::move(table));
}

GroupTable GroupTable::from_table(std::vector<std::vector<int>> table) {
  int m = static_cast<int>(table.size());
  if (m < 1) throw Error("InvalidGroup", "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m) throw Error("InvalidGroup", "table not square");
    for (int v : row) {
      if (v < 0 || v >= m) throw Error("InvalidGroup", "entry out of range");
    }
  }
  for (int a = 0; a < m; ++a) {
    if (table[0][a] != a || table[a][0] != a) {
      throw Error("InvalidGroup", "index 0 is not the identity");
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error("InvalidGroup", "not associative");
        }
      }
    }
  }
  std::vector<int> inverse(m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0) throw Error("InvalidGroup", "element without inverse");
  }
  return GroupTable(std::move(table), std::move(inverse));
}

namespace {

using Blocks = std::vector<std::vector<int>>;

// Canonical form: elements ascending inside blocks, blocks by least element.
Blocks canonical_blocks(Blocks blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

std::string partition_label(const Blocks& blocks) {
  if (blocks.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out += "|";
    for (int e : blocks[i]) out += std::to_string(e);
  }
  return out;
}

// All set partitions of the listed elements, via restricted growth strings.
std::vector<Blocks> set_partitions(const std::vector<int>& elements) {
  std::vector<Blocks> out;
  Blocks current;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == elements.size()) {
      out.push_back(canonical_blocks(current));
      return;
    }
    std::size_t count = current.size();  // deeper frames append and remove blocks
    for (std::size_t b = 0; b < count; ++b) {
      current[b].push_back(elements[i]);
      self(self, i + 1);
      current[b].pop_back();
    }
    current.push_back({elements[i]});
    self(self, i + 1);
    current.pop_back();
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace

GradedLattice gen_partition_lattice(int n) {
  if (n < 1 || n > 8) throw Error("OutOfRange", "partition lattice limited to 1 <= n <= 8");

  std::vector<int> elements(n);
  for (int i = 0; i < n; ++i) elements[i] = i + 1;
  std::vector<Blocks> all = set_partitions(elements);
  std::sort(all.begin(), all.end(), [n](const Blocks& a, const Blocks& b) {
    int ha = n - static_cast<int>(a.size());
    int hb = n - static_cast<int>(b.size());
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::map<Blocks, int> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);

  GradedLattice l;
  l.labels.reserve(all.size());
  l.heights.reserve(all.size());
  l.covers_up.resize(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    l.labels.push_back(partition_label(all[i]));
    l.heights.push_back(n - static_cast<int>(all[i].size()));
    int blocks = static_cast<int>(all[i].size());
    for (int p = 0; p < blocks; ++p) {
      for (int r = p + 1; r < blocks; ++r) {
        Blocks merged;
        merged.reserve(static_cast<std::size_t>(blocks) - 1);
        std::vector<int> joined = all[i][p];
        joined.insert(joined.end(), all[i][r].begin(), all[i][r].end());
        merged.push_back(std::move(joined));
        for (int s = 0; s < blocks; ++s) {
          if (s != p && s != r) merged.push_back(all[i][s]);
        }
        l.covers_up[i].push_back(index.at(canonical_blocks(std::move(merged))));
      }
    }
    std::sort(l.covers_up[i].begin(), l.covers_up[i].end());
  }
  l.bottom = 0;
  l.top = static_cast<int>(all.size()) - 1;
  return l;
}

namespace {

using Matrix = std::vector<std::vector<int>>;  // RREF rows over the prime field

std::string subspace_label(const Matrix& rows) {
  std::string out = "<";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ",";
    for (int v : rows[i]) out += std::to_string(v);
  }
  out += ">";
  return out;
}

// Enumerates all d x n reduced-row-echelon matrices over F_q for a fixed set
// of pivot columns, in odometer order of the free entries.
void enumerate_rref(int n, long long q, const std::vector<int>& pivots,
                    std::vector<Matrix>& out) {
  int d = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::pair<int, int>> free_cells;
  for (int i = 0; i < d; ++i) {
    for (int j = pivots[i] + 1; j < n; ++j) {
      if (!is_pivot[j]) free_cells.emplace_back(i, j);
    }
  }

  Matrix m(d, std::vector<int>(n, 0));
  for (int i = 0; i < d; ++i) m[i][pivots[i]] = 1;

  std::vector<int> values(free_cells.size(), 0);
  while (true) {
    for (std::size_t c = 0; c < free_cells.size(); ++c) {
      m[free_cells[c].first][free_cells[c].second] = values[c];
    }
    out.push_back(m);
    std::size_t c = 0;
    while (c < values.size() && values[c] == q - 1) values[c++] = 0;
    if (c == values.size()) break;
    ++values[c];
  }
}

// True iff every row of a lies in the row space of the RREF matrix b.
bool subspace_contained(const Matrix& a, const Matrix& b, int n, long long q) {
  std::vector<int> b_pivot_col(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    int c = 0;
    while (b[i][c] == 0) ++c;
    b_pivot_col[i] = c;
  }
  for (const auto& row : a) {
    std::vector<int> r = row;
    for (std::size_t i = 0; i < b.size(); ++i) {
      int coeff = r[b_pivot_col[i]];
      if (coeff != 0) {
        for (int j = 0; j < n; ++j) {
          r[j] = static_cast<int>(((r[j] - static_cast<long long>(coeff) * b[i][j]) % q + q) % q);
        }
      }
    }
    for (int v : r) {
      if (v != 0) return false;
    }
  }
  return true;
}

}  // namespace

GradedLattice gen_subspace_lattice(long long q, int n) {
  if (!is_prime(q)) throw Error("NotPrime", std::to_string(q));
  if (n < 0) throw Error("OutOfRange", "dimension must be nonnegative");
  long long points = 1;
  for (int i = 0; i < n; ++i) {
    points *= q;
    if (points > 10000) throw Error("OutOfRange", "q^n exceeds 10^4");
  }

  std::vector<std::vector<Matrix>> by_dim(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) {
    std::vector<int> pivots(d);
    auto choose = [&](auto&& self, int start, int chosen) -> void {
      if (chosen == d) {
        enumerate_rref(n, q, pivots, by_dim[d]);
        return;
      }
      for (int c = start; c < n; ++c) {
        pivots[chosen] = c;
        self(self, c + 1, chosen + 1);
      }
    };
    choose(choose, 0, 0);
    std::sort(by_dim[d].begin(), by_dim[d].end());
  }

  GradedLattice l;
  std::vector<int> first_of_dim(static_cast<std::size_t>(n) + 2, 0);
  for (int d = 0; d <= n; ++d) {
    first_of_dim[d] = l.size();
    for (const Matrix& m : by_dim[d]) {
      l.labels.push_back(subspace_label(m));
      l.heights.push_back(d);
    }
  }
  first_of_dim[n + 1] = l.size();
  l.covers_up.resize(l.labels.size());
  for (int d = 0; d < n; ++d) {
    for (std::size_t i = 0; i < by_dim[d].size(); ++i) {
      for (std::size_t j = 0; j < by_dim[d + 1].size(); ++j) {
        if (subspace_contained(by_dim[d][i], by_dim[d + 1][j], n, q)) {
          l.covers_up[first_of_dim[d] + static_cast<int>(i)].push_back(
              first_of_dim[d + 1] + static_cast<int>(j));
        }
      }
    }
  }
  l.bottom = 0;
  l.top = l.size() - 1;
  return l;
}

namespace {

// Partial G-partition in canonical form: within each block the least element
// carries the identity label; blocks ordered by least element.
struct DowlingNode {
  Mask zero = 0;
  std::vector<std::pair<Mask, std::vector<int>>> blocks;

  auto operator<=>(const DowlingNode&) const = default;
};

std::string dowling_label(const DowlingNode& x) {
  std::string out;
  if (x.zero != 0) {
    out += "0(";
    for_each_element(x.zero, [&](int e) { out += std::to_string(e + 1); });
    out += ")";
  }
  for (const auto& [mask, labels] : x.blocks) {
    if (!out.empty()) out += "|";
    for_each_element(mask, [&](int e) { out += std::to_string(e + 1); });
    out += "^";
    for (int v : labels) out += std::to_string(v);
  }
  if (out.empty()) out = "-";
  return out;
}

// All partitions of the elements of rest_mask into labeled blocks, every
// labeling with identity on the least block element.
void enumerate_labelings(const std::vector<std::vector<int>>& blocks, int order,
                         const Mask zero, std::vector<DowlingNode>& out) {
  std::vector<std::pair<Mask, std::vector<int>>> canonical;
  canonical.reserve(blocks.size());
  for (const auto& b : blocks) {
    Mask m = 0;
    for (int e : b) m |= bit(e);
    canonical.emplace_back(m, std::vector<int>(b.size(), 0));
  }
  std::sort(canonical.begin(), canonical.end());

  auto recurse = [&](auto&& self, std::size_t block_index, std::size_t cell) -> void {
    if (block_index == canonical.size()) {
      out.push_back(DowlingNode{zero, canonical});
      return;
    }
    auto& labels = canonical[block_index].second;
    if (cell == labels.size()) {
      self(self, block_index + 1, 1);
      return;
    }
    for (int g = 0; g < order; ++g) {
      labels[cell] = g;
      self(self, block_index, cell + 1);
    }
    labels[cell] = 0;
  };
  recurse(recurse, 0, 1);
}

}  // namespace

GradedLattice gen_dowling_lattice(int n, const GroupTable& g) {
  if (n < 0 || n > 4) throw Error("OutOfRange", "Dowling lattice limited to 0 <= n <= 4");
  if (g.order() > 4) throw Error("OutOfRange", "Dowling lattice limited to |G| <= 4");

  Mask full = n == 0 ? 0 : (bit(n) - 1);
  std::vector<DowlingNode> nodes;
  for (Mask zero = 0; zero <= full; ++zero) {
    std::vector<int> rest = elements_of(full & ~zero);
    for (const auto& blocks : set_partitions(rest)) {
      enumerate_labelings(blocks, g.order(), zero, nodes);
    }
    if (full == 0) break;
  }
  std::sort(nodes.begin(), nodes.end(), [n](const DowlingNode& a, const DowlingNode& b) {
    int ha = n - static_cast<int>(a.blocks.size());
    int hb = n - static_cast<int>(b.blocks.size());
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::map<DowlingNode, int> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);

  GradedLattice l;
  l.covers_up.resize(nodes.size());
  for (const DowlingNode& x : nodes) {
    l.labels.push_back(dowling_label(x));
    l.heights.push_back(n - static_cast<int>(x.blocks.size()));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const DowlingNode& x = nodes[i];
    int k = static_cast<int>(x.blocks.size());
    // absorb one block into the zero block
    for (int b = 0; b < k; ++b) {
      DowlingNode up;
      up.zero = x.zero | x.blocks[b].first;
      for (int s = 0; s < k; ++s) {
        if (s != b) up.blocks.push_back(x.blocks[s]);
      }
      l.covers_up[i].push_back(index.at(up));
    }
    // merge two blocks with a relative label, then renormalize so the least
    // element of the merged block carries the identity; the |G| choices of rel
    // stay pairwise inequivalent
    for (int b = 0; b < k; ++b) {
      for (int c = b + 1; c < k; ++c) {
        for (int rel = 0; rel < g.order(); ++rel) {
          Mask merged_mask = x.blocks[b].first | x.blocks[c].first;
          std::vector<int> merged_labels;
          merged_labels.reserve(static_cast<std::size_t>(popcount(merged_mask)));
          std::vector<int> eb = elements_of(x.blocks[b].first);
          std::vector<int> ec = elements_of(x.blocks[c].first);
          std::size_t ib = 0, ic = 0;
          for_each_element(merged_mask, [&](int e) {
            if (ib < eb.size() && eb[ib] == e) {
              merged_labels.push_back(x.blocks[b].second[ib]);
              ++ib;
            } else {
              merged_labels.push_back(g.mul(rel, x.blocks[c].second[ic]));
              ++ic;
            }
          });
          int shift = g.inv(merged_labels.front());
          for (int& v : merged_labels) v = g.mul(shift, v);
          DowlingNode up;
          up.zero = x.zero;
          up.blocks.emplace_back(merged_mask, std::move(merged_labels));
          for (int s = 0; s < k; ++s) {
            if (s != b && s != c) up.blocks.push_back(x.blocks[s]);
          }
          std::sort(up.blocks.begin(), up.blocks.end());
          l.covers_up[i].push_back(index.at(up));
        }
      }
    }
    std::sort(l.covers_up[i].begin(), l.covers_up[i].end());
  }
  l.bottom = 0;
  l.top = static_cast<int>(nodes.size()) - 1;
  return l;
}

}  // namespace covlat
