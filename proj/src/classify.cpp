#include "covlat/classify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace covlat {

UniformOutcome uniform_analysis(const Covering& c, const MatroidOracle& m) {
  const GroundSet& g = c.ground();
  int n = g.size();

  // simplified coverings are exactly those where every singleton is closed
  for (int e = 0; e < n; ++e) {
    Mask cl = m.closure(bit(e));
    if (cl != bit(e)) {
      int other = std::countr_zero(cl & ~bit(e));
      throw Error("NotSimplified", "elements " + g.label(e) + " and " + g.label(other) +
                                       " collapse under the incidence relation");
    }
  }

  for (int e = 0; e < n; ++e) {
    if (popcount(c.element_incidence(e)) >= 3) {
      return UniformFailure{"element " + g.label(e) + " meets three or more blocks"};
    }
  }

  std::vector<Mask> classes;
  for (int x = 0; x < n; ++x) {
    if (popcount(c.element_incidence(x)) != 2) continue;
    Mask e_class = 0;
    for (int y = 0; y < n; ++y) {
      if (subset_of(c.element_incidence(y), c.element_incidence(x))) e_class |= bit(y);
    }
    if (std::find(classes.begin(), classes.end(), e_class) == classes.end()) {
      classes.push_back(e_class);
    }
  }
  std::sort(classes.begin(), classes.end(), set_lex_less);

  UniformAnalysis out;
  out.e_classes = classes;

  auto pairs = [](std::int64_t v) { return v * (v - 1) / 2; };

  if (classes.empty()) {
    out.degenerate = true;
    out.k = n;
    out.class_size = 1;
    out.cov_atom = n > 0 ? n - 1 : 0;
    out.predicted_level2 = pairs(n);
    return out;
  }

  Mask covered = 0;
  for (Mask cl : classes) {
    if ((covered & cl) != 0) {
      return UniformFailure{"E-sets overlap without coinciding"};
    }
    covered |= cl;
  }
  if (covered != g.full_mask()) {
    int missing = std::countr_zero(g.full_mask() & ~covered);
    return UniformFailure{"element " + g.label(missing) + " lies in no E-set"};
  }

  int size = popcount(classes.front());
  for (Mask cl : classes) {
    if (popcount(cl) != size) return UniformFailure{"E-classes differ in size"};
  }

  out.k = static_cast<int>(classes.size());
  out.class_size = size;
  if (size == 1) {
    // every pair of elements is closed
    out.cov_atom = n - 1;
    out.predicted_level2 = pairs(n);
  } else {
    out.cov_atom = n - size + 1;
    out.predicted_level2 = pairs(n) - (pairs(size) - 1) * out.k;
  }
  return out;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::partition: return "partition";
    case Family::subspace: return "subspace";
    case Family::dowling: return "dowling";
  }
  return "?";
}

namespace {

struct ClassifyContext {
  Covering simplified;
  MatroidOracle oracle;
  int m;
  int top_rank;
  std::vector<std::int64_t> profile;
  UniformOutcome uniform;

  explicit ClassifyContext(const Covering& c)
      : simplified(simplify(c).covering),
        oracle(simplified),
        m(simplified.ground().size()),
        top_rank(oracle.rank(simplified.ground().full_mask())),
        profile(level_profile(build_lattice(oracle)).counts),
        uniform(uniform_analysis(simplified, oracle)) {}
};

ClassificationReport base_report(Family f, const ClassifyContext& ctx) {
  ClassificationReport r;
  r.family = f;
  r.m = ctx.m;
  r.level_profile = ctx.profile;
  if (const auto* ua = std::get_if<UniformAnalysis>(&ctx.uniform)) {
    r.k = ua->k;
    r.class_size = ua->class_size;
  }
  return r;
}

// The single rank-2 branch shared by all three families: one E-class covering
// the whole ground set.
bool rank2_single_class(const ClassifyContext& ctx) {
  const auto* ua = std::get_if<UniformAnalysis>(&ctx.uniform);
  return ua != nullptr && !ua->degenerate && ua->k == 1;
}

}  // namespace

ClassificationReport classify_partition(const Covering& c) {
  ClassifyContext ctx(c);
  ClassificationReport r = base_report(Family::partition, ctx);
  if (ctx.m == 0) {
    r.verdict = true;
    r.n = 1;
    r.branch = "empty ground set";
  } else if (ctx.top_rank == 1) {
    r.verdict = true;
    r.n = 2;
    r.branch = "two levels";
  } else if (rank2_single_class(ctx) && ctx.m == 3) {
    r.verdict = true;
    r.n = 3;
    r.branch = "rank 2, three atoms, one class";
  } else {
    r.branch = "no partition lattice matches";
  }
  return r;
}

ClassificationReport classify_subspace(const Covering& c) {
  ClassifyContext ctx(c);
  ClassificationReport r = base_report(Family::subspace, ctx);
  if (ctx.m == 0) {
    r.verdict = true;
    r.n = 0;
    r.branch = "empty ground set";
  } else if (ctx.top_rank == 1) {
    r.verdict = true;
    r.n = 1;
    r.branch = "two levels";
  } else if (rank2_single_class(ctx) && ctx.m >= 3 && is_prime_power(ctx.m - 1)) {
    r.verdict = true;
    r.n = 2;
    r.q = ctx.m - 1;
    r.branch = "rank 2, q+1 atoms, one class";
  } else {
    r.branch = "no subspace lattice matches";
  }
  return r;
}

ClassificationReport classify_dowling(const Covering& c) {
  ClassifyContext ctx(c);
  ClassificationReport r = base_report(Family::dowling, ctx);
  if (ctx.m == 0) {
    r.verdict = true;
    r.n = 0;
    r.branch = "empty ground set";
  } else if (ctx.top_rank == 1) {
    r.verdict = true;
    r.n = 1;
    r.branch = "two levels";
  } else if (rank2_single_class(ctx) && ctx.m >= 3) {
    r.verdict = true;
    r.n = 2;
    r.group_order = ctx.m - 2;
    r.branch = "rank 2, |G|+2 atoms, one class";
  } else {
    r.branch = "no Dowling lattice matches";
  }
  return r;
}

namespace {

std::vector<std::vector<Mask>> enumerate_block_families(int n, int max_blocks,
                                                        bool canonical_only) {
  Mask full = n == 0 ? 0 : (bit(n) - 1);
  std::vector<std::vector<Mask>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }

  // per-permutation mask relabeling tables, for canonical filtering
  std::vector<std::vector<Mask>> perm_tables;
  if (canonical_only) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      std::vector<Mask> table(bit(n), 0);
      for (Mask m = 0; m < bit(n); ++m) {
        Mask image = 0;
        for_each_element(m, [&](int e) { image |= bit(perm[e]); });
        table[m] = image;
      }
      perm_tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  auto is_canonical = [&](const std::vector<Mask>& blocks) {
    std::vector<Mask> mapped(blocks.size());
    for (const auto& table : perm_tables) {
      for (std::size_t i = 0; i < blocks.size(); ++i) mapped[i] = table[blocks[i]];
      std::sort(mapped.begin(), mapped.end());
      if (std::lexicographical_compare(mapped.begin(), mapped.end(), blocks.begin(),
                                       blocks.end())) {
        return false;
      }
    }
    return true;
  };

  std::vector<Mask> blocks;
  auto recurse = [&](auto&& self, Mask least, Mask covered) -> void {
    if (covered == full && !blocks.empty()) {
      if (!canonical_only || is_canonical(blocks)) out.push_back(blocks);
    }
    if (static_cast<int>(blocks.size()) == max_blocks) return;
    for (Mask b = least; b < bit(n); ++b) {
      blocks.push_back(b);
      self(self, b, covered | b);
      blocks.pop_back();
    }
  };
  recurse(recurse, 1, 0);
  return out;
}

}  // namespace

std::vector<std::vector<Mask>> enumerate_coverings_canonical(int n, int max_blocks) {
  return enumerate_block_families(n, max_blocks, true);
}

std::vector<std::vector<Mask>> enumerate_coverings_all(int n, int max_blocks) {
  return enumerate_block_families(n, max_blocks, false);
}

Covering covering_from_block_masks(int n, const std::vector<Mask>& blocks) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return covering_from_masks(GroundSet(std::move(labels)), blocks);
}

std::vector<Covering> search_isomorphic_coverings(const GradedLattice& target,
                                                  const SearchOptions& opts) {
  if (opts.max_elements < 0 || opts.max_elements > 6 || opts.max_blocks < 0 ||
      opts.max_blocks > 4) {
    throw Error("BudgetExceeded", "search limited to 6 elements and 4 blocks");
  }

  struct Candidate {
    int n;
    std::vector<Mask> blocks;
  };
  std::vector<Candidate> candidates;
  for (int n = 0; n <= opts.max_elements; ++n) {
    for (auto& blocks : enumerate_coverings_canonical(n, opts.max_blocks)) {
      candidates.push_back({n, std::move(blocks)});
    }
  }

  LevelProfile target_profile = level_profile(target);
  IsoOptions iso_opts{opts.node_budget};

  std::vector<char> matches(candidates.size(), 0);
  int threads = opts.threads > 0 ? opts.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    try {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= candidates.size()) break;
        Covering c = covering_from_block_masks(candidates[i].n, candidates[i].blocks);
        FlatLattice lattice = build_lattice(MatroidOracle(c));
        if (lattice.size() != target.size()) continue;
        GradedLattice graph = lattice.graph();
        if (level_profile(graph) != target_profile) continue;
        if (lattice_isomorphic(graph, target, iso_opts).has_value()) matches[i] = 1;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      next.store(candidates.size());
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  std::vector<Covering> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (matches[i]) {
      out.push_back(covering_from_block_masks(candidates[i].n, candidates[i].blocks));
    }
  }
  return out;
}

}  // namespace covlat
