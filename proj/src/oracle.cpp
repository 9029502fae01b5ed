#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "errors.hpp"

namespace graphclust {

namespace {

int pair_bit_count(int b) { return b * (b - 1) / 2; }

// Position of pair (i,j), i<j, in the row-by-row upper-triangle reading.
int pair_index(int b, int i, int j) {
  // pairs (0,1)..(0,b-1) come first, then (1,2)..
  return i * b - i * (i + 1) / 2 + (j - i - 1);
}

unsigned pair_mask_bit(int b, int i, int j) {
  int nbits = pair_bit_count(b);
  return 1u << (nbits - 1 - pair_index(b, i, j));
}

// Minimal mask over all b! node permutations.
unsigned canonicalize(int b, unsigned mask) {
  std::array<int, 5> perm{};
  std::iota(perm.begin(), perm.begin() + b, 0);
  unsigned best = ~0u;
  do {
    unsigned permuted = 0;
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j)
        if (mask & pair_mask_bit(b, i, j)) {
          int pi = perm[static_cast<std::size_t>(i)];
          int pj = perm[static_cast<std::size_t>(j)];
          permuted |= pair_mask_bit(b, std::min(pi, pj), std::max(pi, pj));
        }
    best = std::min(best, permuted);
  } while (std::next_permutation(perm.begin(), perm.begin() + b));
  return best;
}

const std::vector<unsigned>& canonical_table(int b) {
  static const std::vector<unsigned> tables[3] = {
      [] {
        std::vector<unsigned> t(1u << pair_bit_count(3));
        for (unsigned m = 0; m < t.size(); ++m) t[m] = canonicalize(3, m);
        return t;
      }(),
      [] {
        std::vector<unsigned> t(1u << pair_bit_count(4));
        for (unsigned m = 0; m < t.size(); ++m) t[m] = canonicalize(4, m);
        return t;
      }(),
      [] {
        std::vector<unsigned> t(1u << pair_bit_count(5));
        for (unsigned m = 0; m < t.size(); ++m) t[m] = canonicalize(5, m);
        return t;
      }(),
  };
  return tables[b - 3];
}

// Calls fn on every size-b node subset, ascending ids.
void for_each_subset(int n, int b, auto&& fn) {
  if (b > n) return;
  std::vector<int> idx(static_cast<std::size_t>(b));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(std::span<const int>(idx));
    int i = b - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - b + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < b; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

unsigned induced_mask(const Graph& g, std::span<const int> nodes) {
  int b = static_cast<int>(nodes.size());
  unsigned mask = 0;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (g.has_edge(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]))
        mask |= pair_mask_bit(b, i, j);
  return mask;
}

// Fraction-free (Bareiss) determinant of an integer matrix; exact, with
// row swaps for zero pivots.
Count bareiss_det(std::vector<std::vector<Count>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Count prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Count num = checked_sub(
            checked_mul(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]),
            checked_mul(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                        a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
    }
    prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

// Spanning trees of the subgraph induced by `nodes`, via the principal minor
// of its Laplacian (last row/column deleted).
Count induced_tree_count(const Graph& g, std::span<const int> nodes) {
  const int b = static_cast<int>(nodes.size());
  if (b == 1) return 1;
  std::vector<std::vector<Count>> lap(static_cast<std::size_t>(b - 1),
                                      std::vector<Count>(static_cast<std::size_t>(b - 1), 0));
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) {
      if (!g.has_edge(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]))
        continue;
      if (i < b - 1) ++lap[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      if (j < b - 1) {
        ++lap[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
        --lap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        --lap[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      }
    }
  return bareiss_det(std::move(lap));
}

void check_motif_order(int b) {
  if (b < 3 || b > 5) throw ValidationError("motif order must be 3, 4, or 5");
}

}  // namespace

SmallAdjacency SmallAdjacency::from_edges(int b, const std::vector<std::pair<int, int>>& edges) {
  check_motif_order(b);
  SmallAdjacency adj{b, 0};
  for (auto [i, j] : edges) {
    if (i == j || i < 0 || j < 0 || i >= b || j >= b)
      throw ValidationError("bad motif edge");
    adj.mask |= pair_mask_bit(b, std::min(i, j), std::max(i, j));
  }
  return adj;
}

bool SmallAdjacency::has_edge(int i, int j) const {
  if (i == j) return false;
  return mask & pair_mask_bit(b, std::min(i, j), std::max(i, j));
}

MotifId canonical_motif_id(const SmallAdjacency& adj) {
  check_motif_order(adj.b);
  return MotifId{adj.b, static_cast<int>(canonical_table(adj.b)[adj.mask])};
}

Count brute_motif_count(const Graph& g, MotifId id) {
  check_motif_order(id.b);
  auto census = brute_census_tier(g, id.b);
  auto it = census.find(id.a);
  return it == census.end() ? 0 : it->second;
}

std::map<int, Count> brute_census_tier(const Graph& g, int b) {
  check_motif_order(b);
  const auto& canon = canonical_table(b);
  std::map<int, Count> tally;
  // Every sub-edge-set of every b-subset is classified by canonical id.
  // Shapes that do not touch all b nodes pick up an isolated vertex and so
  // never collide with a spanning motif; only spanning ids are meaningful
  // totals here.
  for_each_subset(g.node_count(), b, [&](std::span<const int> nodes) {
    unsigned edge_mask = induced_mask(g, nodes);
    unsigned sub = edge_mask;
    while (true) {
      ++tally[static_cast<int>(canon[sub])];
      if (sub == 0) break;
      sub = (sub - 1) & edge_mask;
    }
  });
  return tally;
}

Count count_b_cliques(const Graph& g, int b) {
  if (b < 3 || b > g.node_count())
    throw ValidationError("clique count requires 3 <= b <= n");
  Count total = 0;
  for_each_subset(g.node_count(), b, [&](std::span<const int> nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j)
        if (!g.has_edge(nodes[i], nodes[j])) return;
    total = checked_add(total, 1);
  });
  return total;
}

Count count_b_spanning_trees(const Graph& g, int b) {
  if (b < 3 || b > g.node_count())
    throw ValidationError("spanning-tree count requires 3 <= b <= n");
  Count total = 0;
  for_each_subset(g.node_count(), b, [&](std::span<const int> nodes) {
    total = checked_add(total, induced_tree_count(g, nodes));
  });
  return total;
}

Count spanning_tree_count(const Graph& g) {
  if (g.node_count() < 1) throw ValidationError("spanning trees need at least one node");
  std::vector<int> all(static_cast<std::size_t>(g.node_count()));
  std::iota(all.begin(), all.end(), 0);
  return induced_tree_count(g, all);
}

ClusteringReport c_naive(const Graph& g, int b) {
  if (b < 3 || b > g.node_count())
    throw ValidationError("C(b) requires 3 <= b <= n");
  return make_clustering_report(b, count_b_cliques(g, b), count_b_spanning_trees(g, b));
}

}  // namespace graphclust
