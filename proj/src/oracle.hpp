#pragma once

#include <map>
#include <utility>
#include <vector>

#include "clustering.hpp"
#include "graph.hpp"

namespace graphclust {

/// Canonical motif label: b nodes, id a = the minimal decimal value of the
/// upper-triangle bits (row-by-row, first bit most significant) over all b!
/// node permutations.
struct MotifId {
  int b = 0;
  int a = 0;

  friend auto operator<=>(const MotifId&, const MotifId&) = default;
};

/// Tiny graph for motif identification: upper-triangle bitmask, pair (i,j)
/// with i<j at position counting (0,1),(0,2),...,(b-2,b-1) from the most
/// significant bit.
struct SmallAdjacency {
  int b = 0;
  unsigned mask = 0;

  static SmallAdjacency from_edges(int b, const std::vector<std::pair<int, int>>& edges);
  bool has_edge(int i, int j) const;
};

MotifId canonical_motif_id(const SmallAdjacency& adj);

/// Subset-enumeration reference count of nested occurrences: every
/// edge-subset isomorphic to the motif counts once. Independent of the
/// analytic census path.
Count brute_motif_count(const Graph& g, MotifId id);

/// All motif counts for one tier b in a single subset sweep, keyed by
/// canonical id.
std::map<int, Count> brute_census_tier(const Graph& g, int b);

Count count_b_cliques(const Graph& g, int b);

/// Tree subgraphs on exactly b nodes: per b-subset, spanning trees of the
/// induced subgraph via the matrix-tree determinant.
Count count_b_spanning_trees(const Graph& g, int b);

/// Matrix-tree theorem with fraction-free integer elimination; 0 when
/// disconnected.
Count spanning_tree_count(const Graph& g);

/// Eq.-by-definition evaluation of the clustering coefficient from the two
/// brute counts; the naive nested-loop baseline for benchmarks.
ClusteringReport c_naive(const Graph& g, int b);

}  // namespace graphclust
