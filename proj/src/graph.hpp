#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "counts.hpp"

namespace graphclust {

/// Immutable simple undirected graph. Nodes carry external string labels and
/// dense ids 0..n-1; adjacency is stored as per-node bit-rows so neighborhood
/// intersections reduce to word-parallel AND + popcount.
class Graph {
 public:
  Graph() = default;

  /// Builds from (label, edge) data. Rejects self-loops; duplicate undirected
  /// edges collapse to one.
  static Graph build(std::vector<std::string> labels,
                     const std::vector<std::pair<int, int>>& edges);

  /// Parses edge-list text: one edge per line, two whitespace-separated
  /// labels, '#' starts a comment, blank lines ignored. Labels are assigned
  /// dense ids in first-appearance order.
  static Graph from_edge_list(const std::vector<std::string>& lines);
  static Graph from_edge_list_text(const std::string& text);

  int node_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_edge(int i, int j) const {
    return (row(i)[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u;
  }

  int words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_,
            static_cast<std::size_t>(words_)};
  }

  std::vector<int> neighborhood(int i) const;
  std::vector<std::pair<int, int>> edges() const;

  /// Subgraph induced by `nodes` (dense ids); labels carry over. Realizes the
  /// neighborhood subgraphs g_{-i} and (g_{-i})_{-j}.
  Graph induced_subgraph(std::span<const int> nodes) const;

  bool is_connected() const;

  /// Writer: lexicographically smaller label first on each line, lines sorted.
  std::string to_edge_list_text() const;

 private:
  void check_node(int i) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degrees_;
};

/// 2m / n(n-1), exact. Requires n >= 2.
Rational density(const Graph& g);

// Exact closed-walk counts shared by the analytic census formulas.
struct WalkStats {
  std::vector<Count> g3_diag;  // (g^3)_ii per node
  Count tr_g3 = 0;
  Count sum_offdiag_g4 = 0;  // sum over i != j of (g^4)_ij
};

/// Closed-walk counts via neighborhood intersection by default; `dense` uses
/// explicit integer matrix powers instead. Both agree bit-exactly.
WalkStats walk_stats(const Graph& g, bool dense = false);

}  // namespace graphclust
