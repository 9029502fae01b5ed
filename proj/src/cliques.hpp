#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

#include "json.hpp"

namespace graphclust {

struct CliqueReport {
  // Canonical order: members sorted, cliques sorted lexicographically.
  std::vector<std::vector<int>> maximal_cliques;
  int clique_number = 0;
};

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// All maximal cliques via Bron-Kerbosch. The pivot is the vertex of P u X
/// with the most neighbors in P (Tomita); `pivoting` off gives the plain
/// variant for cross-checks. Throws ResourceError past `cap` cliques.
CliqueReport maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap,
                             bool pivoting = true);

/// Histogram: clique order k -> number of maximal k-cliques.
std::map<int, std::size_t> clique_size_distribution(const CliqueReport& r);

struct DegreeStats {
  int min = 0;
  int max = 0;
  double mean = 0.0;
  double median = 0.0;
  std::size_t nodes = 0;  // distinct members
};

struct CliqueDegreeReport {
  std::map<int, DegreeStats> per_order;  // over distinct nodes in maximal k-cliques
  double global_mean_degree = 0.0;
  double global_median_degree = 0.0;
};

CliqueDegreeReport clique_degree_stats(const Graph& g, const CliqueReport& r);

nlohmann::json clique_report_to_json(const Graph& g, const CliqueReport& r, bool list,
                                     bool distribution, bool degree_stats);
std::string clique_histogram_csv(const CliqueReport& r);

}  // namespace graphclust
