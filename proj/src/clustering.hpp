#pragma once

#include <string>

#include "census.hpp"
#include "graph.hpp"

#include "json.hpp"

namespace graphclust {

/// C(b) = b^(b-2) * (#b-cliques) / (#b-spanning-trees), exact. The decimal
/// rendering is derived from the rational, never primary.
struct ClusteringReport {
  int b = 0;
  Count clique_count = 0;
  Count spanning_tree_count = 0;
  Count cayley_factor = 0;  // b^(b-2)
  Rational value;
  double value_f64 = 0.0;
};

ClusteringReport make_clustering_report(int b, Count cliques, Count spanning_trees);

/// Analytic coefficients from the census formulas. Throw
/// UndefinedCoefficientError when the denominator count is zero.
ClusteringReport c3(const Graph& g);
ClusteringReport c4(const Graph& g);
ClusteringReport c5(const Graph& g);

/// Analytic counts for b in {3,4,5}; brute-force subset counts otherwise
/// (O(n^b) — callers should expect a cost warning at the CLI for b > 5).
ClusteringReport c_general(const Graph& g, int b);

// Erdos-Renyi expectation p^((b-1)(b-2)/2).
struct GnpExpectation {
  int b = 0;
  double p = 0.0;
  int exponent = 0;  // C(b-1, 2)
  double value = 0.0;
};

GnpExpectation expected_c_gnp(int b, double p);

nlohmann::json clustering_to_json(const ClusteringReport& r);

}  // namespace graphclust
