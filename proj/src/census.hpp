#pragma once

#include <string>

#include "graph.hpp"

#include "json.hpp"

namespace graphclust {

/// Exact nested-subgraph counts: the three connected 3-node shapes' closure
/// (3-star, triangle), the 4-node spanning trees plus tadpole and 4-clique,
/// and the 5-node spanning trees plus 5-clique. "Nested" means every
/// edge-subset isomorphic to the shape counts once.
struct MotifCounts {
  Count m3_3 = 0;     // connected triple (3-star)
  Count m7_3 = 0;     // triangle
  Count m11_4 = 0;    // 4-star
  Count m13_4 = 0;    // 4-path
  Count m15_4 = 0;    // tadpole
  Count m63_4 = 0;    // 4-clique
  Count m75_5 = 0;    // 5-star
  Count m77_5 = 0;    // 5-arrow
  Count m86_5 = 0;    // 5-path
  Count m1023_5 = 0;  // 5-clique
  bool tier3 = false;
  bool tier4 = false;
  bool tier5 = false;
};

MotifCounts census3(const Graph& g);
MotifCounts census4(const Graph& g);
MotifCounts census5(const Graph& g);

/// All ten counts; walk statistics are computed exactly once.
MotifCounts full_census(const Graph& g);

nlohmann::json census_to_json(const MotifCounts& c);
std::string census_to_csv(const MotifCounts& c);

}  // namespace graphclust
