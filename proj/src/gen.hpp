#pragma once

#include <cstdint>
#include <string>

#include "graph.hpp"

#include "json.hpp"

namespace graphclust {

/// Generator request; parameters are required exactly when the family uses
/// them. Round-trips through JSON.
struct GenSpec {
  std::string family;  // complete|path|cycle|star|gnp|gnp_connected|chain_clique
  int n = 0;
  int b = 0;               // chain_clique
  double p = 0.0;          // gnp, gnp_connected
  std::uint64_t seed = 0;  // gnp, gnp_connected
  int max_tries = 100;     // gnp_connected
};

GenSpec genspec_from_json(const nlohmann::json& j);
nlohmann::json genspec_to_json(const GenSpec& s);

Graph named_family(const std::string& family, int n);

/// Erdos-Renyi G(n, p). The bit stream is SplitMix64 seeded with `seed`; each
/// pair (i, j), i < j in row-major order, is an edge when the top 53 bits of
/// the next output, scaled to [0, 1), fall below p. Identical (n, p, seed)
/// triples therefore reproduce the same graph on any platform.
Graph gnp(int n, double p, std::uint64_t seed);

/// Rejection-samples gnp until connected, advancing the seed by one per
/// attempt. Throws SamplingError after max_tries failures.
Graph gnp_connected(int n, double p, std::uint64_t seed, int max_tries,
                    int* attempts = nullptr);

/// K_b on nodes 0..b-1 with a chain of n-b nodes hanging off hub node 0.
Graph chain_clique(int b, int n);

Graph generate(const GenSpec& spec);

}  // namespace graphclust
