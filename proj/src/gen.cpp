#include "gen.hpp"

#include "errors.hpp"

namespace graphclust {

namespace {

// SplitMix64 (Steele, Lea, Flood 2014); fixed here as the portable edge
// stream for seeded generation.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double next_unit() {
    // Top 53 bits -> uniform double in [0, 1).
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

Graph named_family(const std::string& family, int n) {
  std::vector<std::pair<int, int>> edges;
  if (family == "complete") {
    if (n < 1) throw ValidationError("complete graph requires n >= 1");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  } else if (family == "path") {
    if (n < 1) throw ValidationError("path requires n >= 1");
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  } else if (family == "cycle") {
    if (n < 3) throw ValidationError("cycle requires n >= 3");
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
  } else if (family == "star") {
    if (n < 2) throw ValidationError("star requires n >= 2");
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  } else {
    throw ValidationError("unknown graph family '" + family + "'");
  }
  return Graph::build(numeric_labels(n), edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ValidationError("G(n,p) requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0,1]");
  SplitMix64 rng{seed};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) edges.emplace_back(i, j);
  return Graph::build(numeric_labels(n), edges);
}

Graph gnp_connected(int n, double p, std::uint64_t seed, int max_tries, int* attempts) {
  if (max_tries < 1) throw ValidationError("max_tries must be >= 1");
  for (int t = 0; t < max_tries; ++t) {
    Graph g = gnp(n, p, seed + static_cast<std::uint64_t>(t));
    if (g.is_connected()) {
      if (attempts) *attempts = t + 1;
      return g;
    }
  }
  throw SamplingError("no connected G(" + std::to_string(n) + "," + std::to_string(p) +
                      ") after " + std::to_string(max_tries) + " tries");
}

Graph chain_clique(int b, int n) {
  if (b < 3 || n < b) throw ValidationError("chain_clique requires n >= b >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) edges.emplace_back(i, j);
  if (n > b) edges.emplace_back(0, b);
  for (int i = b; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(numeric_labels(n), edges);
}

Graph generate(const GenSpec& s) {
  if (s.family == "gnp") return gnp(s.n, s.p, s.seed);
  if (s.family == "gnp_connected") return gnp_connected(s.n, s.p, s.seed, s.max_tries);
  if (s.family == "chain_clique") return chain_clique(s.b, s.n);
  return named_family(s.family, s.n);
}

GenSpec genspec_from_json(const nlohmann::json& j) {
  GenSpec s;
  s.family = j.at("family").get<std::string>();
  s.n = j.at("n").get<int>();
  if (j.contains("b")) s.b = j["b"].get<int>();
  if (j.contains("p")) s.p = j["p"].get<double>();
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("max_tries")) s.max_tries = j["max_tries"].get<int>();
  return s;
}

nlohmann::json genspec_to_json(const GenSpec& s) {
  nlohmann::json j{{"family", s.family}, {"n", s.n}};
  if (s.family == "chain_clique") j["b"] = s.b;
  if (s.family == "gnp" || s.family == "gnp_connected") {
    j["p"] = s.p;
    j["seed"] = s.seed;
  }
  if (s.family == "gnp_connected") j["max_tries"] = s.max_tries;
  return j;
}

}  // namespace graphclust
