#include "cliques.hpp"

#include <algorithm>
#include <bit>

#include "errors.hpp"

namespace graphclust {

namespace {

using Row = std::vector<std::uint64_t>;

struct BkState {
  const Graph* g;
  int words;
  std::size_t cap;
  bool pivoting;
  std::vector<std::vector<int>> out;
  std::vector<int> current;

  bool empty(const Row& r) const {
    for (auto w : r)
      if (w) return false;
    return true;
  }

  int popcount_and_row(const Row& r, int v) const {
    auto nv = g->row(v);
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(r[static_cast<std::size_t>(w)] & nv[static_cast<std::size_t>(w)]);
    return c;
  }

  void expand(Row p, Row x) {
    if (empty(p) && empty(x)) {
      if (out.size() >= cap) throw ResourceError("maximal-clique cap exceeded");
      auto clique = current;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    Row candidates = p;
    if (pivoting) {
      // Pivot u maximizing |N(u) & P|; only P \ N(u) needs expansion.
      int pivot = -1, best = -1;
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = p[static_cast<std::size_t>(w)] | x[static_cast<std::size_t>(w)];
        while (bits) {
          int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          int score = popcount_and_row(p, v);
          if (score > best) {
            best = score;
            pivot = v;
          }
        }
      }
      auto pn = g->row(pivot);
      for (int w = 0; w < words; ++w)
        candidates[static_cast<std::size_t>(w)] &= ~pn[static_cast<std::size_t>(w)];
    }
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = candidates[static_cast<std::size_t>(w)];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        auto nv = g->row(v);
        Row np(static_cast<std::size_t>(words)), nx(static_cast<std::size_t>(words));
        for (int k = 0; k < words; ++k) {
          np[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] & nv[static_cast<std::size_t>(k)];
          nx[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)] & nv[static_cast<std::size_t>(k)];
        }
        current.push_back(v);
        expand(std::move(np), std::move(nx));
        current.pop_back();
        p[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
        x[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
      }
    }
  }
};

}  // namespace

CliqueReport maximal_cliques(const Graph& g, std::size_t cap, bool pivoting) {
  BkState st{&g, g.words_per_row(), cap, pivoting, {}, {}};
  Row p(static_cast<std::size_t>(g.words_per_row()), 0);
  for (int v = 0; v < g.node_count(); ++v)
    p[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  Row x(static_cast<std::size_t>(g.words_per_row()), 0);
  if (g.node_count() > 0) st.expand(std::move(p), std::move(x));

  CliqueReport r;
  r.maximal_cliques = std::move(st.out);
  std::sort(r.maximal_cliques.begin(), r.maximal_cliques.end());
  for (const auto& c : r.maximal_cliques)
    r.clique_number = std::max(r.clique_number, static_cast<int>(c.size()));
  return r;
}

std::map<int, std::size_t> clique_size_distribution(const CliqueReport& r) {
  std::map<int, std::size_t> hist;
  for (const auto& c : r.maximal_cliques) ++hist[static_cast<int>(c.size())];
  return hist;
}

namespace {

DegreeStats stats_of(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end());
  DegreeStats s;
  s.nodes = degrees.size();
  s.min = degrees.front();
  s.max = degrees.back();
  double sum = 0;
  for (int d : degrees) sum += d;
  s.mean = sum / static_cast<double>(degrees.size());
  std::size_t h = degrees.size() / 2;
  s.median = degrees.size() % 2 ? degrees[h] : (degrees[h - 1] + degrees[h]) / 2.0;
  return s;
}

}  // namespace

CliqueDegreeReport clique_degree_stats(const Graph& g, const CliqueReport& r) {
  CliqueDegreeReport rep;
  std::map<int, std::vector<char>> members;  // order -> node membership flags
  for (const auto& c : r.maximal_cliques) {
    auto& flags = members[static_cast<int>(c.size())];
    flags.resize(static_cast<std::size_t>(g.node_count()), 0);
    for (int v : c) flags[static_cast<std::size_t>(v)] = 1;
  }
  for (auto& [order, flags] : members) {
    std::vector<int> degs;
    for (int v = 0; v < g.node_count(); ++v)
      if (flags[static_cast<std::size_t>(v)]) degs.push_back(g.degree(v));
    rep.per_order[order] = stats_of(std::move(degs));
  }
  if (g.node_count() > 0) {
    std::vector<int> degs;
    degs.reserve(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) degs.push_back(g.degree(v));
    DegreeStats all = stats_of(std::move(degs));
    rep.global_mean_degree = all.mean;
    rep.global_median_degree = all.median;
  }
  return rep;
}

nlohmann::json clique_report_to_json(const Graph& g, const CliqueReport& r, bool list,
                                     bool distribution, bool degree_stats) {
  nlohmann::json j;
  j["clique_number"] = r.clique_number;
  j["maximal_clique_count"] = r.maximal_cliques.size();
  if (list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : r.maximal_cliques) {
      nlohmann::json one = nlohmann::json::array();
      for (int v : c) one.push_back(g.label(v));
      arr.push_back(std::move(one));
    }
    j["maximal_cliques"] = std::move(arr);
  }
  if (distribution) {
    nlohmann::json hist = nlohmann::json::object();
    for (auto [k, count] : clique_size_distribution(r)) hist[std::to_string(k)] = count;
    j["size_histogram"] = std::move(hist);
  }
  if (degree_stats) {
    CliqueDegreeReport dr = clique_degree_stats(g, r);
    nlohmann::json per = nlohmann::json::object();
    for (auto& [order, s] : dr.per_order)
      per[std::to_string(order)] = {{"min", s.min},
                                    {"max", s.max},
                                    {"mean", s.mean},
                                    {"median", s.median},
                                    {"nodes", s.nodes}};
    j["degree_stats_per_order"] = std::move(per);
    j["global_mean_degree"] = dr.global_mean_degree;
    j["global_median_degree"] = dr.global_median_degree;
  }
  return j;
}

std::string clique_histogram_csv(const CliqueReport& r) {
  std::string out = "k,count\n";
  for (auto [k, count] : clique_size_distribution(r))
    out += std::to_string(k) + "," + std::to_string(count) + "\n";
  return out;
}

}  // namespace graphclust
