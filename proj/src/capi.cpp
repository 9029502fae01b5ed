#include "graphclust.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "analysis.hpp"
#include "census.hpp"
#include "cliques.hpp"
#include "clustering.hpp"
#include "errors.hpp"
#include "gen.hpp"
#include "graph.hpp"
#include "oracle.hpp"

struct gc_graph {
  graphclust::Graph g;
};

namespace {

thread_local std::string t_last_error;

gc_status fail(gc_status code, const std::string& msg) {
  t_last_error = msg;
  return code;
}

// Runs fn, translating the core exception taxonomy to status codes.
gc_status guarded(auto&& fn) {
  using namespace graphclust;
  try {
    fn();
    return GC_OK;
  } catch (const UndefinedCoefficientError& e) {
    return fail(GC_ERR_UNDEFINED, e.what());
  } catch (const ResourceError& e) {
    return fail(GC_ERR_RESOURCE, e.what());
  } catch (const OverflowError& e) {
    return fail(GC_ERR_RESOURCE, e.what());
  } catch (const IoError& e) {
    return fail(GC_ERR_IO, e.what());
  } catch (const ValidationError& e) {
    return fail(GC_ERR_VALIDATION, e.what());
  } catch (const std::exception& e) {
    return fail(GC_ERR_VALIDATION, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* gc_last_error(void) { return t_last_error.c_str(); }

void gc_string_free(char* s) { std::free(s); }

gc_status gc_graph_from_edge_list(const char* text, gc_graph** out) {
  return guarded([&] {
    if (!text || !out) throw graphclust::ValidationError("null argument");
    *out = new gc_graph{graphclust::Graph::from_edge_list_text(text)};
  });
}

gc_status gc_graph_from_file(const char* path, gc_graph** out) {
  return guarded([&] {
    if (!path || !out) throw graphclust::ValidationError("null argument");
    std::ifstream in(path);
    if (!in) throw graphclust::IoError(std::string("cannot open ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    *out = new gc_graph{graphclust::Graph::from_edge_list_text(buf.str())};
  });
}

gc_status gc_graph_generate(const char* spec_json, gc_graph** out) {
  return guarded([&] {
    if (!spec_json || !out) throw graphclust::ValidationError("null argument");
    nlohmann::json j = nlohmann::json::parse(spec_json);
    *out = new gc_graph{graphclust::generate(graphclust::genspec_from_json(j))};
  });
}

void gc_graph_free(gc_graph* g) { delete g; }

int gc_graph_node_count(const gc_graph* g) { return g ? g->g.node_count() : 0; }
int gc_graph_edge_count(const gc_graph* g) { return g ? g->g.edge_count() : 0; }
int gc_graph_is_connected(const gc_graph* g) { return g && g->g.is_connected() ? 1 : 0; }

gc_status gc_graph_to_edge_list(const gc_graph* g, char** out_text) {
  return guarded([&] {
    if (!g || !out_text) throw graphclust::ValidationError("null argument");
    *out_text = dup_string(g->g.to_edge_list_text());
  });
}

gc_status gc_census_json(const gc_graph* g, char** out) {
  return guarded([&] {
    if (!g || !out) throw graphclust::ValidationError("null argument");
    *out = dup_string(graphclust::census_to_json(graphclust::full_census(g->g)).dump());
  });
}

gc_status gc_census_csv(const gc_graph* g, char** out) {
  return guarded([&] {
    if (!g || !out) throw graphclust::ValidationError("null argument");
    *out = dup_string(graphclust::census_to_csv(graphclust::full_census(g->g)));
  });
}

gc_status gc_clustering_json(const gc_graph* g, int b, int use_naive, char** out) {
  return guarded([&] {
    if (!g || !out) throw graphclust::ValidationError("null argument");
    graphclust::ClusteringReport r =
        use_naive ? graphclust::c_naive(g->g, b) : graphclust::c_general(g->g, b);
    *out = dup_string(graphclust::clustering_to_json(r).dump());
  });
}

gc_status gc_cliques_json(const gc_graph* g, int list, int distribution, int degree_stats,
                          size_t max_cliques, char** out) {
  return guarded([&] {
    if (!g || !out) throw graphclust::ValidationError("null argument");
    std::size_t cap = max_cliques ? max_cliques : graphclust::kDefaultCliqueCap;
    auto report = graphclust::maximal_cliques(g->g, cap);
    *out = dup_string(
        graphclust::clique_report_to_json(g->g, report, list != 0, distribution != 0,
                                          degree_stats != 0)
            .dump());
  });
}

gc_status gc_cliques_histogram_csv(const gc_graph* g, size_t max_cliques, char** out) {
  return guarded([&] {
    if (!g || !out) throw graphclust::ValidationError("null argument");
    std::size_t cap = max_cliques ? max_cliques : graphclust::kDefaultCliqueCap;
    *out = dup_string(graphclust::clique_histogram_csv(graphclust::maximal_cliques(g->g, cap)));
  });
}

gc_status gc_verify_json(const gc_graph* g, int b, char** out) {
  return guarded([&] {
    if (!g || !out) throw graphclust::ValidationError("null argument");
    *out = dup_string(graphclust::verify(g->g, b).dump());
  });
}

gc_status gc_series_json(const char* directory, int corr, int permutations, char** out) {
  return guarded([&] {
    if (!directory || !out) throw graphclust::ValidationError("null argument");
    auto table = graphclust::series_scan(directory);
    nlohmann::json j = graphclust::series_to_json(table);
    if (corr) {
      int perms = permutations > 0 ? permutations : graphclust::kDefaultPermutations;
      j["correlation"] = graphclust::corr_to_json(graphclust::pearson_matrix(table, perms));
    }
    *out = dup_string(j.dump());
  });
}

gc_status gc_bench_csv(const int* sizes, size_t n_sizes, double p, int reps,
                       const char* statistics_csv, uint64_t seed, char** out) {
  return guarded([&] {
    if (!sizes || !n_sizes || !statistics_csv || !out)
      throw graphclust::ValidationError("null argument");
    std::vector<int> stats;
    std::stringstream ss(statistics_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "c3" || tok == "C3") stats.push_back(3);
      else if (tok == "c4" || tok == "C4") stats.push_back(4);
      else if (tok == "c5" || tok == "C5") stats.push_back(5);
      else throw graphclust::ValidationError("unknown statistic '" + tok + "'");
    }
    auto records = graphclust::bench_run(std::span<const int>(sizes, n_sizes), p, reps,
                                         stats, seed);
    *out = dup_string(graphclust::bench_csv(records));
  });
}

gc_status gc_expected_c_gnp_json(int b, double p, char** out) {
  return guarded([&] {
    if (!out) throw graphclust::ValidationError("null argument");
    auto e = graphclust::expected_c_gnp(b, p);
    *out = dup_string(nlohmann::json{{"b", e.b},
                                     {"p", e.p},
                                     {"exponent", e.exponent},
                                     {"value", e.value}}
                          .dump());
  });
}

}  // extern "C"
