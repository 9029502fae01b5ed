#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "graphclust.h"

namespace {

std::string take(char* raw) {
  std::string s(raw);
  gc_string_free(raw);
  return s;
}

}  // namespace

TEST_CASE("graph construction through the C API") {
  gc_graph* g = nullptr;
  REQUIRE(gc_graph_from_edge_list("a b\nb c\nc a\n", &g) == GC_OK);
  CHECK(gc_graph_node_count(g) == 3);
  CHECK(gc_graph_edge_count(g) == 3);
  CHECK(gc_graph_is_connected(g) == 1);

  char* text = nullptr;
  REQUIRE(gc_graph_to_edge_list(g, &text) == GC_OK);
  CHECK(take(text) == "a b\na c\nb c\n");
  gc_graph_free(g);

  gc_graph* bad = nullptr;
  CHECK(gc_graph_from_edge_list("x x\n", &bad) == GC_ERR_VALIDATION);
  CHECK(std::string(gc_last_error()).find("self-loop") != std::string::npos);
  CHECK(bad == nullptr);
}

TEST_CASE("generation and census") {
  gc_graph* g = nullptr;
  REQUIRE(gc_graph_generate(R"({"family":"complete","n":5})", &g) == GC_OK);
  char* raw = nullptr;
  REQUIRE(gc_census_json(g, &raw) == GC_OK);
  nlohmann::json census = nlohmann::json::parse(take(raw));
  CHECK(census["M3_3"] == 30);
  CHECK(census["M1023_5"] == 1);

  REQUIRE(gc_census_csv(g, &raw) == GC_OK);
  CHECK(take(raw).rfind("M3_3,M7_3,", 0) == 0);
  gc_graph_free(g);

  gc_graph* bad = nullptr;
  CHECK(gc_graph_generate(R"({"family":"dodecahedron","n":20})", &bad) == GC_ERR_VALIDATION);
}

TEST_CASE("clustering and verify") {
  gc_graph* g = nullptr;
  REQUIRE(gc_graph_generate(R"({"family":"chain_clique","n":10,"b":4})", &g) == GC_OK);

  char* raw = nullptr;
  REQUIRE(gc_clustering_json(g, 4, 0, &raw) == GC_OK);
  nlohmann::json fast = nlohmann::json::parse(take(raw));
  CHECK(fast["value_num"] == 1);
  CHECK(fast["value_den"] == 2);

  REQUIRE(gc_clustering_json(g, 4, 1, &raw) == GC_OK);
  nlohmann::json naive = nlohmann::json::parse(take(raw));
  CHECK(naive["value_num"] == fast["value_num"]);

  REQUIRE(gc_verify_json(g, 4, &raw) == GC_OK);
  CHECK(nlohmann::json::parse(take(raw))["match"] == true);
  gc_graph_free(g);

  // zero denominator -> dedicated status
  gc_graph* matching = nullptr;
  REQUIRE(gc_graph_from_edge_list("a b\nc d\n", &matching) == GC_OK);
  CHECK(gc_clustering_json(matching, 3, 0, &raw) == GC_ERR_UNDEFINED);
  gc_graph_free(matching);
}

TEST_CASE("cliques") {
  gc_graph* g = nullptr;
  REQUIRE(gc_graph_generate(R"({"family":"chain_clique","n":8,"b":4})", &g) == GC_OK);
  char* raw = nullptr;
  REQUIRE(gc_cliques_json(g, 1, 1, 1, 0, &raw) == GC_OK);
  nlohmann::json j = nlohmann::json::parse(take(raw));
  CHECK(j["clique_number"] == 4);
  CHECK(j["size_histogram"]["2"] == 4);
  CHECK(j["size_histogram"]["4"] == 1);
  CHECK(j["degree_stats_per_order"]["4"]["mean"] == doctest::Approx(3.25));

  REQUIRE(gc_cliques_histogram_csv(g, 0, &raw) == GC_OK);
  CHECK(take(raw) == "k,count\n2,4\n4,1\n");

  CHECK(gc_cliques_json(g, 0, 0, 0, /*max_cliques=*/2, &raw) == GC_ERR_RESOURCE);
  gc_graph_free(g);
}

TEST_CASE("series and bench") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gc_capi_series";
  fs::create_directories(dir);
  for (int n : {6, 7, 8, 9}) {
    gc_graph* g = nullptr;
    std::string spec = std::string(R"({"family":"chain_clique","n":)") + std::to_string(n) +
                       R"(,"b":4})";
    REQUIRE(gc_graph_generate(spec.c_str(), &g) == GC_OK);
    char* text = nullptr;
    REQUIRE(gc_graph_to_edge_list(g, &text) == GC_OK);
    std::ofstream(dir / ("n" + std::to_string(n) + ".edges")) << take(text);
    gc_graph_free(g);
  }
  char* raw = nullptr;
  REQUIRE(gc_series_json(dir.string().c_str(), 1, 200, &raw) == GC_OK);
  nlohmann::json series = nlohmann::json::parse(take(raw));
  CHECK(series["rows"].size() == 4);
  CHECK(series["rows"][0]["C3"]["defined"] == true);
  CHECK(series.contains("correlation"));
  fs::remove_all(dir);

  CHECK(gc_series_json((dir / "gone").string().c_str(), 0, 0, &raw) == GC_ERR_IO);

  int sizes[] = {10};
  REQUIRE(gc_bench_csv(sizes, 1, 0.9, 2, "c3", 5, &raw) == GC_OK);
  std::string csv = take(raw);
  CHECK(csv.rfind("algorithm,statistic,n,p,rep,seed,seconds,value_num,value_den\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 records
}

TEST_CASE("expected C(b) for G(n,p)") {
  char* raw = nullptr;
  REQUIRE(gc_expected_c_gnp_json(5, 0.5, &raw) == GC_OK);
  nlohmann::json j = nlohmann::json::parse(take(raw));
  CHECK(j["exponent"] == 6);
  CHECK(j["value"] == doctest::Approx(0.015625));
  CHECK(gc_expected_c_gnp_json(5, 2.0, &raw) == GC_ERR_VALIDATION);
}
