#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "analysis.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "gen.hpp"

using namespace graphclust;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("gc_test_" + std::to_string(::getpid()) + "_" +
                                                std::to_string(counter++))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream out(path / name);
    out << text;
  }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("series scan") {
  TempDir dir;
  dir.write("q1.edges", named_family("complete", 5).to_edge_list_text());
  dir.write("q2.edges", chain_clique(4, 10).to_edge_list_text());
  SeriesTable t = series_scan(dir.path);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].snapshot_id == "q1.edges");  // lexicographic order
  CHECK(t.rows[0].c3.defined);
  CHECK(t.rows[0].c3.value == make_rational(1, 1));
  CHECK(t.rows[1].c4.value == make_rational(1, 2));
  CHECK(t.rows[1].density.defined);
}

TEST_CASE("series scan flags undefined cells and bad files") {
  TempDir dir;
  dir.write("a_matching.edges", "u v\nx y\n");  // no connected triples
  dir.write("b_broken.edges", "a b c d\n");
  SeriesTable t = series_scan(dir.path);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].ok);
  CHECK_FALSE(t.rows[0].c3.defined);
  CHECK(t.rows[0].density.defined);
  CHECK_FALSE(t.rows[1].ok);
  CHECK_FALSE(t.rows[1].error.empty());

  CHECK_THROWS_AS(series_scan(dir.path / "missing"), IoError);
}

TEST_CASE("series of chain cliques matches the closed form") {
  TempDir dir;
  for (int n = 6; n <= 65; ++n) {
    char name[32];
    std::snprintf(name, sizeof name, "snap_%03d.edges", n);
    dir.write(name, chain_clique(4, n).to_edge_list_text());
  }
  SeriesTable t = series_scan(dir.path);
  REQUIRE(t.rows.size() == 60);
  for (int i = 0; i < 60; ++i) {
    int n = 6 + i;
    CHECK(t.rows[static_cast<std::size_t>(i)].c3.value == make_rational(12, n + 10));
    CHECK(t.rows[static_cast<std::size_t>(i)].c4.value == make_rational(16, n + 22));
  }
}

TEST_CASE("pearson r") {
  std::vector<double> x, y2x, yneg;
  for (int i = 0; i < 10; ++i) {
    x.push_back(i);
    y2x.push_back(2.0 * i);
    yneg.push_back(-static_cast<double>(i));
  }
  CHECK(pearson_r(x, y2x) == doctest::Approx(1.0));
  CHECK(pearson_r(x, yneg) == doctest::Approx(-1.0));

  SUBCASE("invariant under positive affine transforms") {
    std::vector<double> xs{0.1, 0.4, 0.35, 0.9, 0.2, 0.55};
    std::vector<double> ys{1.2, 0.7, 0.9, 0.3, 1.4, 0.8};
    double base = pearson_r(xs, ys);
    std::vector<double> scaled;
    for (double v : xs) scaled.push_back(3.5 * v + 11.0);
    CHECK(std::abs(pearson_r(scaled, ys) - base) < 1e-12);
  }
}

TEST_CASE("correlation matrix with NA flags") {
  // Build a synthetic table directly: C3 constant, the rest varying.
  SeriesTable t;
  for (int i = 0; i < 8; ++i) {
    SeriesRow row;
    row.ok = true;
    row.snapshot_id = "s" + std::to_string(i);
    row.c3 = {true, make_rational(1, 2)};  // constant column -> NA pairs
    row.c4 = {true, make_rational(i + 1, 10)};
    row.c5 = {true, make_rational(10 - i, 10)};
    row.density = {true, make_rational(i + 1, 10)};
    t.rows.push_back(row);
  }
  CorrMatrix m = pearson_matrix(t, 500, 42);
  CHECK(m.cells[0][0].defined);  // diagonal stays 1.000
  CHECK(m.cells[0][0].r == doctest::Approx(1.0));
  CHECK_FALSE(m.cells[0][1].defined);  // constant vs varying -> NA
  CHECK(m.cells[1][3].defined);
  CHECK(m.cells[1][3].r == doctest::Approx(1.0));   // identical columns
  CHECK(m.cells[1][2].r == doctest::Approx(-1.0));  // reversed column
  CHECK(m.cells[1][2].p <= 0.05);
  CHECK(m.cells[1][2].r == m.cells[2][1].r);  // symmetry
}

TEST_CASE("bench structure and value equality") {
  std::vector<int> sizes{12};
  std::vector<int> stats{3};
  auto records = bench_run(sizes, 0.9, 3, stats, 99);
  REQUIRE(records.size() == 6);  // 2 algorithms x 3 reps
  for (int rep = 0; rep < 3; ++rep) {
    const BenchRecord* analytic = nullptr;
    const BenchRecord* naive = nullptr;
    for (const auto& r : records) {
      if (r.rep != rep) continue;
      (r.algorithm == "analytic" ? analytic : naive) = &r;
    }
    REQUIRE(analytic);
    REQUIRE(naive);
    CHECK(analytic->value == naive->value);
    CHECK(analytic->seed == naive->seed);
  }

  // determinism contract: identical seeds reproduce identical values
  auto again = bench_run(sizes, 0.9, 3, stats, 99);
  for (std::size_t i = 0; i < records.size(); ++i) CHECK(records[i].value == again[i].value);

  std::string csv = bench_csv(records);
  CHECK(csv.rfind("algorithm,statistic,n,p,rep,seed,seconds,value_num,value_den\n", 0) == 0);

  CHECK_THROWS_AS(bench_run(std::vector<int>{3}, 0.9, 3, stats, 1), ValidationError);
}

TEST_CASE("verify") {
  nlohmann::json k5 = verify(named_family("complete", 5), 5);
  CHECK(k5["match"] == true);
  CHECK(k5["analytic"]["M75_5"] == 5);
  CHECK(k5["analytic"]["M77_5"] == 60);
  CHECK(k5["analytic"]["M86_5"] == 60);
  CHECK(k5["analytic"]["M1023_5"] == 1);
  CHECK(k5["mismatches"].empty());

  nlohmann::json cc = verify(chain_clique(4, 10), 4);
  CHECK(cc["match"] == true);
  CHECK(cc["analytic"]["C"] == "1/2");  // 16/32

  nlohmann::json rnd = verify(gnp_connected(9, 0.5, 77, 100), 4);
  CHECK(rnd["match"] == true);

  CHECK_THROWS_AS(verify(named_family("complete", 5), 6), ValidationError);
}
