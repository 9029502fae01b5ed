#include "doctest.h"

#include "census.hpp"
#include "corpus.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace graphclust;

namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);      // outer cycle
    edges.emplace_back(i, i + 5);            // spoke
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  std::vector<std::string> labels;
  for (int i = 0; i < 10; ++i) labels.push_back(std::to_string(i));
  return Graph::build(labels, edges);
}

Graph isolated_nodes(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Graph::build(labels, {});
}

}  // namespace

TEST_CASE("tier 3") {
  MotifCounts k4 = census3(named_family("complete", 4));
  CHECK(k4.m3_3 == 12);
  CHECK(k4.m7_3 == 4);

  MotifCounts p3 = census3(named_family("path", 3));
  CHECK(p3.m3_3 == 1);
  CHECK(p3.m7_3 == 0);

  MotifCounts pet = census3(petersen());
  CHECK(pet.m3_3 == 30);
  CHECK(pet.m7_3 == 0);  // girth 5
}

TEST_CASE("tier 4") {
  MotifCounts k5 = census4(named_family("complete", 5));
  CHECK(k5.m11_4 == 20);
  CHECK(k5.m13_4 == 60);
  CHECK(k5.m15_4 == 60);
  CHECK(k5.m63_4 == 5);

  MotifCounts star = census4(named_family("star", 5));  // 4 leaves
  CHECK(star.m11_4 == 4);
  CHECK(star.m13_4 == 0);
  CHECK(star.m15_4 == 0);
  CHECK(star.m63_4 == 0);

  MotifCounts c4 = census4(named_family("cycle", 4));
  CHECK(c4.m11_4 == 0);
  CHECK(c4.m13_4 == 4);
  CHECK(c4.m15_4 == 0);
  CHECK(c4.m63_4 == 0);
}

TEST_CASE("tier 5") {
  MotifCounts k5 = census5(named_family("complete", 5));
  CHECK(k5.m75_5 == 5);
  CHECK(k5.m77_5 == 60);
  CHECK(k5.m86_5 == 60);
  CHECK(k5.m1023_5 == 1);

  MotifCounts c5 = census5(named_family("cycle", 5));
  CHECK(c5.m75_5 == 0);
  CHECK(c5.m77_5 == 0);
  CHECK(c5.m86_5 == 5);  // the 5 spanning paths of the cycle
  CHECK(c5.m1023_5 == 0);

  MotifCounts star = census5(named_family("star", 6));  // 5 leaves
  CHECK(star.m75_5 == 5);
  CHECK(star.m77_5 == 0);
  CHECK(star.m86_5 == 0);
  CHECK(star.m1023_5 == 0);
}

TEST_CASE("full census") {
  MotifCounts k5 = full_census(named_family("complete", 5));
  CHECK(k5.m3_3 == 30);
  CHECK(k5.m7_3 == 10);
  CHECK(k5.m63_4 == 5);
  CHECK(k5.m1023_5 == 1);

  MotifCounts empty = full_census(isolated_nodes(6));
  CHECK(empty.m3_3 == 0);
  CHECK(empty.m7_3 == 0);
  CHECK(empty.m11_4 == 0);
  CHECK(empty.m13_4 == 0);
  CHECK(empty.m15_4 == 0);
  CHECK(empty.m63_4 == 0);
  CHECK(empty.m75_5 == 0);
  CHECK(empty.m77_5 == 0);
  CHECK(empty.m86_5 == 0);
  CHECK(empty.m1023_5 == 0);

  MotifCounts cc = full_census(chain_clique(4, 6));
  CHECK(cc.m63_4 == 1);
  CHECK(cc.m7_3 == 4);
  CHECK(cc.m11_4 == 7);
  CHECK(cc.m13_4 == 21);  // n + 15

  // graphs smaller than the tier yield zero counts, not errors
  MotifCounts tiny = full_census(named_family("path", 3));
  CHECK(tiny.m63_4 == 0);
  CHECK(tiny.m86_5 == 0);
}

TEST_CASE("census matches the brute-force oracle on the random corpus") {
  auto corpus = gctest::random_corpus(60);
  for (const auto& g : corpus) {
    MotifCounts c = full_census(g);

    auto t3 = brute_census_tier(g, 3);
    CHECK(c.m3_3 == t3[3]);
    CHECK(c.m7_3 == t3[7]);
    auto t4 = brute_census_tier(g, 4);
    CHECK(c.m11_4 == t4[11]);
    CHECK(c.m13_4 == t4[13]);
    CHECK(c.m15_4 == t4[15]);
    CHECK(c.m63_4 == t4[63]);
    auto t5 = brute_census_tier(g, 5);
    CHECK(c.m75_5 == t5[75]);
    CHECK(c.m77_5 == t5[77]);
    CHECK(c.m86_5 == t5[86]);
    CHECK(c.m1023_5 == t5[1023]);

    // subtraction formulas never undershoot
    CHECK(c.m13_4 >= 0);
    CHECK(c.m77_5 >= 0);
    CHECK(c.m86_5 >= 0);
    CHECK(3 * c.m7_3 <= c.m3_3);

    // spanning-tree denominators decompose into the tree-motif counts
    CHECK(checked_add(c.m11_4, c.m13_4) == count_b_spanning_trees(g, 4));
    CHECK(checked_add(checked_add(c.m75_5, c.m77_5), c.m86_5) ==
          count_b_spanning_trees(g, 5));
  }
}

TEST_CASE("census serialization") {
  MotifCounts c = full_census(named_family("complete", 5));
  nlohmann::json j = census_to_json(c);
  CHECK(j["M3_3"] == 30);
  CHECK(j["M1023_5"] == 1);
  CHECK(j.size() == 10);

  std::string csv = census_to_csv(c);
  CHECK(csv ==
        "M3_3,M7_3,M11_4,M13_4,M15_4,M63_4,M75_5,M77_5,M86_5,M1023_5\n"
        "30,10,20,60,60,5,5,60,60,1\n");
}
