#include "doctest.h"

#include "cliques.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "gen.hpp"

using namespace graphclust;

TEST_CASE("maximal cliques") {
  CliqueReport k4 = maximal_cliques(named_family("complete", 4));
  REQUIRE(k4.maximal_cliques.size() == 1);
  CHECK(k4.maximal_cliques[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(k4.clique_number == 4);

  CliqueReport c5 = maximal_cliques(named_family("cycle", 5));
  CHECK(c5.maximal_cliques.size() == 5);  // triangle-free: the edges
  CHECK(c5.clique_number == 2);

  CliqueReport cc = maximal_cliques(chain_clique(4, 8));
  CHECK(cc.clique_number == 4);
  auto hist = clique_size_distribution(cc);
  CHECK(hist == std::map<int, std::size_t>{{2, 4}, {4, 1}});
}

TEST_CASE("size distribution") {
  CHECK(clique_size_distribution(maximal_cliques(named_family("complete", 4))) ==
        std::map<int, std::size_t>{{4, 1}});
  Graph two_triangles = Graph::from_edge_list({"a b", "b c", "c a", "x y", "y z", "z x"});
  CHECK(clique_size_distribution(maximal_cliques(two_triangles)) ==
        std::map<int, std::size_t>{{3, 2}});
}

TEST_CASE("member degree statistics") {
  Graph cc = chain_clique(4, 8);
  CliqueDegreeReport r = clique_degree_stats(cc, maximal_cliques(cc));
  const DegreeStats& order4 = r.per_order.at(4);
  CHECK(order4.min == 3);
  CHECK(order4.max == 4);
  CHECK(order4.mean == doctest::Approx(3.25));  // degrees 3,3,3,4

  Graph k5 = named_family("complete", 5);
  const DegreeStats& s5 = clique_degree_stats(k5, maximal_cliques(k5)).per_order.at(5);
  CHECK(s5.min == 4);
  CHECK(s5.max == 4);
  CHECK(s5.mean == doctest::Approx(4.0));

  Graph c6 = named_family("cycle", 6);
  const DegreeStats& s2 = clique_degree_stats(c6, maximal_cliques(c6)).per_order.at(2);
  CHECK(s2.mean == doctest::Approx(2.0));
  CHECK(clique_degree_stats(c6, maximal_cliques(c6)).global_mean_degree == doctest::Approx(2.0));
}

TEST_CASE("result cap") {
  CHECK_THROWS_AS(maximal_cliques(named_family("cycle", 8), /*cap=*/3), ResourceError);
}

TEST_CASE("pivot and plain variants agree on the random corpus") {
  auto corpus = gctest::random_corpus(30);
  for (const auto& g : corpus) {
    CliqueReport with_pivot = maximal_cliques(g, kDefaultCliqueCap, /*pivoting=*/true);
    CliqueReport plain = maximal_cliques(g, kDefaultCliqueCap, /*pivoting=*/false);
    CHECK(with_pivot.maximal_cliques == plain.maximal_cliques);

    // every clique really is a maximal clique
    for (const auto& c : with_pivot.maximal_cliques) {
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(g.has_edge(c[i], c[j]));
      for (int v = 0; v < g.node_count(); ++v) {
        bool inside = std::find(c.begin(), c.end(), v) != c.end();
        if (inside) continue;
        bool adjacent_to_all = true;
        for (int u : c) adjacent_to_all = adjacent_to_all && g.has_edge(u, v);
        CHECK_FALSE(adjacent_to_all);
      }
    }

    // every non-isolated node belongs to some maximal clique
    std::vector<char> covered(static_cast<std::size_t>(g.node_count()), 0);
    for (const auto& c : with_pivot.maximal_cliques)
      for (int v : c) covered[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < g.node_count(); ++v)
      if (g.degree(v) >= 1) CHECK(covered[static_cast<std::size_t>(v)]);
  }
}

TEST_CASE("histogram CSV") {
  CHECK(clique_histogram_csv(maximal_cliques(chain_clique(4, 8))) == "k,count\n2,4\n4,1\n");
}
