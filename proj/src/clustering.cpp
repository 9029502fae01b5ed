#include "clustering.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "oracle.hpp"

namespace graphclust {

namespace {

Count cayley(int b) {
  Count a = 1;
  for (int i = 0; i < b - 2; ++i) a = checked_mul(a, b);
  return a;
}

nlohmann::json count_json(Count v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return count_to_string(v);
}

}  // namespace

ClusteringReport make_clustering_report(int b, Count cliques, Count spanning_trees) {
  if (spanning_trees == 0)
    throw UndefinedCoefficientError("C(" + std::to_string(b) +
                                    ") undefined: no " + std::to_string(b) +
                                    "-spanning trees in the graph");
  ClusteringReport r;
  r.b = b;
  r.clique_count = cliques;
  r.spanning_tree_count = spanning_trees;
  r.cayley_factor = cayley(b);
  r.value = make_rational(checked_mul(r.cayley_factor, cliques), spanning_trees);
  r.value_f64 = rational_to_double(r.value);
  return r;
}

ClusteringReport c3(const Graph& g) {
  MotifCounts c = census3(g);
  return make_clustering_report(3, c.m7_3, c.m3_3);
}

ClusteringReport c4(const Graph& g) {
  MotifCounts c = census4(g);
  return make_clustering_report(4, c.m63_4, checked_add(c.m11_4, c.m13_4));
}

ClusteringReport c5(const Graph& g) {
  MotifCounts c = census5(g);
  Count den = checked_add(checked_add(c.m75_5, c.m77_5), c.m86_5);
  return make_clustering_report(5, c.m1023_5, den);
}

ClusteringReport c_general(const Graph& g, int b) {
  if (b < 3 || b > g.node_count())
    throw ValidationError("C(b) requires 3 <= b <= n");
  switch (b) {
    case 3: return c3(g);
    case 4: return c4(g);
    case 5: return c5(g);
    default:
      return make_clustering_report(b, count_b_cliques(g, b), count_b_spanning_trees(g, b));
  }
}

GnpExpectation expected_c_gnp(int b, double p) {
  if (b < 3) throw ValidationError("expected C(b) requires b >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0,1]");
  GnpExpectation e;
  e.b = b;
  e.p = p;
  e.exponent = (b - 1) * (b - 2) / 2;
  e.value = std::pow(p, e.exponent);
  return e;
}

nlohmann::json clustering_to_json(const ClusteringReport& r) {
  return nlohmann::json{{"b", r.b},
                        {"cliques", count_json(r.clique_count)},
                        {"spanning_trees", count_json(r.spanning_tree_count)},
                        {"cayley", count_json(r.cayley_factor)},
                        {"value_num", count_json(r.value.num)},
                        {"value_den", count_json(r.value.den)},
                        {"value", r.value_f64}};
}

}  // namespace graphclust
