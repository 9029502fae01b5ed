#include "census.hpp"

#include <bit>
#include <limits>
#include <sstream>

namespace graphclust {

namespace {

using Row = std::vector<std::uint64_t>;

void intersect(Row& dst, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t w = 0; w < a.size(); ++w) dst[w] = a[w] & b[w];
}

Count popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  Count c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

void for_each_bit(std::span<const std::uint64_t> mask, auto&& fn) {
  for (std::size_t w = 0; w < mask.size(); ++w) {
    std::uint64_t bits = mask[w];
    while (bits) {
      fn(static_cast<int>(w) * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
}

// Adjacency rows restricted to higher-indexed neighbours; walking these in
// increasing vertex order visits every clique exactly once.
std::vector<Row> ascending_rows(const Graph& g) {
  const int n = g.node_count();
  const std::size_t words = static_cast<std::size_t>(g.words_per_row());
  std::vector<Row> up(static_cast<std::size_t>(n), Row(words));
  for (int i = 0; i < n; ++i) {
    auto r = g.row(i);
    Row& row = up[static_cast<std::size_t>(i)];
    for (std::size_t w = 0; w < words; ++w) row[w] = r[w];
    const std::size_t w0 = static_cast<std::size_t>(i) >> 6;
    for (std::size_t w = 0; w < w0; ++w) row[w] = 0;
    const int b = i & 63;
    const std::uint64_t low =
        b == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (b + 1)) - 1;
    row[w0] &= ~low;
  }
  return up;
}

// Per-node (g^3)_ii only; tier 3 and 4 never need the 4th power.
std::vector<Count> g3_diagonal(const Graph& g) {
  const int n = g.node_count();
  std::vector<Count> diag(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    Count d = 0;
    for (int j : g.neighborhood(i)) d = checked_add(d, popcount_and(g.row(i), g.row(j)));
    diag[static_cast<std::size_t>(i)] = d;
  }
  return diag;
}

void fill_tier3(const Graph& g, Count tr_g3, MotifCounts& out) {
  Count triples = 0;
  for (int i = 0; i < g.node_count(); ++i)
    triples = checked_add(triples, binomial(g.degree(i), 2));
  out.m3_3 = triples;
  out.m7_3 = tr_g3 / 6;
  out.tier3 = true;
}

void fill_tier4(const Graph& g, const std::vector<Count>& g3_diag, MotifCounts& out) {
  const int n = g.node_count();
  Count stars = 0, tadpoles = 0;
  for (int i = 0; i < n; ++i) {
    Count k = g.degree(i);
    stars = checked_add(stars, binomial(k, 3));
    if (k > 2)
      tadpoles = checked_add(tadpoles,
                             checked_mul(g3_diag[static_cast<std::size_t>(i)], k - 2));
  }
  out.m11_4 = stars;
  out.m15_4 = tadpoles / 2;

  Count edge_term = 0;
  for (auto [i, j] : g.edges())
    edge_term = checked_add(edge_term, checked_mul(g.degree(i) - 1, g.degree(j) - 1));
  out.m13_4 = checked_sub(edge_term, checked_mul(3, out.m7_3));

  auto up = ascending_rows(g);
  Row m2(static_cast<std::size_t>(g.words_per_row()));
  Count cliques = 0;
  for (int i = 0; i < n; ++i) {
    for_each_bit(up[static_cast<std::size_t>(i)], [&](int j) {
      intersect(m2, up[static_cast<std::size_t>(i)], up[static_cast<std::size_t>(j)]);
      for_each_bit(m2, [&](int k) {
        cliques = checked_add(cliques, popcount_and(m2, up[static_cast<std::size_t>(k)]));
      });
    });
  }
  out.m63_4 = cliques;
  out.tier4 = true;
}

void fill_tier5(const Graph& g, const WalkStats& ws, MotifCounts& out) {
  const int n = g.node_count();
  Count stars = 0;
  for (int i = 0; i < n; ++i) stars = checked_add(stars, binomial(g.degree(i), 4));
  out.m75_5 = stars;

  // Central edge taken in both directions.
  Count arrow_term = 0;
  for (auto [i, j] : g.edges()) {
    Count ki = g.degree(i), kj = g.degree(j);
    arrow_term = checked_add(arrow_term, checked_mul(binomial(ki - 1, 2), kj - 1));
    arrow_term = checked_add(arrow_term, checked_mul(binomial(kj - 1, 2), ki - 1));
  }
  out.m77_5 = checked_sub(arrow_term, checked_mul(2, out.m15_4));

  Count paths = ws.sum_offdiag_g4 / 2;
  paths = checked_sub(paths, checked_mul(2, out.m3_3));
  paths = checked_sub(paths, checked_mul(9, out.m7_3));
  paths = checked_sub(paths, checked_mul(3, out.m11_4));
  paths = checked_sub(paths, checked_mul(2, out.m13_4));
  paths = checked_sub(paths, checked_mul(2, out.m15_4));
  out.m86_5 = paths;

  auto up = ascending_rows(g);
  const std::size_t words = static_cast<std::size_t>(g.words_per_row());
  Row m2(words), m3(words);
  Count cliques = 0;
  for (int i = 0; i < n; ++i) {
    for_each_bit(up[static_cast<std::size_t>(i)], [&](int j) {
      intersect(m2, up[static_cast<std::size_t>(i)], up[static_cast<std::size_t>(j)]);
      for_each_bit(m2, [&](int k) {
        intersect(m3, m2, up[static_cast<std::size_t>(k)]);
        for_each_bit(m3, [&](int l) {
          cliques = checked_add(cliques, popcount_and(m3, up[static_cast<std::size_t>(l)]));
        });
      });
    });
  }
  out.m1023_5 = cliques;
  out.tier5 = true;
}

}  // namespace

MotifCounts census3(const Graph& g) {
  MotifCounts out;
  auto diag = g3_diagonal(g);
  Count tr = 0;
  for (Count d : diag) tr = checked_add(tr, d);
  fill_tier3(g, tr, out);
  return out;
}

MotifCounts census4(const Graph& g) {
  MotifCounts out;
  auto diag = g3_diagonal(g);
  Count tr = 0;
  for (Count d : diag) tr = checked_add(tr, d);
  fill_tier3(g, tr, out);
  fill_tier4(g, diag, out);
  return out;
}

MotifCounts census5(const Graph& g) { return full_census(g); }

MotifCounts full_census(const Graph& g) {
  MotifCounts out;
  WalkStats ws = walk_stats(g);
  fill_tier3(g, ws.tr_g3, out);
  fill_tier4(g, ws.g3_diag, out);
  fill_tier5(g, ws, out);
  return out;
}

namespace {

nlohmann::json count_json(Count v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return count_to_string(v);
}

}  // namespace

nlohmann::json census_to_json(const MotifCounts& c) {
  nlohmann::json j;
  if (c.tier3) {
    j["M3_3"] = count_json(c.m3_3);
    j["M7_3"] = count_json(c.m7_3);
  }
  if (c.tier4) {
    j["M11_4"] = count_json(c.m11_4);
    j["M13_4"] = count_json(c.m13_4);
    j["M15_4"] = count_json(c.m15_4);
    j["M63_4"] = count_json(c.m63_4);
  }
  if (c.tier5) {
    j["M75_5"] = count_json(c.m75_5);
    j["M77_5"] = count_json(c.m77_5);
    j["M86_5"] = count_json(c.m86_5);
    j["M1023_5"] = count_json(c.m1023_5);
  }
  return j;
}

std::string census_to_csv(const MotifCounts& c) {
  std::ostringstream head, row;
  auto emit = [&](const char* name, Count v, bool on) {
    if (!on) return;
    if (head.tellp() > 0) {
      head << ',';
      row << ',';
    }
    head << name;
    row << count_to_string(v);
  };
  emit("M3_3", c.m3_3, c.tier3);
  emit("M7_3", c.m7_3, c.tier3);
  emit("M11_4", c.m11_4, c.tier4);
  emit("M13_4", c.m13_4, c.tier4);
  emit("M15_4", c.m15_4, c.tier4);
  emit("M63_4", c.m63_4, c.tier4);
  emit("M75_5", c.m75_5, c.tier5);
  emit("M77_5", c.m77_5, c.tier5);
  emit("M86_5", c.m86_5, c.tier5);
  emit("M1023_5", c.m1023_5, c.tier5);
  return head.str() + "\n" + row.str() + "\n";
}

}  // namespace graphclust
