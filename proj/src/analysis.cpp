#include "analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string_view>

#include "errors.hpp"
#include "gen.hpp"
#include "oracle.hpp"

namespace graphclust {

namespace {

SeriesCell defined_cell(const Rational& v) { return SeriesCell{true, v}; }

SeriesRow scan_one(const std::filesystem::path& file) {
  SeriesRow row;
  row.snapshot_id = file.filename().string();
  std::ifstream in(file);
  if (!in) {
    row.error = "unreadable file";
    return row;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Graph g;
  try {
    g = Graph::from_edge_list_text(buf.str());
  } catch (const std::exception& e) {
    row.error = e.what();
    return row;
  }
  row.ok = true;
  auto coefficient = [&](int b) -> SeriesCell {
    try {
      return defined_cell(c_general(g, b).value);
    } catch (const UndefinedCoefficientError&) {
      return {};
    } catch (const ValidationError&) {  // fewer than b nodes
      return {};
    }
  };
  row.c3 = coefficient(3);
  row.c4 = coefficient(4);
  row.c5 = coefficient(5);
  if (g.node_count() >= 2) row.density = defined_cell(density(g));
  return row;
}

}  // namespace

SeriesTable series_scan(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec))
    throw IoError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  if (files.empty()) throw IoError("no snapshot files in " + dir.string());
  SeriesTable t;
  for (const auto& f : files) t.rows.push_back(scan_one(f));
  return t;
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

double permutation_p_value(std::span<const double> x, std::span<const double> y,
                           int permutations, std::uint64_t seed) {
  const double observed = std::abs(pearson_r(x, y));
  std::vector<double> shuffled(y.begin(), y.end());
  std::mt19937_64 rng(seed);
  int at_least = 0;
  for (int k = 0; k < permutations; ++k) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (std::abs(pearson_r(x, shuffled)) >= observed - 1e-12) ++at_least;
  }
  return static_cast<double>(1 + at_least) / static_cast<double>(1 + permutations);
}

namespace {

std::optional<double> cell_value(const SeriesRow& row, int col) {
  const SeriesCell* cell = nullptr;
  switch (col) {
    case 0: cell = &row.c3; break;
    case 1: cell = &row.c4; break;
    case 2: cell = &row.c5; break;
    default: cell = &row.density; break;
  }
  if (!row.ok || !cell->defined) return std::nullopt;
  return rational_to_double(cell->value);
}

bool constant(std::span<const double> v) {
  for (double x : v)
    if (x != v.front()) return false;
  return true;
}

}  // namespace

CorrMatrix pearson_matrix(const SeriesTable& t, int permutations, std::uint64_t seed) {
  CorrMatrix m;
  for (int a = 0; a < kSeriesColumns; ++a) {
    for (int b = a; b < kSeriesColumns; ++b) {
      std::vector<double> xs, ys;
      for (const auto& row : t.rows) {
        auto x = cell_value(row, a);
        auto y = cell_value(row, b);
        if (x && y) {
          xs.push_back(*x);
          ys.push_back(*y);
        }
      }
      CorrCell cell;
      cell.nobs = static_cast<int>(xs.size());
      if (a == b) {
        if (!xs.empty()) {
          cell.defined = true;
          cell.r = 1.0;
          cell.p = 0.0;
        }
      } else if (xs.size() >= 3 && !constant(xs) && !constant(ys)) {
        cell.defined = true;
        cell.r = pearson_r(xs, ys);
        cell.p = permutation_p_value(xs, ys, permutations, seed);
      }
      m.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = cell;
      m.cells[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = cell;
    }
  }
  return m;
}

namespace {

nlohmann::json cell_json(const SeriesCell& c) {
  if (!c.defined) return nlohmann::json{{"defined", false}};
  return nlohmann::json{{"defined", true},
                        {"value", rational_to_double(c.value)},
                        {"value_num", static_cast<std::int64_t>(c.value.num)},
                        {"value_den", static_cast<std::int64_t>(c.value.den)}};
}

}  // namespace

nlohmann::json series_to_json(const SeriesTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json j{{"snapshot", r.snapshot_id}, {"ok", r.ok}};
    if (!r.ok) {
      j["error"] = r.error;
    } else {
      j["C3"] = cell_json(r.c3);
      j["C4"] = cell_json(r.c4);
      j["C5"] = cell_json(r.c5);
      j["density"] = cell_json(r.density);
    }
    rows.push_back(std::move(j));
  }
  return nlohmann::json{{"rows", std::move(rows)}};
}

nlohmann::json corr_to_json(const CorrMatrix& m) {
  nlohmann::json cells = nlohmann::json::array();
  for (int a = 0; a < kSeriesColumns; ++a)
    for (int b = 0; b < kSeriesColumns; ++b) {
      const CorrCell& c = m.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      nlohmann::json j{{"x", m.names[static_cast<std::size_t>(a)]},
                       {"y", m.names[static_cast<std::size_t>(b)]},
                       {"n", c.nobs}};
      if (c.defined) {
        j["r"] = c.r;
        j["p"] = c.p;
      } else {
        j["r"] = nullptr;  // NA
        j["p"] = nullptr;
      }
      cells.push_back(std::move(j));
    }
  return nlohmann::json{{"pairs", std::move(cells)}};
}

namespace {

double time_once(auto&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

std::uint64_t cell_seed(std::uint64_t seed, int n, int rep) {
  return seed + static_cast<std::uint64_t>(n) * 1000003ull + static_cast<std::uint64_t>(rep);
}

}  // namespace

std::vector<BenchRecord> bench_run(std::span<const int> sizes, double p, int reps,
                                   std::span<const int> statistics, std::uint64_t seed) {
  if (reps < 1) throw ValidationError("bench needs reps >= 1");
  for (int n : sizes)
    if (n < 5) throw ValidationError("bench sizes must be >= 5");
  std::vector<BenchRecord> out;
  for (int n : sizes) {
    std::vector<Graph> graphs;
    std::vector<std::uint64_t> seeds;
    for (int rep = 0; rep < reps; ++rep) {
      std::uint64_t s = cell_seed(seed, n, rep);
      seeds.push_back(s);
      graphs.push_back(gnp_connected(n, p, s, 1000));
    }
    for (int b : statistics) {
      if (b < 3 || b > 5) throw ValidationError("bench statistics must be C3, C4, or C5");
      std::string stat = "C" + std::to_string(b);
      for (const char* algorithm : {"analytic", "naive"}) {
        bool analytic = std::string_view(algorithm) == "analytic";
        auto run = [&](const Graph& g) {
          return analytic ? c_general(g, b) : c_naive(g, b);
        };
        (void)run(graphs.front());  // warmup, excluded from records
        for (int rep = 0; rep < reps; ++rep) {
          ClusteringReport result;
          double secs = time_once([&] { result = run(graphs[static_cast<std::size_t>(rep)]); });
          out.push_back(BenchRecord{algorithm, stat, n, p, rep,
                                    seeds[static_cast<std::size_t>(rep)], secs, result.value});
        }
      }
    }
  }
  return out;
}

std::string bench_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  out << "algorithm,statistic,n,p,rep,seed,seconds,value_num,value_den\n";
  for (const auto& r : records)
    out << r.algorithm << ',' << r.statistic << ',' << r.n << ',' << r.p << ',' << r.rep << ','
        << r.seed << ',' << r.seconds << ',' << count_to_string(r.value.num) << ','
        << count_to_string(r.value.den) << '\n';
  return out.str();
}

namespace {

nlohmann::json count_json(Count v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return count_to_string(v);
}

}  // namespace

nlohmann::json verify(const Graph& g, int b) {
  if (b < 3 || b > 5) throw ValidationError("verify supports b in {3,4,5}");
  if (b > g.node_count()) throw ValidationError("verify requires b <= n");

  MotifCounts analytic = full_census(g);
  auto oracle_tier = brute_census_tier(g, b);
  auto oracle_of = [&](int a) {
    auto it = oracle_tier.find(a);
    return it == oracle_tier.end() ? Count{0} : it->second;
  };

  struct Component {
    const char* name;
    Count analytic;
    Count oracle;
  };
  std::vector<Component> comps;
  switch (b) {
    case 3:
      comps = {{"M3_3", analytic.m3_3, oracle_of(3)}, {"M7_3", analytic.m7_3, oracle_of(7)}};
      break;
    case 4:
      comps = {{"M11_4", analytic.m11_4, oracle_of(11)},
               {"M13_4", analytic.m13_4, oracle_of(13)},
               {"M15_4", analytic.m15_4, oracle_of(15)},
               {"M63_4", analytic.m63_4, oracle_of(63)}};
      break;
    default:
      comps = {{"M75_5", analytic.m75_5, oracle_of(75)},
               {"M77_5", analytic.m77_5, oracle_of(77)},
               {"M86_5", analytic.m86_5, oracle_of(86)},
               {"M1023_5", analytic.m1023_5, oracle_of(1023)}};
      break;
  }

  nlohmann::json analytic_json = nlohmann::json::object();
  nlohmann::json oracle_json = nlohmann::json::object();
  nlohmann::json mismatches = nlohmann::json::array();
  bool match = true;
  for (const auto& c : comps) {
    analytic_json[c.name] = count_json(c.analytic);
    oracle_json[c.name] = count_json(c.oracle);
    if (c.analytic != c.oracle) {
      match = false;
      mismatches.push_back(nlohmann::json{
          {"component", c.name}, {"analytic", count_json(c.analytic)}, {"oracle", count_json(c.oracle)}});
    }
  }

  // The coefficient itself, both routes, when defined on both.
  try {
    ClusteringReport fast = c_general(g, b);
    ClusteringReport slow = c_naive(g, b);
    analytic_json["C"] = rational_to_string(fast.value);
    oracle_json["C"] = rational_to_string(slow.value);
    if (!(fast.value == slow.value)) {
      match = false;
      mismatches.push_back(nlohmann::json{{"component", "C"},
                                          {"analytic", rational_to_string(fast.value)},
                                          {"oracle", rational_to_string(slow.value)}});
    }
  } catch (const UndefinedCoefficientError&) {
    analytic_json["C"] = nullptr;
    oracle_json["C"] = nullptr;
  }

  return nlohmann::json{{"b", b},
                        {"analytic", std::move(analytic_json)},
                        {"oracle", std::move(oracle_json)},
                        {"match", match},
                        {"mismatches", std::move(mismatches)}};
}

}  // namespace graphclust
