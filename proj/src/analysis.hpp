#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clustering.hpp"
#include "graph.hpp"

#include "json.hpp"

namespace graphclust {

struct SeriesCell {
  bool defined = false;
  Rational value;
};

struct SeriesRow {
  std::string snapshot_id;  // filename
  bool ok = false;          // file parsed; otherwise `error` holds the reason
  std::string error;
  SeriesCell c3, c4, c5, density;
};

struct SeriesTable {
  std::vector<SeriesRow> rows;
};

/// One row per edge-list file in `dir`, lexicographic filename order.
/// Undefined coefficients are flagged, never imputed; unreadable files become
/// error rows and the scan continues.
SeriesTable series_scan(const std::filesystem::path& dir);

inline constexpr int kSeriesColumns = 4;  // C3, C4, C5, density

struct CorrCell {
  bool defined = false;  // false mirrors a constant-column NA
  double r = 0.0;
  double p = 1.0;
  int nobs = 0;
};

struct CorrMatrix {
  std::array<std::string, kSeriesColumns> names{"C3", "C4", "C5", "density"};
  std::array<std::array<CorrCell, kSeriesColumns>, kSeriesColumns> cells{};
};

double pearson_r(std::span<const double> x, std::span<const double> y);

/// Two-sided permutation p-value for Pearson r with a fixed shuffle seed.
double permutation_p_value(std::span<const double> x, std::span<const double> y,
                           int permutations, std::uint64_t seed);

inline constexpr int kDefaultPermutations = 10'000;

/// Pairwise Pearson r over rows where both cells are defined; pairs with a
/// constant column or fewer than 3 joint observations are flagged undefined.
CorrMatrix pearson_matrix(const SeriesTable& t, int permutations = kDefaultPermutations,
                          std::uint64_t seed = 0);

nlohmann::json series_to_json(const SeriesTable& t);
nlohmann::json corr_to_json(const CorrMatrix& m);

struct BenchRecord {
  std::string algorithm;  // "analytic" | "naive"
  std::string statistic;  // "C3" | "C4" | "C5"
  int n = 0;
  double p = 0.0;
  int rep = 0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  Rational value;
};

/// Fig.-9-style harness: per (n, rep) draw one connected G(n, p) and time the
/// analytic and naive paths on the identical graph. One untimed warmup per
/// (algorithm, statistic, n) cell; monotonic clock.
std::vector<BenchRecord> bench_run(std::span<const int> sizes, double p, int reps,
                                   std::span<const int> statistics, std::uint64_t seed);

std::string bench_csv(std::span<const BenchRecord> records);

/// Compares the analytic census components and C(b) against the brute-force
/// oracle; a mismatch is a report outcome, not an error.
nlohmann::json verify(const Graph& g, int b);

}  // namespace graphclust
