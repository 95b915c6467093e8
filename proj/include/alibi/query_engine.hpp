// Copyright 2026 The Alibi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALIBI_QUERY_ENGINE_HPP
#define ALIBI_QUERY_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alibi/core_model.hpp"

namespace alibi {

enum class DbFormat { kCsv, kJson };

/// Input rejected while loading; `line` is 1-based, 0 when unknown.
class LoadError : public std::runtime_error {
 public:
  LoadError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// CSV rows are label,t,x,y,v with an optional header line of exactly those
/// names. Blank lines are skipped. Throws LoadError.
TrajectoryDatabase parse_csv(std::istream& in);

/// A JSON array of {"label", "t", "x", "y", "v"} objects. Throws LoadError;
/// for element errors `line` is the 1-based element index.
TrajectoryDatabase parse_json(std::istream& in);

/// Throws LoadError, also when the file cannot be opened.
TrajectoryDatabase load_database(const std::filesystem::path& path, DbFormat format);

/// Format chosen from the extension: ".json" is JSON, anything else CSV.
TrajectoryDatabase load_database(const std::filesystem::path& path);

struct PairCase {
  std::size_t a_index = 0;
  std::size_t b_index = 0;
  bool intersects = false;
  FiredCase fired_case = FiredCase::kNone;
};

struct Timings {
  std::int64_t median_ns = 0;
  std::int64_t p95_ns = 0;
  std::int64_t total_ns = 0;
};

/// Agreement of the analytic predicate with the sampling oracle.
struct BenchStats {
  std::size_t pairs = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  /// Oracle margin too close to zero to decide.
  std::size_t undecided = 0;
  Timings oracle;
};

struct QueryReport {
  std::string kind;
  std::vector<std::string> labels;
  /// alibi: no pair of beads meets. alibi-at: the objects may have met at
  /// t0. bench: every decided pair agreed with the oracle.
  bool verdict = false;
  std::vector<PairCase> cases;
  std::size_t pairs_considered = 0;
  std::size_t pairs_pruned = 0;
  std::size_t pairs_evaluated = 0;
  Timings timings;
  std::optional<double> t0;
  std::optional<BenchStats> bench;
};

enum class SweepMode { kPruned, kNaive };

/// Alibi query on two necklaces. The pruned sweep only evaluates pairs whose
/// time slabs overlap; pairs_considered counts those and pairs_pruned the
/// rest. Evaluation stops at the first meeting unless `exhaustive`. Throws
/// std::out_of_range for an unknown label and std::invalid_argument for a
/// label with fewer than two samples.
QueryReport run_alibi(const TrajectoryDatabase& db, const std::string& label_a,
                      const std::string& label_b, bool exhaustive = false,
                      SweepMode mode = SweepMode::kPruned);

/// Same as run_alibi on explicit necklaces, labelled "A" and "B".
QueryReport run_alibi(const Necklace& a, const Necklace& b, bool exhaustive = false,
                      SweepMode mode = SweepMode::kPruned);

/// Whether the objects may have met at t0. False when t0 lies outside
/// either trajectory. Throws std::out_of_range for an unknown label and
/// std::invalid_argument for a non-finite t0.
QueryReport run_alibi_at(const TrajectoryDatabase& db, const std::string& label_a,
                         const std::string& label_b, double t0);

/// Random nonempty bead: times, coordinates in [-5, 5], speed in (0, 3].
/// Empty draws are rejected and redrawn.
Bead random_nonempty_bead(std::mt19937_64& rng);

/// The twelve pairs of the published experiment tables.
std::vector<std::pair<Bead, Bead>> table_pairs();

/// Times the analytic predicate and the sampling oracle on `pairs` seeded
/// random pairs and tallies their agreement. Throws std::invalid_argument
/// when pairs == 0.
QueryReport bench(std::size_t pairs, std::uint64_t seed);

/// bench on the table pairs.
QueryReport bench_tables();

/// Oracle slices used by bench; small because the slack profile is concave
/// and refined after sampling.
inline constexpr std::size_t kBenchSlices = 16;

/// |margin| below this leaves a bench pair undecided.
inline constexpr double kBenchBand = 1e-6;

std::string to_json(const QueryReport& report, int indent = 2);
std::string to_text(const QueryReport& report);

}  // namespace alibi

#endif  // ALIBI_QUERY_ENGINE_HPP
