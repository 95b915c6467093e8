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

#include "alibi/query_engine.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "alibi/alibi_predicate.hpp"
#include "alibi/disc_predicate.hpp"
#include "alibi/oracle.hpp"
#include "json.hpp"

namespace alibi {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since)
      .count();
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view field, const char* name, std::size_t line) {
  double value = 0.0;
  const char* end = field.data() + field.size();
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw LoadError("line " + std::to_string(line) + ": field '" + name +
                        "' is not a number: '" + std::string(field) + "'",
                    line);
  }
  return value;
}

// Rows are checked here so errors can name their line; the database
// constructor then only sorts.
TrajectoryDatabase build_database(std::vector<Sample> rows,
                                  const std::vector<std::size_t>& lines,
                                  const char* unit) {
  std::map<std::pair<std::string, double>, std::size_t> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Sample& s = rows[i];
    const std::string where = std::string(unit) + " " + std::to_string(lines[i]);
    if (!std::isfinite(s.t) || !std::isfinite(s.x) || !std::isfinite(s.y) ||
        !std::isfinite(s.v)) {
      throw LoadError(where + ": non-finite value", lines[i]);
    }
    if (s.v < 0.0) throw LoadError(where + ": negative speed", lines[i]);
    const auto [it, fresh] = seen.emplace(std::pair{s.label, s.t}, lines[i]);
    if (!fresh) {
      throw LoadError(where + ": duplicate sample for label '" + s.label +
                          "' (first at " + unit + " " + std::to_string(it->second) +
                          ")",
                      lines[i]);
    }
  }
  return TrajectoryDatabase(std::move(rows));
}

Timings summarize(std::vector<std::int64_t> samples) {
  Timings out;
  if (samples.empty()) return out;
  for (auto s : samples) out.total_ns += s;
  std::sort(samples.begin(), samples.end());
  out.median_ns = samples[samples.size() / 2];
  const std::size_t rank =
      static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(samples.size())));
  out.p95_ns = samples[std::clamp<std::size_t>(rank, 1, samples.size()) - 1];
  return out;
}

const Bead* bead_at(const Necklace& n, double t0, std::size_t& index) {
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i].origin().t <= t0 && t0 <= n[i].destination().t) {
      index = i;
      return &n[i];
    }
  }
  return nullptr;
}

QueryReport run_bench_pairs(const std::vector<std::pair<Bead, Bead>>& pairs,
                            std::size_t slices) {
  QueryReport report;
  report.kind = "bench";
  BenchStats stats;
  std::vector<std::int64_t> analytic_ns, oracle_ns;
  analytic_ns.reserve(pairs.size());
  oracle_ns.reserve(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [b1, b2] = pairs[k];
    auto start = Clock::now();
    const AlibiVerdict v = beads_intersect(b1, b2);
    analytic_ns.push_back(elapsed_ns(start));
    start = Clock::now();
    const OracleVerdict o = oracle_beads_intersect(b1, b2, slices);
    oracle_ns.push_back(elapsed_ns(start));

    report.cases.push_back({k, k, v.intersects, v.fired_case});
    ++stats.pairs;
    if (o.unreliable(kBenchBand)) {
      ++stats.undecided;
    } else if (o.intersects == v.intersects) {
      ++stats.agree;
    } else {
      ++stats.disagree;
    }
  }
  report.pairs_considered = pairs.size();
  report.pairs_evaluated = pairs.size();
  report.timings = summarize(std::move(analytic_ns));
  stats.oracle = summarize(std::move(oracle_ns));
  report.verdict = stats.disagree == 0;
  report.bench = stats;
  return report;
}

}  // namespace

TrajectoryDatabase parse_csv(std::istream& in) {
  std::vector<Sample> rows;
  std::vector<std::size_t> lines;
  std::string text;
  std::size_t line = 0;
  bool first_content = true;
  while (std::getline(in, text)) {
    ++line;
    std::string_view row = trim(text);
    if (line == 1 && row.starts_with("\xEF\xBB\xBF")) row = trim(row.substr(3));
    if (row.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    for (;;) {
      const auto comma = row.find(',', begin);
      fields.push_back(trim(row.substr(begin, comma - begin)));
      if (comma == std::string_view::npos) break;
      begin = comma + 1;
    }
    if (first_content) {
      first_content = false;
      if (fields.size() == 5 && fields[0] == "label" && fields[1] == "t" &&
          fields[2] == "x" && fields[3] == "y" && fields[4] == "v") {
        continue;
      }
    }
    if (fields.size() != 5) {
      throw LoadError("line " + std::to_string(line) + ": expected 5 fields, got " +
                          std::to_string(fields.size()),
                      line);
    }
    if (fields[0].empty()) {
      throw LoadError("line " + std::to_string(line) + ": empty label", line);
    }
    rows.push_back({std::string(fields[0]), parse_real(fields[1], "t", line),
                    parse_real(fields[2], "x", line), parse_real(fields[3], "y", line),
                    parse_real(fields[4], "v", line)});
    lines.push_back(line);
  }
  if (in.bad()) throw LoadError("read error", line);
  return build_database(std::move(rows), lines, "line");
}

TrajectoryDatabase parse_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(std::string("malformed JSON: ") + e.what(), 0);
  }
  if (!doc.is_array()) throw LoadError("expected a JSON array of samples", 0);
  std::vector<Sample> rows;
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::size_t index = i + 1;
    const std::string where = "element " + std::to_string(index);
    if (!item.is_object()) throw LoadError(where + ": not an object", index);
    Sample s;
    if (!item.contains("label") || !item["label"].is_string()) {
      throw LoadError(where + ": missing string 'label'", index);
    }
    s.label = item["label"].get<std::string>();
    for (auto [name, slot] : {std::pair{"t", &s.t}, std::pair{"x", &s.x},
                              std::pair{"y", &s.y}, std::pair{"v", &s.v}}) {
      if (!item.contains(name) || !item[name].is_number()) {
        throw LoadError(where + ": missing number '" + name + "'", index);
      }
      *slot = item[name].get<double>();
    }
    rows.push_back(std::move(s));
    lines.push_back(index);
  }
  return build_database(std::move(rows), lines, "element");
}

TrajectoryDatabase load_database(const std::filesystem::path& path, DbFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string(), 0);
  return format == DbFormat::kJson ? parse_json(in) : parse_csv(in);
}

TrajectoryDatabase load_database(const std::filesystem::path& path) {
  return load_database(path,
                       path.extension() == ".json" ? DbFormat::kJson : DbFormat::kCsv);
}

QueryReport run_alibi(const Necklace& a, const Necklace& b, bool exhaustive,
                      SweepMode mode) {
  QueryReport report;
  report.kind = "alibi";
  report.labels = {"A", "B"};
  std::vector<std::int64_t> per_pair;
  bool met = false;
  const auto wall = Clock::now();

  auto evaluate = [&](std::size_t i, std::size_t j) {
    const auto start = Clock::now();
    const AlibiVerdict v = beads_intersect(a[i], b[j]);
    per_pair.push_back(elapsed_ns(start));
    ++report.pairs_evaluated;
    report.cases.push_back({i, j, v.intersects, v.fired_case});
    met = met || v.intersects;
  };

  if (mode == SweepMode::kNaive) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        ++report.pairs_considered;
        if (!met || exhaustive) evaluate(i, j);
      }
    }
  } else {
    // Necklace beads are consecutive, so starts and ends are both sorted.
    // The sweep keeps counting overlaps after a short-circuit so the pair
    // accounting stays exact.
    std::size_t j_lo = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      while (j_lo < b.size() && b[j_lo].destination().t < a[i].origin().t) ++j_lo;
      for (std::size_t j = j_lo; j < b.size(); ++j) {
        if (b[j].origin().t > a[i].destination().t) break;
        ++report.pairs_considered;
        if (!met || exhaustive) evaluate(i, j);
      }
    }
  }
  report.pairs_pruned = a.size() * b.size() - report.pairs_considered;
  report.verdict = !met;
  report.timings = summarize(std::move(per_pair));
  report.timings.total_ns = elapsed_ns(wall);
  return report;
}

QueryReport run_alibi(const TrajectoryDatabase& db, const std::string& label_a,
                      const std::string& label_b, bool exhaustive, SweepMode mode) {
  const Necklace a = build_necklace(db, label_a);
  const Necklace b = build_necklace(db, label_b);
  QueryReport report = run_alibi(a, b, exhaustive, mode);
  report.labels = {label_a, label_b};
  return report;
}

QueryReport run_alibi_at(const TrajectoryDatabase& db, const std::string& label_a,
                         const std::string& label_b, double t0) {
  if (!std::isfinite(t0)) throw std::invalid_argument("t0 must be finite");
  const Necklace a = build_necklace(db, label_a);
  const Necklace b = build_necklace(db, label_b);
  QueryReport report;
  report.kind = "alibi-at";
  report.labels = {label_a, label_b};
  report.t0 = t0;
  const auto wall = Clock::now();
  std::size_t i = 0, j = 0;
  const Bead* ba = bead_at(a, t0, i);
  const Bead* bb = bead_at(b, t0, j);
  report.pairs_considered = ba && bb ? 1 : 0;
  report.pairs_pruned = a.size() * b.size() - report.pairs_considered;
  if (ba && bb) {
    report.verdict = alibi_at_time(*ba, *bb, t0);
    report.pairs_evaluated = 1;
    report.cases.push_back({i, j, report.verdict, FiredCase::kNone});
  }
  const auto spent = elapsed_ns(wall);
  report.timings = {spent, spent, spent};
  return report;
}

Bead random_nonempty_bead(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_real_distribution<double> speed(0.0, 3.0);
  for (;;) {
    double tp = coord(rng), tq = coord(rng);
    if (tp > tq) std::swap(tp, tq);
    const double xp = coord(rng), yp = coord(rng);
    const double xq = coord(rng), yq = coord(rng);
    const double v = 3.0 - speed(rng);  // (0, 3]
    const Bead b = Bead::from_tuple(tp, xp, yp, tq, xq, yq, v);
    if (bead_nonempty(b)) return b;
  }
}

std::vector<std::pair<Bead, Bead>> table_pairs() {
  const Bead b1 = Bead::from_tuple(0, 0, 0, 2, 0, 2, 1.9);
  std::vector<std::pair<Bead, Bead>> out;
  for (double start : {0.0, 1.0, 3.0}) {
    const double end = start == 0.0 ? 2.0 : start + (start == 1.0 ? 2.0 : 1.0);
    for (double x : {3.0, 4.0}) out.emplace_back(b1, Bead::from_tuple(start, x, 0, end, x, 2, 2));
    for (double x : {3.0, 4.0}) out.emplace_back(b1, Bead::from_tuple(start, x, 0, end, x, 0, 2));
  }
  return out;
}

QueryReport bench(std::size_t pairs, std::uint64_t seed) {
  if (pairs == 0) throw std::invalid_argument("bench needs at least one pair");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Bead, Bead>> drawn;
  drawn.reserve(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    Bead b1 = random_nonempty_bead(rng);
    Bead b2 = random_nonempty_bead(rng);
    drawn.emplace_back(b1, b2);
  }
  QueryReport report = run_bench_pairs(drawn, kBenchSlices);
  report.labels = {"seed=" + std::to_string(seed)};
  return report;
}

QueryReport bench_tables() {
  QueryReport report = run_bench_pairs(table_pairs(), kDefaultSlices);
  report.labels = {"tables"};
  return report;
}

std::string to_json(const QueryReport& r, int indent) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  j["labels"] = r.labels;
  j["verdict"] = r.verdict;
  if (r.t0) j["t0"] = *r.t0;
  auto& cases = j["cases"] = nlohmann::ordered_json::array();
  for (const PairCase& c : r.cases) {
    cases.push_back({{"a", c.a_index},
                     {"b", c.b_index},
                     {"intersects", c.intersects},
                     {"case", to_string(c.fired_case)}});
  }
  j["pairs_considered"] = r.pairs_considered;
  j["pairs_pruned"] = r.pairs_pruned;
  j["pairs_evaluated"] = r.pairs_evaluated;
  j["timings"] = {{"median_ns", r.timings.median_ns},
                  {"p95_ns", r.timings.p95_ns},
                  {"total_ns", r.timings.total_ns}};
  if (r.bench) {
    j["agreement"] = {{"pairs", r.bench->pairs},
                      {"agree", r.bench->agree},
                      {"disagree", r.bench->disagree},
                      {"undecided", r.bench->undecided},
                      {"oracle_median_ns", r.bench->oracle.median_ns},
                      {"oracle_p95_ns", r.bench->oracle.p95_ns}};
  }
  return j.dump(indent);
}

std::string to_text(const QueryReport& r) {
  std::ostringstream out;
  out << r.kind;
  for (const auto& l : r.labels) out << ' ' << l;
  if (r.t0) out << " t0=" << *r.t0;
  out << '\n';
  if (r.kind == "alibi") {
    out << "alibi: " << (r.verdict ? "true" : "false") << '\n';
    for (const PairCase& c : r.cases) {
      if (c.intersects) {
        out << "meet: bead " << c.a_index << " x bead " << c.b_index << " (case "
            << to_string(c.fired_case) << ")\n";
      }
    }
  } else if (r.kind == "alibi-at") {
    out << "met-possible: " << (r.verdict ? "true" : "false") << '\n';
  } else if (r.bench) {
    out << "agree " << r.bench->agree << ", disagree " << r.bench->disagree
        << ", undecided " << r.bench->undecided << " of " << r.bench->pairs << '\n'
        << "oracle median " << r.bench->oracle.median_ns << " ns, p95 "
        << r.bench->oracle.p95_ns << " ns\n";
  }
  out << "pairs considered " << r.pairs_considered << ", pruned " << r.pairs_pruned
      << ", evaluated " << r.pairs_evaluated << '\n'
      << "median " << r.timings.median_ns << " ns, p95 " << r.timings.p95_ns
      << " ns, total " << r.timings.total_ns << " ns\n";
  return out.str();
}

}  // namespace alibi
