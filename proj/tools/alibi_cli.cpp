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

// Command-line front end. Exit status 0 means the query ran and its answer
// is in the output; any operational failure exits nonzero.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alibi/alibi_predicate.hpp"
#include "alibi/query_engine.hpp"
#include "json.hpp"

namespace {

void emit(const alibi::QueryReport& report, bool json) {
  if (json) {
    std::cout << alibi::to_json(report) << '\n';
  } else {
    std::cout << alibi::to_text(report);
  }
}

int bead_command(const std::vector<double>& v, bool json) {
  const auto b1 = alibi::Bead::from_tuple(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
  const auto b2 = alibi::Bead::from_tuple(v[7], v[8], v[9], v[10], v[11], v[12], v[13]);
  const alibi::AlibiVerdict verdict = alibi::beads_intersect(b1, b2);
  if (json) {
    nlohmann::ordered_json j;
    j["kind"] = "bead";
    j["intersects"] = verdict.intersects;
    j["alibi"] = !verdict.intersects;
    j["case"] = alibi::to_string(verdict.fired_case);
    if (verdict.witness) {
      j["witness"] = {verdict.witness->t, verdict.witness->x, verdict.witness->y};
    } else {
      j["witness"] = nullptr;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "intersects: " << (verdict.intersects ? "true" : "false") << '\n'
              << "case: " << alibi::to_string(verdict.fired_case) << '\n';
    if (verdict.witness) {
      std::cout << "witness: " << verdict.witness->t << ' ' << verdict.witness->x << ' '
                << verdict.witness->y << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alibi queries on space-time prisms"};
  app.require_subcommand(1);
  bool json = false;

  std::string path;
  auto* load_check = app.add_subcommand("load-check", "Validate a trajectory file");
  load_check->add_option("path", path, "CSV or JSON file")->required();

  std::string db_path, label_a, label_b;
  bool exhaustive = false;
  auto* alibi_cmd = app.add_subcommand("alibi", "Could the two objects never have met");
  alibi_cmd->add_option("db", db_path)->required();
  alibi_cmd->add_option("labelA", label_a)->required();
  alibi_cmd->add_option("labelB", label_b)->required();
  alibi_cmd->add_flag("--exhaustive", exhaustive, "Evaluate every overlapping pair");
  alibi_cmd->add_flag("--json", json);

  double t0 = 0.0;
  auto* at_cmd = app.add_subcommand("alibi-at", "Could the two objects meet at t0");
  at_cmd->add_option("db", db_path)->required();
  at_cmd->add_option("labelA", label_a)->required();
  at_cmd->add_option("labelB", label_b)->required();
  at_cmd->add_option("t0", t0)->required();
  at_cmd->add_flag("--json", json);

  std::vector<double> reals;
  auto* bead_cmd = app.add_subcommand(
      "bead", "Intersect B(t1,x1,y1,t2,x2,y2,v1) and B(t3,x3,y3,t4,x4,y4,v2)");
  bead_cmd->add_option("values", reals, "14 reals")->required()->expected(14);
  bead_cmd->add_flag("--json", json);

  std::size_t pairs = 1000;
  std::uint64_t seed = 1;
  bool tables = false;
  auto* bench_cmd = app.add_subcommand("bench", "Analytic predicate against the oracle");
  bench_cmd->add_option("--pairs", pairs)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_flag("--tables", tables, "Use the fixed experiment table pairs");
  bench_cmd->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*load_check) {
      const auto db = alibi::load_database(path);
      std::cout << "ok: " << db.labels().size() << " labels, " << db.size()
                << " samples\n";
    } else if (*alibi_cmd) {
      const auto db = alibi::load_database(db_path);
      emit(alibi::run_alibi(db, label_a, label_b, exhaustive), json);
    } else if (*at_cmd) {
      const auto db = alibi::load_database(db_path);
      emit(alibi::run_alibi_at(db, label_a, label_b, t0), json);
    } else if (*bead_cmd) {
      return bead_command(reals, json);
    } else if (*bench_cmd) {
      emit(tables ? alibi::bench_tables() : alibi::bench(pairs, seed), json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
