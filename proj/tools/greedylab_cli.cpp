// Copyright 2026 the greedylab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "greedylab/config.hpp"
#include "greedylab/report.hpp"
#include "greedylab/runner.hpp"

namespace {

int write_output(const greedylab::Report& rep, const std::string& out_path,
                 const std::string& format) {
  const std::string text =
      format == "json" ? rep.to_json() : rep.to_csv();
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conditionality-constant laboratory for greedy bases"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::string recheck_path;
  std::uint64_t seed = 12345;

  app.add_option("--recheck", recheck_path,
                 "re-evaluate every witness in a JSON report");

  const std::vector<std::string> names = {"norm", "constants", "greedy",
                                          "weights", "verify"};
  for (const std::string& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "experiment config file")
        ->required();
    sub->add_option("--seed", seed, "master seed (config may override)");
    sub->add_option("--out", out_path, "output path ('-' = stdout)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (!recheck_path.empty()) {
      std::ifstream in(recheck_path);
      if (!in) {
        std::cerr << "cannot open " << recheck_path << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      const greedylab::Report rep = greedylab::report_from_json(buf.str());
      const greedylab::RecheckResult res = greedylab::recheck_report(rep);
      std::cout << "rechecked " << res.checked << " witnesses, " << res.failed
                << " failed\n";
      if (res.failed) std::cerr << res.detail;
      return res.failed == 0 ? 0 : 1;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }
    const std::string cmd = app.get_subcommands()[0]->get_name();
    const greedylab::Config cfg = greedylab::load_config(config_path);
    greedylab::Report rep;
    if (cmd == "norm")
      rep = greedylab::cmd_norm(cfg, seed);
    else if (cmd == "constants")
      rep = greedylab::cmd_constants(cfg, seed);
    else if (cmd == "greedy")
      rep = greedylab::cmd_greedy(cfg, seed);
    else if (cmd == "weights")
      rep = greedylab::cmd_weights(cfg, seed);
    else
      rep = greedylab::cmd_verify(cfg, seed);
    const int rc = write_output(rep, out_path, format);
    if (rc != 0) return rc;
    if (cmd == "verify" && greedylab::verify_violations(rep) > 0) {
      std::cerr << "verify: " << greedylab::verify_violations(rep)
                << " violations\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
