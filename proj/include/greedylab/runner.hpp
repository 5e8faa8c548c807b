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

#ifndef GREEDYLAB_RUNNER_HPP
#define GREEDYLAB_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "greedylab/config.hpp"
#include "greedylab/report.hpp"

namespace greedylab {

// Config-driven experiment runner behind the CLI subcommands. Each command
// consumes the sections of one config (sections run in order, rows are
// prefixed with the section name when there are several) and produces a
// deterministic report for the given seed.
//
//   norm       evaluate configured norms / gauges on explicit vectors
//   constants  sweep conditionality constants and witness lower bounds
//   greedy     quasi-greedy ratio / fundamental function / super-democracy
//   weights    regularity properties, partition validators, gauge constants
//   verify     per-vector inequality suites; row `violations` counts failures
Report cmd_norm(const Config& cfg, std::uint64_t seed);
Report cmd_constants(const Config& cfg, std::uint64_t seed);
Report cmd_greedy(const Config& cfg, std::uint64_t seed);
Report cmd_weights(const Config& cfg, std::uint64_t seed);
Report cmd_verify(const Config& cfg, std::uint64_t seed);

// True when every witness row of the report re-evaluates to its stored value
// within 1e-9 relative tolerance. Rechecks run against the section config
// embedded in the report metadata.
struct RecheckResult {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string detail;
};
RecheckResult recheck_report(const Report& report);

// Total violations recorded by a verify report (0 when it passed).
std::size_t verify_violations(const Report& report);

}  // namespace greedylab

#endif  // GREEDYLAB_RUNNER_HPP
