// Copyright 2026 The gravent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAVENT_CLI_COMMANDS_HPP
#define GRAVENT_CLI_COMMANDS_HPP

// Table producers behind the executable's subcommands. Grid commands fan
// out over `jobs` worker threads; rows are stored by grid index, so the
// output does not depend on the job count.

#include <functional>
#include <string_view>
#include <vector>

#include "gravent/cli/config.hpp"
#include "gravent/cli/table.hpp"

namespace gravent::cli {

/// Evenly spaced grid; a single step yields {lo}.
std::vector<double> linspace(double lo, double hi, std::size_t steps);

/// Evaluates fn(0..n-1) on up to `jobs` threads, results in index order.
/// The lowest-index exception is rethrown.
std::vector<std::vector<double>> parallel_rows(std::size_t n, std::size_t jobs,
                                               const std::function<std::vector<double>(std::size_t)> &fn);

/// h00, h01, h10, delta1, delta2, delta3.
ResultTable cmd_phases(const RunConfig &cfg);

/// Per t: phase, mutual information, coherence, spectrum, oracle columns.
ResultTable cmd_evolve(const RunConfig &cfg, std::size_t jobs = 1);

/// t-major (t, k) grid of mutual information, coherence and averaged fidelity.
ResultTable cmd_sweep(const RunConfig &cfg, std::size_t jobs = 1);

/// fig2 | fig3a | fig3b | fig5a | fig5b; Error(UnknownFigure) otherwise.
ResultTable cmd_figure(std::string_view name, const RunConfig &cfg, std::size_t jobs = 1);

/// Per t: the four branch fidelities for (theta, phi) and averaged fidelity.
ResultTable cmd_teleport(const RunConfig &cfg, std::size_t jobs = 1);

}  // namespace gravent::cli

#endif  // GRAVENT_CLI_COMMANDS_HPP
