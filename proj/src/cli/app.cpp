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

#include "gravent/cli/app.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "gravent/cli/commands.hpp"
#include "gravent/cli/config.hpp"
#include "gravent/cli/table.hpp"

namespace gravent::cli {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::ValidationError:
        case ErrorCode::UnknownFigure: return kExitConfig;
        case ErrorCode::IoError: return kExitIo;
        default: return kExitDomain;
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gravitationally induced entanglement and teleportation fidelity tables", "gravent"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output;
    std::string format;
    std::string reduction;
    std::size_t jobs = 1;
    app.add_option("--config", config_path, "key = value run configuration");
    app.add_option("--output", output, "output file (default: standard output)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--reduction", reduction, "field reduction: paper or gram")->check(CLI::IsMember({"paper", "gram"}));
    app.add_option("--jobs", jobs, "worker threads for grid commands")->check(CLI::PositiveNumber);

    std::string figure_name;
    auto *phases = app.add_subcommand("phases", "pair potentials and phase gaps");
    auto *evolve = app.add_subcommand("evolve", "mutual information, coherence and spectrum over time");
    auto *sweep = app.add_subcommand("sweep", "(t, k) grid of mutual information, coherence and averaged fidelity");
    auto *figure = app.add_subcommand("figure", "figure tables: fig2, fig3a, fig3b, fig5a, fig5b");
    figure->add_option("name", figure_name, "figure id")->required();
    auto *teleport = app.add_subcommand("teleport", "branch and averaged teleportation fidelities over time");
    for (auto *sub : {phases, evolve, sweep, figure, teleport}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        RunConfig cfg = config_path.empty() ? parse_config("") : load_config(config_path);
        if (!output.empty()) cfg.output = output;
        if (!format.empty()) cfg.format = parse_format(format);
        if (!reduction.empty()) cfg.reduction = parse_reduction(reduction);

        const ResultTable table = [&] {
            if (phases->parsed()) return cmd_phases(cfg);
            if (evolve->parsed()) return cmd_evolve(cfg, jobs);
            if (sweep->parsed()) return cmd_sweep(cfg, jobs);
            if (figure->parsed()) return cmd_figure(figure_name, cfg, jobs);
            return cmd_teleport(cfg, jobs);
        }();

        const std::string text = render(table, cfg.format);
        if (!write_text(cfg.output, text)) out << text;
        return kExitOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace gravent::cli
