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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gravent/cli/app.hpp"
#include "gravent/cli/commands.hpp"
#include "gravent/cli/config.hpp"
#include "gravent/cli/table.hpp"
#include "gravent/error.hpp"

using namespace gravent;
using namespace gravent::cli;

namespace {

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

double max_column_gap(const ResultTable &t, const std::string &a, const std::string &b) {
    const auto ia = t.column_index(a), ib = t.column_index(b);
    double worst = 0.0;
    for (const auto &row : t.rows()) worst = std::max(worst, std::abs(row[ia] - row[ib]));
    return worst;
}

}  // namespace

TEST(Config, DefaultsApplied) {
    const auto cfg = parse_config("state = bell\nfield = separable\n");
    EXPECT_EQ(cfg.units, UnitSystem::Dimensionless);
    EXPECT_EQ(cfg.gravity().G, 1.0);
    EXPECT_EQ(cfg.gravity().hbar, 1.0);
    EXPECT_EQ(cfg.reduction, Reduction::PaperLiteral);
    EXPECT_EQ(cfg.format, OutputFormat::Csv);
    EXPECT_EQ(cfg.field_model().kind, FieldModel::Kind::Separable);
}

TEST(Config, CommentsBlankLinesAndSiUnits) {
    const auto cfg = parse_config("# header\n\nunits = si   # trailing\nmass_a = 1e-14\nmass_b = 1e-14\n"
                                  "dist_d = 450e-6\ndist_l = 250e-6\n");
    EXPECT_EQ(cfg.gravity().G, kGravitationalConstantSI);
    EXPECT_EQ(cfg.gravity().hbar, kHbarSI);
}

TEST(Config, CustomStateIsRenormalizedWithinSlack) {
    const auto cfg = parse_config("alpha = 0.5\nbeta = 0, 0.5\ngamma = 0.5\ndelta = 0.5000001\n");
    EXPECT_EQ(cfg.state_name, "custom");
    EXPECT_NEAR(std::abs(cfg.state.beta - Complex{0.0, 0.5}), 0.0, 1e-6);
    EXPECT_EQ(code_of([] { parse_config("state = custom\nalpha = 1\nbeta = 1\n"); }), ErrorCode::ValidationError);
    EXPECT_EQ(code_of([] { parse_config("state = bell\nalpha = 1\n"); }), ErrorCode::ValidationError);
}

TEST(Config, ValidationErrorsNameTheField) {
    try {
        parse_config("dist_d = 1\ndist_l = 2\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ValidationError);
        EXPECT_NE(std::string(e.what()).find("d must exceed L"), std::string::npos);
    }
    try {
        parse_config("field = overlap\nk_re = 1.5\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ValidationError);
        EXPECT_NE(std::string(e.what()).find("overlap magnitude > 1"), std::string::npos);
    }
    EXPECT_EQ(code_of([] { parse_config("t_steps = 0\n"); }), ErrorCode::ValidationError);
    EXPECT_EQ(code_of([] { parse_config("mass_a = -1\n"); }), ErrorCode::ValidationError);
}

TEST(Config, ParseErrorsCarryTheLine) {
    try {
        parse_config("units = si\n\nmass_a = heavy\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_EQ(code_of([] { parse_config("no equals sign\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_config("colour = red\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_config("g = 1\ng = 2\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_config("field = gravity\n"); }), ErrorCode::ParseError);
}

TEST(Grid, Linspace) {
    EXPECT_EQ(linspace(2.0, 5.0, 1), std::vector<double>{2.0});
    const auto g = linspace(0.0, 1.0, 11);
    ASSERT_EQ(g.size(), 11u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_NEAR(g[3], 0.3, 1e-15);
}

TEST(Grid, ParallelRowsKeepIndexOrderAndErrors) {
    const auto rows = parallel_rows(100, 8, [](std::size_t i) { return std::vector<double>{double(i)}; });
    for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i][0], double(i));
    EXPECT_EQ(code_of([] {
                  parallel_rows(50, 4, [](std::size_t i) -> std::vector<double> {
                      if (i == 7) throw Error(ErrorCode::InvalidK, "seven");
                      return {0.0};
                  });
              }),
              ErrorCode::InvalidK);
}

TEST(Commands, PhasesRow) {
    const auto table = cmd_phases(parse_config(""));
    ASSERT_EQ(table.rows().size(), 1u);
    const auto &row = table.rows()[0];
    EXPECT_NEAR(row[table.column_index("delta1")], 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(row[table.column_index("delta2")], -0.5, 1e-15);
    EXPECT_NEAR(row[table.column_index("delta3")], -2.0 / 3.0, 1e-15);
    EXPECT_NEAR(row[table.column_index("delta3")], row[table.column_index("delta2")] - row[table.column_index("delta1")],
                1e-15);
}

TEST(Commands, Fig3bEndpoints) {
    const auto table = cmd_figure("fig3b", parse_config("k_steps = 101\n"));
    ASSERT_EQ(table.rows().size(), 101u);
    EXPECT_EQ(table.rows().front()[0], 0.0);
    EXPECT_NEAR(table.rows().front()[1], 1.0, 1e-12);
    EXPECT_EQ(table.rows().back()[0], 1.0);
    EXPECT_NEAR(table.rows().back()[1], 2.0, 1e-9);
    EXPECT_LE(max_column_gap(table, "value", "oracle"), 1e-9);
}

TEST(Commands, Fig2StartsUnentangled) {
    const auto table = cmd_figure("fig2", parse_config("t_steps = 21\n"));
    EXPECT_EQ(table.rows().front()[table.column_index("t")], 0.0);
    EXPECT_NEAR(table.rows().front()[table.column_index("value")], 0.0, 1e-12);
    EXPECT_LE(max_column_gap(table, "value", "oracle"), 1e-9);
}

TEST(Commands, Fig5aReachesExtremes) {
    const auto table = cmd_figure("fig5a", parse_config("t_steps = 21\n"), 4);
    const auto iv = table.column_index("value");
    double hi = 0.0, lo = 1.0;
    for (const auto &row : table.rows()) {
        hi = std::max(hi, row[iv]);
        lo = std::min(lo, row[iv]);
    }
    EXPECT_NEAR(hi, 1.0, 1e-10);
    EXPECT_NEAR(lo, 1.0 / 3.0, 1e-10);
    EXPECT_LE(max_column_gap(table, "value", "oracle"), 1e-9);
}

TEST(Commands, AllFigureTablesMatchOracles) {
    const auto cfg = parse_config("t_steps = 5\nk_steps = 6\n");
    for (const char *name : {"fig2", "fig3a", "fig3b", "fig5a", "fig5b"}) {
        EXPECT_LE(max_column_gap(cmd_figure(name, cfg, 4), "value", "oracle"), 1e-9) << name;
    }
    auto gram = cfg;
    gram.reduction = Reduction::GramTrace;
    for (const char *name : {"fig3a", "fig3b", "fig5b"}) {
        EXPECT_LE(max_column_gap(cmd_figure(name, gram, 4), "value", "oracle"), 1e-9) << name;
    }
    EXPECT_EQ(code_of([&] { cmd_figure("fig4", cfg); }), ErrorCode::UnknownFigure);
}

TEST(Commands, SweepMatchesOracles) {
    for (const char *doc : {"field = overlap\nk_re = 0.3\nk_im = 0.4\nt_steps = 4\nk_steps = 3\nstate = uniform\n",
                            "field = overlap\nreduction = gram\nt_steps = 3\nk_steps = 3\n",
                            "field = separable\nt_steps = 4\nk_steps = 2\nalpha = 0.6\nbeta = 0, 0.8\n",
                            "field = orthogonal\nt_steps = 3\nk_steps = 3\nstate = uniform\n"}) {
        const auto table = cmd_sweep(parse_config(doc), 4);
        EXPECT_LE(max_column_gap(table, "mutual_info", "oracle_mutual_info"), 1e-9) << doc;
        EXPECT_LE(max_column_gap(table, "coherence", "oracle_coherence"), 1e-9) << doc;
        EXPECT_LE(max_column_gap(table, "fbar", "oracle_fbar"), 1e-9) << doc;
    }
}

TEST(Commands, SweepIsTimeMajorAndOrthogonalIgnoresK) {
    const auto table = cmd_sweep(parse_config("field = orthogonal\nt_steps = 2\nk_steps = 3\n"));
    ASSERT_EQ(table.rows().size(), 6u);
    EXPECT_EQ(table.rows()[0][0], table.rows()[2][0]);
    EXPECT_LT(table.rows()[2][0], table.rows()[3][0]);
    const auto im = table.column_index("mutual_info");
    for (const auto &row : table.rows()) EXPECT_EQ(row[im], table.rows()[0][im]);
}

TEST(Commands, SinglePointSweep) {
    const auto cfg = parse_config("field = overlap\nk_min = 0.5\nk_max = 0.5\nk_steps = 1\nt_steps = 1\n");
    const auto table = cmd_sweep(cfg);
    ASSERT_EQ(table.rows().size(), 1u);
    EXPECT_NEAR(table.rows()[0][table.column_index("mutual_info")], 1.5310044064107189, 1e-9);
}

TEST(Commands, EvolveAndTeleportOracles) {
    const auto cfg = parse_config("state = uniform\nt_steps = 9\n");
    const auto ev = cmd_evolve(cfg, 2);
    EXPECT_LE(max_column_gap(ev, "mutual_info", "oracle_mutual_info"), 1e-9);
    EXPECT_LE(max_column_gap(ev, "coherence", "oracle_coherence"), 1e-9);

    const auto tp = cmd_teleport(parse_config("field = overlap\nk_re = 0.7\nt_steps = 5\ntheta = 1.0\nphi = 2.0\n"), 2);
    EXPECT_LE(max_column_gap(tp, "fbar_quadrature", "oracle"), 1e-9);
    EXPECT_LE(max_column_gap(tp, "fbar_analytic", "oracle"), 1e-12);
    EXPECT_LE(max_column_gap(tp, "f00", "f11"), 1e-10);
}

TEST(Emit, CsvFormatting) {
    ResultTable t({"x", "a,b", "q\"uote"});
    t.add_row({1.0 / 3.0, -0.0, 1e-20});
    EXPECT_EQ(to_csv(t), "x,\"a,b\",\"q\"\"uote\"\n0.333333333333,0,1e-20\n");
    EXPECT_EQ(code_of([&] { t.add_row({1.0, std::nan(""), 0.0}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { t.add_row({1.0}); }), ErrorCode::DimensionMismatch);
}

TEST(Emit, EmptyTableIsHeaderOnly) {
    EXPECT_EQ(to_csv(ResultTable({"t", "value"})), "t,value\n");
    EXPECT_EQ(to_json(ResultTable({"t", "value"})), "[]\n");
}

TEST(Emit, CsvRoundTrip) {
    const auto table = cmd_figure("fig3a", parse_config("k_steps = 17\n"));
    const auto back = parse_csv(to_csv(table));
    ASSERT_EQ(back.columns(), table.columns());
    ASSERT_EQ(back.rows().size(), table.rows().size());
    for (std::size_t r = 0; r < back.rows().size(); ++r)
        for (std::size_t c = 0; c < back.columns().size(); ++c)
            EXPECT_NEAR(back.rows()[r][c], table.rows()[r][c], 1e-12 * std::max(1.0, std::abs(table.rows()[r][c])));
}

TEST(Emit, JsonRoundTrip) {
    const auto table = cmd_figure("fig2", parse_config("t_steps = 7\n"));
    const auto doc = nlohmann::json::parse(to_json(table));
    ASSERT_EQ(doc.size(), table.rows().size());
    for (std::size_t r = 0; r < doc.size(); ++r)
        for (std::size_t c = 0; c < table.columns().size(); ++c)
            EXPECT_NEAR(doc[r][table.columns()[c]].get<double>(), table.rows()[r][c],
                        1e-11 * std::max(1.0, std::abs(table.rows()[r][c])));
}

TEST(App, ExitCodes) {
    EXPECT_EQ(run_cli({"phases"}).code, kExitOk);
    EXPECT_EQ(run_cli({"figure", "fig9"}).code, kExitConfig);
    EXPECT_EQ(run_cli({"phases", "--format", "xml"}).code, kExitConfig);
    EXPECT_EQ(run_cli({"phases", "--config", write_temp("gravent_bad.cfg", "dist_d = 1\ndist_l = 2\n")}).code,
              kExitConfig);
    EXPECT_EQ(run_cli({"phases", "--config", write_temp("gravent_parse.cfg", "dist_d 2\n")}).code, kExitConfig);
    EXPECT_EQ(run_cli({"phases", "--config", "/nonexistent/gravent.cfg"}).code, kExitIo);
    const auto io = run_cli({"phases", "--output", "/nonexistent/dir/out.csv"});
    EXPECT_EQ(io.code, kExitIo);
    EXPECT_NE(io.err.find("IoError"), std::string::npos);
    EXPECT_EQ(exit_code_for(ErrorCode::SingularGeometry), kExitDomain);
    EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(App, WritesOutputFileAndFormats) {
    const auto path = (std::filesystem::temp_directory_path() / "gravent_phases.json").string();
    std::filesystem::remove(path);
    const auto res = run_cli({"phases", "--output", path, "--format", "json"});
    ASSERT_EQ(res.code, kExitOk);
    EXPECT_TRUE(res.out.empty());
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    EXPECT_NEAR(doc[0]["delta1"].get<double>(), 1.0 / 6.0, 1e-12);
}

TEST(App, DeterministicOutput) {
    const auto cfg = write_temp("gravent_sweep.cfg", "field = overlap\nk_re = 0.5\nt_steps = 6\nk_steps = 4\n");
    const auto a = run_cli({"figure", "fig3b"});
    const auto b = run_cli({"figure", "fig3b"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto s1 = run_cli({"sweep", "--config", cfg, "--jobs", "1"});
    const auto s8 = run_cli({"sweep", "--config", cfg, "--jobs", "8"});
    ASSERT_EQ(s1.code, 0);
    EXPECT_EQ(s1.out, s8.out);
    EXPECT_EQ(s1.out.find('\r'), std::string::npos);
}

TEST(App, ReductionFlagOverridesConfig) {
    const auto paper = run_cli({"figure", "fig3b"});
    const auto gram = run_cli({"figure", "fig3b", "--reduction", "gram"});
    EXPECT_NE(paper.out, gram.out);
}
