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

#include "gravent/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "gravent/error.hpp"
#include "gravent/measures.hpp"
#include "gravent/oracles.hpp"
#include "gravent/teleport.hpp"

namespace gravent::cli {

namespace {

ResultTable collect(std::vector<std::string> columns, std::vector<std::vector<double>> rows) {
    ResultTable table(std::move(columns));
    for (auto &row : rows) table.add_row(std::move(row));
    return table;
}

std::vector<double> time_grid(const RunConfig &cfg, double period) {
    return linspace(cfg.t_min, cfg.t_max.value_or(cfg.t_min + 2.0 * period), cfg.t_steps);
}

std::vector<double> k_grid(const RunConfig &cfg) { return linspace(cfg.k_min, cfg.k_max, cfg.k_steps); }

// Direction of the configured overlap; k sweeps scale its magnitude.
Complex k_direction(const RunConfig &cfg) {
    const Complex k{cfg.k_re, cfg.k_im};
    return std::abs(k) > 0.0 ? k / std::abs(k) : Complex{1.0, 0.0};
}

FieldModel field_at(const RunConfig &cfg, double kmag) {
    if (cfg.field != FieldModel::Kind::Overlap) return cfg.field_model();
    return FieldModel::overlap(kmag * k_direction(cfg), cfg.reduction);
}

double oracle_mutual_info(const PureBipartiteState &s, const PhaseSet &p, double t, const FieldModel &field) {
    switch (field.kind) {
        case FieldModel::Kind::Separable: return oracles::mutual_info_pure(oracles::spectrum_from_k(oracles::k1(s, p, t)));
        case FieldModel::Kind::Orthogonal: return oracles::ige_closed(s);
        case FieldModel::Kind::Overlap: break;
    }
    return oracles::overlap_mutual_info_closed(s, field.k, field.reduction);
}

double oracle_coherence(const PureBipartiteState &s, const FieldModel &field) {
    switch (field.kind) {
        case FieldModel::Kind::Separable: return oracles::coherence_initial(s);
        case FieldModel::Kind::Orthogonal: return 0.0;
        case FieldModel::Kind::Overlap: break;
    }
    return oracles::overlap_coherence_closed(s, field.k, field.reduction);
}

ResultTable figure_fig2(const RunConfig &cfg, std::size_t jobs) {
    const auto p = cfg.phases();
    const auto s = PureBipartiteState::uniform_product();
    const auto ts = time_grid(cfg, p.period12());
    return collect({"t", "phase", "value", "oracle"}, parallel_rows(ts.size(), jobs, [&](std::size_t i) {
                       const double t = ts[i];
                       return std::vector<double>{t, p.angle3(t), mutual_information(evolve_separable(s, p, t).rho),
                                                  oracle_mutual_info(s, p, t, FieldModel::separable())};
                   }));
}

ResultTable figure_fig3(const RunConfig &cfg, const PureBipartiteState &s, bool bell, std::size_t jobs) {
    const auto p = cfg.phases();
    const auto ks = k_grid(cfg);
    return collect({"k", "value", "oracle"}, parallel_rows(ks.size(), jobs, [&](std::size_t i) {
                       const double k = ks[i];
                       const double value = mutual_information(evolve_overlap(s, p, cfg.t_min, k, cfg.reduction).rho);
                       double oracle = 0.0;
                       if (cfg.reduction == Reduction::GramTrace) oracle = oracles::overlap_mutual_info_closed(s, k, cfg.reduction);
                       else oracle = bell ? oracles::igb_closed(k) : oracles::igd_closed(k);
                       return std::vector<double>{k, value, oracle};
                   }));
}

ResultTable figure_fig5a(const RunConfig &cfg, std::size_t jobs) {
    const auto p = cfg.phases();
    const auto ts = time_grid(cfg, p.period3());
    const auto field = FieldModel::separable();
    return collect({"t", "phase", "value", "oracle"}, parallel_rows(ts.size(), jobs, [&](std::size_t i) {
                       const double t = ts[i];
                       return std::vector<double>{t, p.angle3(t),
                                                  averaged_fidelity(p, t, field, FidelityMethod::Quadrature).fbar,
                                                  oracles::fbar_closed(t, p, field)};
                   }));
}

ResultTable figure_fig5b(const RunConfig &cfg, std::size_t jobs) {
    const auto p = cfg.phases();
    const auto ts = time_grid(cfg, p.period3());
    const auto ks = k_grid(cfg);
    return collect({"t", "phase", "k", "value", "oracle"},
                   parallel_rows(ts.size() * ks.size(), jobs, [&](std::size_t i) {
                       const double t = ts[i / ks.size()];
                       const double k = ks[i % ks.size()];
                       const auto field = FieldModel::overlap(k * k_direction(cfg), cfg.reduction);
                       return std::vector<double>{t, p.angle3(t), k,
                                                  averaged_fidelity(p, t, field, FidelityMethod::Quadrature).fbar,
                                                  oracles::fbar_closed(t, p, field)};
                   }));
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
    if (steps == 0) return {};
    if (steps == 1) return {lo};
    std::vector<double> out(steps);
    const double step = (hi - lo) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

std::vector<std::vector<double>> parallel_rows(std::size_t n, std::size_t jobs,
                                               const std::function<std::vector<double>(std::size_t)> &fn) {
    std::vector<std::vector<double>> rows(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

ResultTable cmd_phases(const RunConfig &cfg) {
    const auto g = cfg.gravity();
    const auto h = pair_potentials(g);
    const auto p = phase_gaps(g);
    ResultTable table({"h00", "h01", "h10", "delta1", "delta2", "delta3"});
    table.add_row({h.h00, h.h01, h.h10, p.delta1, p.delta2, p.delta3});
    return table;
}

ResultTable cmd_evolve(const RunConfig &cfg, std::size_t jobs) {
    const auto p = cfg.phases();
    const auto field = cfg.field_model();
    const auto ts = time_grid(cfg, p.period12());
    return collect({"t", "phase", "mutual_info", "coherence", "lam1", "lam2", "lam3", "lam4", "oracle_mutual_info",
                    "oracle_coherence"},
                   parallel_rows(ts.size(), jobs, [&](std::size_t i) {
                       const double t = ts[i];
                       const auto rho = evolve(cfg.state, p, t, field).rho;
                       const auto lam = density_spectrum(rho);
                       return std::vector<double>{t,
                                                  p.angle3(t),
                                                  mutual_information(rho),
                                                  l1_coherence(rho),
                                                  lam[0],
                                                  lam[1],
                                                  lam[2],
                                                  lam[3],
                                                  oracle_mutual_info(cfg.state, p, t, field),
                                                  oracle_coherence(cfg.state, field)};
                   }));
}

ResultTable cmd_sweep(const RunConfig &cfg, std::size_t jobs) {
    const auto p = cfg.phases();
    const auto ts = time_grid(cfg, p.period3());
    const auto ks = k_grid(cfg);
    return collect({"t", "phase", "k", "mutual_info", "coherence", "fbar", "oracle_mutual_info", "oracle_coherence",
                    "oracle_fbar"},
                   parallel_rows(ts.size() * ks.size(), jobs, [&](std::size_t i) {
                       const double t = ts[i / ks.size()];
                       const double k = ks[i % ks.size()];
                       const auto field = field_at(cfg, k);
                       const auto rho = evolve(cfg.state, p, t, field).rho;
                       return std::vector<double>{t,
                                                  p.angle3(t),
                                                  k,
                                                  mutual_information(rho),
                                                  l1_coherence(rho),
                                                  averaged_fidelity(p, t, field, FidelityMethod::Quadrature).fbar,
                                                  oracle_mutual_info(cfg.state, p, t, field),
                                                  oracle_coherence(cfg.state, field),
                                                  oracles::fbar_closed(t, p, field)};
                   }));
}

ResultTable cmd_figure(std::string_view name, const RunConfig &cfg, std::size_t jobs) {
    if (name == "fig2") return figure_fig2(cfg, jobs);
    if (name == "fig3a") return figure_fig3(cfg, PureBipartiteState::uniform_product(), false, jobs);
    if (name == "fig3b") return figure_fig3(cfg, PureBipartiteState::bell(), true, jobs);
    if (name == "fig5a") return figure_fig5a(cfg, jobs);
    if (name == "fig5b") return figure_fig5b(cfg, jobs);
    throw Error(ErrorCode::UnknownFigure,
                "unknown figure '" + std::string(name) + "' (expected fig2, fig3a, fig3b, fig5a or fig5b)");
}

ResultTable cmd_teleport(const RunConfig &cfg, std::size_t jobs) {
    const auto p = cfg.phases();
    const auto field = cfg.field_model();
    const auto q = UnknownQubit::make(cfg.theta, cfg.phi);
    const auto ts = time_grid(cfg, p.period3());
    return collect({"t", "phase", "f00", "f01", "f10", "f11", "fbar_analytic", "fbar_quadrature", "oracle"},
                   parallel_rows(ts.size(), jobs, [&](std::size_t i) {
                       const double t = ts[i];
                       const auto branches = run_teleport_all(q, p, t, field);
                       std::vector<double> row{t, p.angle3(t)};
                       for (const auto &b : branches) row.push_back(branch_fidelity(q, b));
                       row.push_back(averaged_fidelity(p, t, field, FidelityMethod::Analytic).fbar);
                       row.push_back(averaged_fidelity(p, t, field, FidelityMethod::Quadrature).fbar);
                       row.push_back(oracles::fbar_closed(t, p, field));
                       return row;
                   }));
}

}  // namespace gravent::cli
