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

#include "gravent/cli/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "gravent/error.hpp"

namespace gravent::cli {

namespace {

// Amplitudes typed by hand rarely normalize to 1e-12; within this slack
// they are renormalized, beyond it rejected.
constexpr double kStateNormSlack = 1e-6;

const std::set<std::string, std::less<>> kKeys = {
    "units", "g",     "hbar",  "mass_a", "mass_b", "dist_d",  "dist_l", "state",   "alpha",   "beta",  "gamma",
    "delta", "field", "k_re",  "k_im",   "reduction", "t_min", "t_max", "t_steps", "k_min",   "k_max", "k_steps",
    "theta", "phi",   "output", "format"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string &msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void invalid(const std::string &field, const std::string &msg) {
    throw Error(ErrorCode::ValidationError, field + ": " + msg);
}

double to_double(std::string_view text, std::size_t line, std::string_view key) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        parse_fail(line, std::string(key) + ": expected a number, got '" + std::string(text) + "'");
    }
    return v;
}

std::size_t to_count(std::string_view text, std::size_t line, std::string_view key) {
    text = trim(text);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        parse_fail(line, std::string(key) + ": expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return v;
}

// "re, im" or a bare real part.
Complex to_complex(std::string_view text, std::size_t line, std::string_view key) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return {to_double(text, line, key), 0.0};
    return {to_double(text.substr(0, comma), line, key), to_double(text.substr(comma + 1), line, key)};
}

std::string unquote(std::string_view v) {
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return std::string(v.substr(1, v.size() - 2));
    return std::string(v);
}

void require_positive(double v, const char *field) {
    if (!(v > 0.0)) invalid(field, "must be positive");
}

}  // namespace

GravityConfig RunConfig::gravity() const {
    GravityConfig g_cfg = units == UnitSystem::SI ? GravityConfig::si(mass_a, mass_b, dist_d, dist_l)
                                                  : GravityConfig::dimensionless(mass_a, mass_b, dist_d, dist_l);
    if (g) g_cfg.G = *g;
    if (hbar) g_cfg.hbar = *hbar;
    return g_cfg;
}

PhaseSet RunConfig::phases() const { return phase_gaps(gravity()); }

FieldModel RunConfig::field_model() const {
    switch (field) {
        case FieldModel::Kind::Separable: return FieldModel::separable();
        case FieldModel::Kind::Orthogonal: return FieldModel::orthogonal();
        case FieldModel::Kind::Overlap: break;
    }
    return FieldModel::overlap(Complex{k_re, k_im}, reduction);
}

Reduction parse_reduction(std::string_view name) {
    if (name == "paper") return Reduction::PaperLiteral;
    if (name == "gram") return Reduction::GramTrace;
    invalid("reduction", "expected paper or gram, got '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    invalid("format", "expected csv or json, got '" + std::string(name) + "'");
}

void validate_config(const RunConfig &cfg) {
    if (cfg.g) require_positive(*cfg.g, "g");
    if (cfg.hbar) require_positive(*cfg.hbar, "hbar");
    require_positive(cfg.mass_a, "mass_a");
    require_positive(cfg.mass_b, "mass_b");
    require_positive(cfg.dist_d, "dist_d");
    require_positive(cfg.dist_l, "dist_l");
    if (!(cfg.dist_d > cfg.dist_l)) invalid("dist_d", "d must exceed L");

    if (std::abs(Complex{cfg.k_re, cfg.k_im}) > 1.0 + 1e-12) invalid("k_re", "overlap magnitude > 1");

    if (cfg.t_steps < 1) invalid("t_steps", "must be at least 1");
    if (cfg.k_steps < 1) invalid("k_steps", "must be at least 1");
    if (cfg.t_min < 0.0) invalid("t_min", "must be non-negative");
    if (cfg.t_max && *cfg.t_max < cfg.t_min) invalid("t_max", "must not be below t_min");
    if (cfg.k_min < 0.0 || cfg.k_max > 1.0) invalid("k_min", "overlap grid must lie in [0, 1]");
    if (cfg.k_max < cfg.k_min) invalid("k_max", "must not be below k_min");

    if (!(cfg.theta >= 0.0 && cfg.theta <= std::numbers::pi)) invalid("theta", "must lie in [0, pi]");
    if (!(cfg.phi >= 0.0 && cfg.phi < 2.0 * std::numbers::pi)) invalid("phi", "must lie in [0, 2 pi)");
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::array<std::optional<Complex>, 4> amps;
    constexpr std::array<std::string_view, 4> kAmpKeys{"alpha", "beta", "gamma", "delta"};

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) parse_fail(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) parse_fail(line_no, "missing key");
        if (!kKeys.contains(key)) parse_fail(line_no, "unknown key '" + std::string(key) + "'");
        if (!seen.insert(std::string(key)).second) parse_fail(line_no, "duplicate key '" + std::string(key) + "'");
        if (value.empty()) parse_fail(line_no, std::string(key) + ": missing value");

        if (key == "units") {
            if (value == "si") cfg.units = UnitSystem::SI;
            else if (value == "dimensionless") cfg.units = UnitSystem::Dimensionless;
            else parse_fail(line_no, "units: expected si or dimensionless");
        } else if (key == "g") {
            cfg.g = to_double(value, line_no, key);
        } else if (key == "hbar") {
            cfg.hbar = to_double(value, line_no, key);
        } else if (key == "mass_a") {
            cfg.mass_a = to_double(value, line_no, key);
        } else if (key == "mass_b") {
            cfg.mass_b = to_double(value, line_no, key);
        } else if (key == "dist_d") {
            cfg.dist_d = to_double(value, line_no, key);
        } else if (key == "dist_l") {
            cfg.dist_l = to_double(value, line_no, key);
        } else if (key == "state") {
            if (value != "bell" && value != "uniform" && value != "custom")
                parse_fail(line_no, "state: expected bell, uniform or custom");
            cfg.state_name = std::string(value);
        } else if (key == "field") {
            if (value == "separable") cfg.field = FieldModel::Kind::Separable;
            else if (value == "orthogonal") cfg.field = FieldModel::Kind::Orthogonal;
            else if (value == "overlap") cfg.field = FieldModel::Kind::Overlap;
            else parse_fail(line_no, "field: expected separable, orthogonal or overlap");
        } else if (key == "k_re") {
            cfg.k_re = to_double(value, line_no, key);
        } else if (key == "k_im") {
            cfg.k_im = to_double(value, line_no, key);
        } else if (key == "reduction") {
            if (value != "paper" && value != "gram") parse_fail(line_no, "reduction: expected paper or gram");
            cfg.reduction = parse_reduction(value);
        } else if (key == "t_min") {
            cfg.t_min = to_double(value, line_no, key);
        } else if (key == "t_max") {
            cfg.t_max = to_double(value, line_no, key);
        } else if (key == "t_steps") {
            cfg.t_steps = to_count(value, line_no, key);
        } else if (key == "k_min") {
            cfg.k_min = to_double(value, line_no, key);
        } else if (key == "k_max") {
            cfg.k_max = to_double(value, line_no, key);
        } else if (key == "k_steps") {
            cfg.k_steps = to_count(value, line_no, key);
        } else if (key == "theta") {
            cfg.theta = to_double(value, line_no, key);
        } else if (key == "phi") {
            cfg.phi = to_double(value, line_no, key);
        } else if (key == "output") {
            cfg.output = unquote(value);
        } else if (key == "format") {
            if (value != "csv" && value != "json") parse_fail(line_no, "format: expected csv or json");
            cfg.format = parse_format(value);
        } else {
            for (std::size_t i = 0; i < 4; ++i)
                if (key == kAmpKeys[i]) amps[i] = to_complex(value, line_no, key);
        }
    }

    const bool any_amp = amps[0] || amps[1] || amps[2] || amps[3];
    if (any_amp && !seen.contains("state")) cfg.state_name = "custom";
    if (cfg.state_name == "custom") {
        if (!any_amp) invalid("state", "custom state needs alpha, beta, gamma, delta");
        const Complex a = amps[0].value_or(0.0), b = amps[1].value_or(0.0), c = amps[2].value_or(0.0),
                      d = amps[3].value_or(0.0);
        const double norm = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
        if (std::abs(norm - 1.0) > kStateNormSlack) {
            std::ostringstream msg;
            msg << "amplitudes have norm " << norm << ", expected 1";
            invalid("state", msg.str());
        }
        cfg.state = PureBipartiteState::make(a / norm, b / norm, c / norm, d / norm);
    } else {
        if (any_amp) invalid("state", "amplitudes given for a named state");
        cfg.state = cfg.state_name == "bell" ? PureBipartiteState::bell() : PureBipartiteState::uniform_product();
    }

    validate_config(cfg);
    return cfg;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace gravent::cli
