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

#ifndef GRAVENT_CLI_CONFIG_HPP
#define GRAVENT_CLI_CONFIG_HPP

// Flat `key = value` run configuration.
//
//   # comment
//   units = dimensionless     # or si
//   mass_a = 1
//   dist_d = 2
//   state = bell              # bell | uniform | custom
//   alpha = 0.5, 0            # re, im (custom states)
//   field = overlap           # separable | orthogonal | overlap
//   k_re = 0.5
//
// Unknown or repeated keys are parse errors; constraint violations are
// validation errors naming the offending field.

#include <optional>
#include <string>
#include <string_view>

#include "gravent/bmv_protocol.hpp"
#include "gravent/gravity_model.hpp"

namespace gravent::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    UnitSystem units = UnitSystem::Dimensionless;
    std::optional<double> g;     // defaults to 1, or the SI constant
    std::optional<double> hbar;  // likewise
    double mass_a = 1.0;
    double mass_b = 1.0;
    double dist_d = 2.0;
    double dist_l = 1.0;

    std::string state_name = "bell";
    PureBipartiteState state = PureBipartiteState::bell();

    FieldModel::Kind field = FieldModel::Kind::Separable;
    double k_re = 0.0;
    double k_im = 0.0;
    Reduction reduction = Reduction::PaperLiteral;

    double t_min = 0.0;
    std::optional<double> t_max;  // commands pick two periods when unset
    std::size_t t_steps = 101;
    double k_min = 0.0;
    double k_max = 1.0;
    std::size_t k_steps = 11;

    double theta = 1.5707963267948966;  // unknown qubit for `teleport`
    double phi = 0.0;

    std::string output;  // empty: standard output
    OutputFormat format = OutputFormat::Csv;

    GravityConfig gravity() const;
    PhaseSet phases() const;
    FieldModel field_model() const;
};

/// Throws Error(ParseError) with the line number, or Error(ValidationError).
RunConfig parse_config(std::string_view text);

/// Reads and parses a file; Error(IoError) if it cannot be read.
RunConfig load_config(const std::string &path);

/// Re-checks cross-field constraints; used after command-line overrides.
void validate_config(const RunConfig &cfg);

Reduction parse_reduction(std::string_view name);
OutputFormat parse_format(std::string_view name);

}  // namespace gravent::cli

#endif  // GRAVENT_CLI_CONFIG_HPP
