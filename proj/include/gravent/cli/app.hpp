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

#ifndef GRAVENT_CLI_APP_HPP
#define GRAVENT_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gravent/error.hpp"

namespace gravent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

int exit_code_for(ErrorCode code);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gravent::cli

#endif  // GRAVENT_CLI_APP_HPP
