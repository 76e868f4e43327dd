// Copyright 2026 The sticksoup Authors
//
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

#pragma once

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests can drive it with in-memory streams.

#include <iosfwd>
#include <string>
#include <vector>

#include "sticksoup/exploration.hpp"
#include "sticksoup/soup.hpp"

namespace sticksoup::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// SVG 1.1 scene: the box outline, one line per clipped stick in stick order,
/// and the exploration path as a thick polyline when given. `comment` is
/// written as an XML comment after the prologue.
void render_svg(std::ostream& os, const Configuration& c, const ExplorationResult* path,
                const Box& box, const std::string& comment = {});

/// Same, written to a file; throws std::runtime_error when it cannot be written.
void render_svg(const Configuration& c, const ExplorationResult* path, const Box& box,
                const std::string& file, const std::string& comment = {});

}  // namespace sticksoup::cli
