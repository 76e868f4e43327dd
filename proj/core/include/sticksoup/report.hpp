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

#include <cstdint>

#include <nlohmann/json.hpp>

namespace sticksoup {

/// A Monte Carlo proportion with its 95% Wilson score interval.
struct EstimateReport {
  std::int64_t n_trials = 0;
  std::int64_t successes = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t master_seed = 0;
  nlohmann::json params = nlohmann::json::object();
};

inline constexpr double kZ95 = 1.959963984540054;

EstimateReport make_estimate(std::int64_t successes, std::int64_t n_trials,
                             std::uint64_t master_seed,
                             nlohmann::json params = nlohmann::json::object());

nlohmann::json to_json(const EstimateReport& r);

}  // namespace sticksoup
