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

#include "sticksoup/report.hpp"

#include <algorithm>
#include <cmath>

#include "sticksoup/errors.hpp"

namespace sticksoup {

EstimateReport make_estimate(std::int64_t successes, std::int64_t n_trials,
                             std::uint64_t master_seed, nlohmann::json params) {
  if (n_trials <= 0) throw ArgumentError("an estimate needs at least one trial");
  if (successes < 0 || successes > n_trials) throw ArgumentError("successes out of range");
  EstimateReport r;
  r.n_trials = n_trials;
  r.successes = successes;
  r.master_seed = master_seed;
  r.params = std::move(params);
  const double n = static_cast<double>(n_trials);
  const double p = static_cast<double>(successes) / n;
  r.estimate = p;
  r.std_error = std::sqrt(p * (1.0 - p) / n);
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  r.ci_low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  r.ci_high = successes == n_trials ? 1.0 : std::min(1.0, center + half);
  return r;
}

nlohmann::json to_json(const EstimateReport& r) {
  return {{"n_trials", r.n_trials}, {"successes", r.successes},   {"estimate", r.estimate},
          {"std_error", r.std_error}, {"ci_low", r.ci_low},       {"ci_high", r.ci_high},
          {"master_seed", r.master_seed}, {"params", r.params}};
}

}  // namespace sticksoup
