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

// Seeded Monte Carlo harness: event probabilities with Wilson intervals,
// power-law scans, correlation decay and closed-form cross-checks.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "sticksoup/errors.hpp"
#include "sticksoup/events.hpp"
#include "sticksoup/exploration.hpp"
#include "sticksoup/report.hpp"
#include "sticksoup/rng.hpp"
#include "sticksoup/soup.hpp"

namespace sticksoup {

/// Runs f(i) for i in [0, n) on up to `threads` workers and returns the
/// results in index order.
template <typename T, typename F>
std::vector<T> run_trials(std::int64_t n, int threads, F&& f) {
  std::vector<T> out(static_cast<std::size_t>(n));
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (workers == 1) {
    for (std::int64_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::int64_t i = w; i < n; i += workers) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

/// Draws a configuration for trial `index` and applies `eval` to it. A
/// DegeneracyError triggers a redraw from a derived seed; the number of redraws
/// is added to `redraws`.
template <typename Eval>
auto with_redraws(std::uint64_t master_seed, std::int64_t index, int& redraws, Eval&& eval) {
  constexpr int kMaxRedraws = 16;
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t seed =
        attempt == 0 ? trial_seed(master_seed, static_cast<std::uint64_t>(index))
                     : trial_seed(mix64(master_seed + static_cast<std::uint64_t>(attempt)),
                                  static_cast<std::uint64_t>(index));
    try {
      return eval(seed);
    } catch (const DegeneracyError&) {
      if (attempt + 1 >= kMaxRedraws) throw;
      ++redraws;
    }
  }
}

struct NonemptyEvent {};
struct ArmEventSpec {
  Annulus annulus;
};
struct Lr1EventSpec {
  Box box;
};
/// Vacant left-right crossing of the box, read off the exploration outcome.
struct VacantCrossingSpec {
  Box box;
};
/// Some stick with radius >= min_radius meets the closed disk.
struct HitsDiskSpec {
  Disk disk;
  double min_radius = 0.0;
};
using EventDescriptor =
    std::variant<NonemptyEvent, ArmEventSpec, Lr1EventSpec, VacantCrossingSpec, HitsDiskSpec>;

bool evaluate_event(const EventDescriptor& event, const Configuration& c);
nlohmann::json describe_event(const EventDescriptor& event);

struct TrialOptions {
  int threads = 1;
};

EstimateReport estimate_probability(const EventDescriptor& event, const SoupParams& params,
                                    const DiskWindow& window, double r_min,
                                    std::int64_t n_trials, std::uint64_t master_seed,
                                    const TrialOptions& options = {});

struct LogLinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int rows_used = 0;
};

struct DecayRow {
  int m = 0;       // scale or prefix index
  double x = 0.0;  // regressor: m log 2 for scale scans, m for prefix scans
  EstimateReport estimate;
};

struct DecayReport {
  std::vector<DecayRow> rows;
  std::optional<LogLinearFit> fit;
  std::string fit_error;
  int degenerate_redraws = 0;
  std::uint64_t master_seed = 0;
  nlohmann::json params = nlohmann::json::object();

  /// -slope of the scale fit, the power-law exponent in the radius 2^m.
  double exponent() const;
};

/// Weighted least squares of log P-hat on x with weights n p / (1 - p), the
/// inverse delta-method variance. Rows with fewer than 5 successes are dropped.
std::optional<LogLinearFit> fit_log_linear(const std::vector<DecayRow>& rows,
                                           std::string* error = nullptr);

/// P-hat(Arm(1, 2^m)) for m = 1..m_max on one coupled configuration per trial
/// sampled in the window of radius 2^m_max. Truncated arms lower-bound the
/// untruncated ones, increasingly so as r_min decreases.
DecayReport arm_decay_scan(const SoupParams& params, double r_min, int m_max,
                           std::int64_t n_trials, std::uint64_t master_seed,
                           const TrialOptions& options = {});

/// Probability that the exploration path of the box [-2^m, 2^m]^2 traverses
/// D(0; 1, 2^m) at least k times, for m = 1..m_max and each requested k, from
/// one configuration per trial restricted to each box.
std::vector<DecayReport> h1_scan(const SoupParams& params, double r_min,
                                 const std::vector<int>& ks, int m_max, std::int64_t n_trials,
                                 std::uint64_t master_seed, const TrialOptions& options = {});
DecayReport h1_scan(const SoupParams& params, double r_min, int k, int m_max,
                    std::int64_t n_trials, std::uint64_t master_seed,
                    const TrialOptions& options = {});

/// Arm indicators on the same configurations restricted to each r in `radii`
/// (ascending, the first being the sampling r_min).
struct CoupledArmReport {
  std::vector<double> radii;
  std::vector<EstimateReport> estimates;
  std::int64_t violations = 0;  // trials where a coarser truncation has an arm and a finer one not
};

CoupledArmReport coupled_arm_scan(const SoupParams& params, const Annulus& annulus,
                                  const DiskWindow& window, const std::vector<double>& radii,
                                  std::int64_t n_trials, std::uint64_t master_seed,
                                  const TrialOptions& options = {});

/// An indicator of a configuration that depends only on sticks with radius in
/// [min_radius, max_radius) meeting a region.
struct LocalEvent {
  std::string name;
  double min_radius = 0.0;
  double max_radius = kInfinity;
  std::function<bool(const Segment&)> touches;

  bool operator()(const Configuration& c) const;
};

LocalEvent hits_disk_event(Point center, double radius, double min_radius,
                           double max_radius = kInfinity);
LocalEvent hits_ring_event(Point center, double inner, double outer, double min_radius,
                           double max_radius = kInfinity);

struct CorrelationReport {
  std::int64_t n_trials = 0;
  double mean1 = 0.0;
  double mean2 = 0.0;
  double covariance = 0.0;
  double std_error = 0.0;
  double bound = 0.0;
  bool degenerate = false;  // one indicator was constant
  std::uint64_t master_seed = 0;
  nlohmann::json params = nlohmann::json::object();
};

CorrelationReport correlation_estimate(const LocalEvent& f1, const LocalEvent& f2,
                                       const SoupParams& params, const DiskWindow& window,
                                       double r_min, double l1, double l2, std::int64_t n_trials,
                                       std::uint64_t master_seed, const TrialOptions& options = {});

struct ParkerCowanReport {
  std::int64_t n_trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double oracle = 0.0;
  double z = 0.0;
  std::uint64_t master_seed = 0;
  nlohmann::json params = nlohmann::json::object();
};

/// Mean count of sticks with radius in [r, t) meeting the window disk against
/// the closed form at intensity `oracle_u` (defaults to params.u).
ParkerCowanReport parker_cowan_check(const SoupParams& params, const DiskWindow& window, double r,
                                     double t, std::int64_t n_trials, std::uint64_t master_seed,
                                     std::optional<double> oracle_u = std::nullopt,
                                     const TrialOptions& options = {});

/// P-hat(the last-left suffix of the exploration path hits the first n balls)
/// for n = 0..|balls|, with a log-linear fit over n >= 1; exp(slope) is q-hat.
DecayReport property_void_scan(const SoupParams& params, double r_min,
                               const std::vector<Ball>& balls, std::int64_t n_trials,
                               std::uint64_t master_seed, const Box& box = Box({0, 0}, {1, 1}),
                               const TrialOptions& options = {});

struct DoubleCircleReport {
  std::int64_t n_trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double expected = 0.0;  // u times the double-hit measure
  double relative_error = 0.0;
  std::uint64_t master_seed = 0;
  nlohmann::json params = nlohmann::json::object();
};

/// Mean number of sticks with radius >= r_min meeting the circle of radius
/// `radius` twice.
DoubleCircleReport double_circle_check(const SoupParams& params, double radius, double r_min,
                                       std::int64_t n_trials, std::uint64_t master_seed,
                                       const TrialOptions& options = {});

struct InvasionComparisonRow {
  int t = 0;
  double mean_l = 0.0;
  double se_l = 0.0;
  double mean_y = 0.0;
  double se_y = 0.0;
};

struct InvasionComparison {
  std::vector<InvasionComparisonRow> rows;
  std::int64_t truncated_records = 0;
  std::uint64_t master_seed = 0;
  nlohmann::json params = nlohmann::json::object();
};

/// Sum of the first t invasion steps (fewer when the record is shorter)
/// against t i.i.d. copies of Y at scale m, each from a fresh configuration.
InvasionComparison invasion_comparison(const SoupParams& params, int m, double r_min,
                                       const std::vector<int>& ts, std::int64_t n_invasion,
                                       std::int64_t n_y, std::uint64_t master_seed,
                                       const TrialOptions& options = {});

/// P-hat(Y >= n) at scale j with r_min = 2^(j-3), which is exact for n >= 3,
/// fitted log-linearly in n over the requested values.
DecayReport y_tail_scan(const SoupParams& params, int j, const std::vector<int>& ns,
                        std::int64_t n_trials, std::uint64_t master_seed,
                        const TrialOptions& options = {});

nlohmann::json to_json(const DecayReport& r);
nlohmann::json to_json(const CoupledArmReport& r);
nlohmann::json to_json(const CorrelationReport& r);
nlohmann::json to_json(const ParkerCowanReport& r);
nlohmann::json to_json(const DoubleCircleReport& r);
nlohmann::json to_json(const InvasionComparison& r);

/// CSV with columns m, n_trials, successes, estimate, stderr, ci_lo, ci_hi.
void write_decay_csv(std::ostream& os, const DecayReport& r);

}  // namespace sticksoup
