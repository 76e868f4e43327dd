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

#include "sticksoup/estimators.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "sticksoup/measures.hpp"

namespace sticksoup {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr std::uint64_t kSecondStream = 0x5bd1e9955bd1e995ULL;

void require_trials(std::int64_t n) {
  if (n < 1) throw ArgumentError("at least one trial is required");
}

nlohmann::json soup_json(const SoupParams& p, double r_min) {
  return {{"u", p.u}, {"alpha", p.alpha}, {"r_min", r_min}};
}

struct Outcome {
  std::vector<char> hits;
  int redraws = 0;
};

std::vector<std::int64_t> column_sums(const std::vector<Outcome>& trials, std::size_t width) {
  std::vector<std::int64_t> sums(width, 0);
  for (const Outcome& t : trials) {
    for (std::size_t i = 0; i < width; ++i) sums[i] += t.hits[i] ? 1 : 0;
  }
  return sums;
}

int total_redraws(const std::vector<Outcome>& trials) {
  int total = 0;
  for (const Outcome& t : trials) total += t.redraws;
  return total;
}

void finish_fit(DecayReport& r, const std::vector<DecayRow>& fit_rows) {
  r.fit = fit_log_linear(fit_rows, &r.fit_error);
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

bool evaluate_event(const EventDescriptor& event, const Configuration& c) {
  return std::visit(
      [&](const auto& e) -> bool {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, NonemptyEvent>) {
          return !c.sticks.empty();
        } else if constexpr (std::is_same_v<T, ArmEventSpec>) {
          return arm_event(c, e.annulus);
        } else if constexpr (std::is_same_v<T, Lr1EventSpec>) {
          return lr1_event(c, e.box);
        } else if constexpr (std::is_same_v<T, VacantCrossingSpec>) {
          return explore(c, e.box).result.outcome == ExplorationOutcome::kRight;
        } else {
          for (const Stick& s : c.sticks) {
            if (s.radius() >= e.min_radius &&
                segment_meets_disk(stick_to_segment(s), e.disk.center, e.disk.radius)) {
              return true;
            }
          }
          return false;
        }
      },
      event);
}

nlohmann::json describe_event(const EventDescriptor& event) {
  return std::visit(
      [](const auto& e) -> nlohmann::json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, NonemptyEvent>) {
          return {{"event", "nonempty"}};
        } else if constexpr (std::is_same_v<T, ArmEventSpec>) {
          return {{"event", "arm"},
                  {"cx", e.annulus.center().x},
                  {"cy", e.annulus.center().y},
                  {"l1", e.annulus.inner()},
                  {"l2", e.annulus.outer()}};
        } else if constexpr (std::is_same_v<T, HitsDiskSpec>) {
          return {{"event", "hits_disk"},
                  {"cx", e.disk.center.x},
                  {"cy", e.disk.center.y},
                  {"radius", e.disk.radius},
                  {"min_radius", e.min_radius}};
        } else {
          const char* name = std::is_same_v<T, Lr1EventSpec> ? "lr1" : "vacant_crossing";
          return {{"event", name},
                  {"x0", e.box.min().x},
                  {"y0", e.box.min().y},
                  {"x1", e.box.max().x},
                  {"y1", e.box.max().y}};
        }
      },
      event);
}

EstimateReport estimate_probability(const EventDescriptor& event, const SoupParams& params,
                                    const DiskWindow& window, double r_min,
                                    std::int64_t n_trials, std::uint64_t master_seed,
                                    const TrialOptions& options) {
  require_trials(n_trials);
  params.validate();
  const auto trials = run_trials<Outcome>(n_trials, options.threads, [&](std::int64_t i) {
    Outcome o;
    const bool hit = with_redraws(master_seed, i, o.redraws, [&](std::uint64_t seed) {
      return evaluate_event(event, sample_configuration(params, window, r_min, seed));
    });
    o.hits.push_back(hit ? 1 : 0);
    return o;
  });
  nlohmann::json p = soup_json(params, r_min);
  p["window"] = {{"cx", window.center.x}, {"cy", window.center.y}, {"a", window.radius}};
  p["event"] = describe_event(event);
  p["degenerate_redraws"] = total_redraws(trials);
  return make_estimate(column_sums(trials, 1)[0], n_trials, master_seed, std::move(p));
}

double DecayReport::exponent() const {
  if (!fit) throw ArgumentError("decay report has no fit: " + fit_error);
  return -fit->slope;
}

std::optional<LogLinearFit> fit_log_linear(const std::vector<DecayRow>& rows,
                                           std::string* error) {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> ws;
  for (const DecayRow& r : rows) {
    if (r.estimate.successes < 5) continue;
    const double n = static_cast<double>(r.estimate.n_trials);
    const double p = std::min(r.estimate.estimate, 1.0 - 0.5 / n);
    xs.push_back(r.x);
    ys.push_back(std::log(r.estimate.estimate));
    ws.push_back(n * p / (1.0 - p));
  }
  auto fail = [&](const char* why) -> std::optional<LogLinearFit> {
    if (error) *error = why;
    return std::nullopt;
  };
  if (xs.size() < 2) return fail("fewer than 2 rows with at least 5 successes");

  double w = 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    w += ws[i];
    mx += ws[i] * xs[i];
    my += ws[i] * ys[i];
  }
  mx /= w;
  my /= w;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += ws[i] * (xs[i] - mx) * (xs[i] - mx);
    sxy += ws[i] * (xs[i] - mx) * (ys[i] - my);
    syy += ws[i] * (ys[i] - my) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) return fail("fit rows share a single x value");

  LogLinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double residual = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    residual += ws[i] * e * e;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - residual / syy : 1.0;
  fit.rows_used = static_cast<int>(xs.size());
  if (error) error->clear();
  return fit;
}

DecayReport arm_decay_scan(const SoupParams& params, double r_min, int m_max,
                           std::int64_t n_trials, std::uint64_t master_seed,
                           const TrialOptions& options) {
  require_trials(n_trials);
  if (m_max < 2) throw ArgumentError("arm scan needs m_max >= 2");
  params.validate();
  const DiskWindow window{{0.0, 0.0}, std::ldexp(1.0, m_max)};

  const auto trials = run_trials<Outcome>(n_trials, options.threads, [&](std::int64_t i) {
    Outcome o;
    o.hits = with_redraws(master_seed, i, o.redraws, [&](std::uint64_t seed) {
      const Configuration c = sample_configuration(params, window, r_min, seed);
      std::vector<char> hits;
      for (int m = 1; m <= m_max; ++m) {
        hits.push_back(arm_event(c, Annulus({0.0, 0.0}, 1.0, std::ldexp(1.0, m))) ? 1 : 0);
      }
      return hits;
    });
    return o;
  });

  DecayReport r;
  r.master_seed = master_seed;
  r.params = soup_json(params, r_min);
  r.params["scan"] = "arm";
  r.params["m_max"] = m_max;
  r.params["note"] =
      "truncated arm probabilities bound the untruncated ones from below and increase as r_min "
      "decreases";
  const auto sums = column_sums(trials, static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    r.rows.push_back({m, m * kLn2, make_estimate(sums[m - 1], n_trials, master_seed)});
  }
  r.degenerate_redraws = total_redraws(trials);
  finish_fit(r, r.rows);
  return r;
}

std::vector<DecayReport> h1_scan(const SoupParams& params, double r_min,
                                 const std::vector<int>& ks, int m_max, std::int64_t n_trials,
                                 std::uint64_t master_seed, const TrialOptions& options) {
  require_trials(n_trials);
  if (m_max < 2) throw ArgumentError("H1 scan needs m_max >= 2");
  if (ks.empty()) throw ArgumentError("H1 scan needs at least one k");
  for (int k : ks) {
    if (k < 1) throw ArgumentError("traversal count k must be >= 1");
  }
  params.validate();
  const DiskWindow window{{0.0, 0.0}, std::ldexp(1.0, m_max) * std::numbers::sqrt2};
  const std::size_t width = static_cast<std::size_t>(m_max) * ks.size();

  const auto trials = run_trials<Outcome>(n_trials, options.threads, [&](std::int64_t i) {
    Outcome o;
    o.hits = with_redraws(master_seed, i, o.redraws, [&](std::uint64_t seed) {
      const Configuration c = sample_configuration(params, window, r_min, seed);
      std::vector<char> hits(width, 0);
      for (int m = 1; m <= m_max; ++m) {
        const double half = std::ldexp(1.0, m);
        const Exploration e = explore(c, Box({-half, -half}, {half, half}));
        const int count = count_traversals(e.result.path, Annulus({0.0, 0.0}, 1.0, half)).k;
        for (std::size_t q = 0; q < ks.size(); ++q) {
          hits[q * m_max + (m - 1)] = count >= ks[q] ? 1 : 0;
        }
      }
      return hits;
    });
    return o;
  });

  const auto sums = column_sums(trials, width);
  std::vector<DecayReport> out;
  for (std::size_t q = 0; q < ks.size(); ++q) {
    DecayReport r;
    r.master_seed = master_seed;
    r.params = soup_json(params, r_min);
    r.params["scan"] = "h1";
    r.params["k"] = ks[q];
    r.params["m_max"] = m_max;
    r.params["box"] = "[-2^m, 2^m]^2 per scale, annulus D(0; 1, 2^m)";
    for (int m = 1; m <= m_max; ++m) {
      r.rows.push_back({m, m * kLn2, make_estimate(sums[q * m_max + (m - 1)], n_trials, master_seed)});
    }
    r.degenerate_redraws = total_redraws(trials);
    finish_fit(r, r.rows);
    out.push_back(std::move(r));
  }
  return out;
}

DecayReport h1_scan(const SoupParams& params, double r_min, int k, int m_max,
                    std::int64_t n_trials, std::uint64_t master_seed,
                    const TrialOptions& options) {
  return h1_scan(params, r_min, std::vector<int>{k}, m_max, n_trials, master_seed, options)
      .front();
}

CoupledArmReport coupled_arm_scan(const SoupParams& params, const Annulus& annulus,
                                  const DiskWindow& window, const std::vector<double>& radii,
                                  std::int64_t n_trials, std::uint64_t master_seed,
                                  const TrialOptions& options) {
  require_trials(n_trials);
  if (radii.empty() || !std::is_sorted(radii.begin(), radii.end())) {
    throw ArgumentError("truncation radii must be nonempty and ascending");
  }
  params.validate();
  const auto trials = run_trials<Outcome>(n_trials, options.threads, [&](std::int64_t i) {
    Outcome o;
    const Configuration base =
        sample_configuration(params, window, radii.front(), trial_seed(master_seed, i));
    for (double r : radii) {
      o.hits.push_back(arm_event(restrict_configuration(base, r), annulus) ? 1 : 0);
    }
    return o;
  });

  CoupledArmReport out;
  out.radii = radii;
  const auto sums = column_sums(trials, radii.size());
  for (std::size_t q = 0; q < radii.size(); ++q) {
    out.estimates.push_back(make_estimate(sums[q], n_trials, master_seed,
                                          soup_json(params, radii[q])));
  }
  for (const Outcome& t : trials) {
    for (std::size_t q = 1; q < radii.size(); ++q) {
      if (t.hits[q] && !t.hits[q - 1]) {
        ++out.violations;
        break;
      }
    }
  }
  return out;
}

bool LocalEvent::operator()(const Configuration& c) const {
  for (const Stick& s : c.sticks) {
    if (s.radius() < min_radius || s.radius() >= max_radius) continue;
    if (touches(stick_to_segment(s))) return true;
  }
  return false;
}

LocalEvent hits_disk_event(Point center, double radius, double min_radius, double max_radius) {
  return {"hits_disk", min_radius, max_radius, [center, radius](const Segment& s) {
            return segment_meets_disk(s, center, radius);
          }};
}

LocalEvent hits_ring_event(Point center, double inner, double outer, double min_radius,
                           double max_radius) {
  return {"hits_ring", min_radius, max_radius, [center, inner, outer](const Segment& s) {
            const RadialRange r = radial_range(s, center);
            return r.min <= outer && r.max >= inner;
          }};
}

CorrelationReport correlation_estimate(const LocalEvent& f1, const LocalEvent& f2,
                                       const SoupParams& params, const DiskWindow& window,
                                       double r_min, double l1, double l2, std::int64_t n_trials,
                                       std::uint64_t master_seed, const TrialOptions& options) {
  require_trials(n_trials);
  params.validate();
  const auto trials = run_trials<Outcome>(n_trials, options.threads, [&](std::int64_t i) {
    const Configuration c = sample_configuration(params, window, r_min, trial_seed(master_seed, i));
    return Outcome{{static_cast<char>(f1(c) ? 1 : 0), static_cast<char>(f2(c) ? 1 : 0)}, 0};
  });

  CorrelationReport r;
  r.n_trials = n_trials;
  r.master_seed = master_seed;
  r.bound = decorrelation_bound(params.alpha, params.u, l1, l2);
  r.params = soup_json(params, r_min);
  r.params["f1"] = f1.name;
  r.params["f2"] = f2.name;
  r.params["l1"] = l1;
  r.params["l2"] = l2;
  const auto sums = column_sums(trials, 2);
  const double n = static_cast<double>(n_trials);
  r.mean1 = static_cast<double>(sums[0]) / n;
  r.mean2 = static_cast<double>(sums[1]) / n;
  r.degenerate = sums[0] == 0 || sums[0] == n_trials || sums[1] == 0 || sums[1] == n_trials;
  if (r.degenerate || n_trials < 2) return r;

  std::vector<double> products;
  products.reserve(trials.size());
  for (const Outcome& t : trials) {
    products.push_back((t.hits[0] - r.mean1) * (t.hits[1] - r.mean2));
  }
  const double mean_product = mean_of(products);
  r.covariance = mean_product * n / (n - 1.0);
  r.std_error = sample_sd(products, mean_product) / std::sqrt(n);
  return r;
}

ParkerCowanReport parker_cowan_check(const SoupParams& params, const DiskWindow& window, double r,
                                     double t, std::int64_t n_trials, std::uint64_t master_seed,
                                     std::optional<double> oracle_u,
                                     const TrialOptions& options) {
  require_trials(n_trials);
  if (!(r > 0.0) || !(r < t)) throw ArgumentError("band requires 0 < r < t");
  params.validate();
  const auto counts = run_trials<double>(n_trials, options.threads, [&](std::int64_t i) {
    const Configuration c = sample_configuration(params, window, r, trial_seed(master_seed, i));
    double count = 0.0;
    for (const Stick& s : c.sticks) count += s.radius() < t ? 1.0 : 0.0;
    return count;
  });

  ParkerCowanReport out;
  out.n_trials = n_trials;
  out.master_seed = master_seed;
  out.mean = mean_of(counts);
  out.std_error = sample_sd(counts, out.mean) / std::sqrt(static_cast<double>(n_trials));
  const double a = window.radius;
  out.oracle = expected_count_band_convex(params.alpha, oracle_u.value_or(params.u), r, t,
                                          std::numbers::pi * a * a, 2.0 * std::numbers::pi * a);
  out.z = out.std_error > 0.0 ? (out.mean - out.oracle) / out.std_error : 0.0;
  out.params = soup_json(params, r);
  out.params["t"] = t;
  out.params["window_a"] = a;
  out.params["oracle_u"] = oracle_u.value_or(params.u);
  return out;
}

DecayReport property_void_scan(const SoupParams& params, double r_min,
                               const std::vector<Ball>& balls, std::int64_t n_trials,
                               std::uint64_t master_seed, const Box& box,
                               const TrialOptions& options) {
  require_trials(n_trials);
  params.validate();
  for (std::size_t i = 0; i < balls.size(); ++i) {
    if (!(balls[i].radius > 0.0)) throw ArgumentError("ball radii must be positive");
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      if (distance(balls[i].center, balls[j].center) <= 2.0 * (balls[i].radius + balls[j].radius)) {
        throw ArgumentError("balls " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not 2-separated");
      }
    }
  }
  const DiskWindow window{box.center(), 0.5 * box.diagonal()};
  const std::size_t width = balls.size() + 1;

  const auto trials = run_trials<Outcome>(n_trials, options.threads, [&](std::int64_t i) {
    Outcome o;
    o.hits = with_redraws(master_seed, i, o.redraws, [&](std::uint64_t seed) {
      const Configuration c = sample_configuration(params, window, r_min, seed);
      const Polyline suffix = last_left_subpath(explore(c, box).result, box);
      std::vector<char> prefix(width, 0);
      prefix[0] = 1;
      for (std::size_t n = 1; n < width; ++n) {
        if (!hits_all_balls(suffix, std::span<const Ball>(&balls[n - 1], 1))) break;
        prefix[n] = 1;
      }
      return prefix;
    });
    return o;
  });

  DecayReport r;
  r.master_seed = master_seed;
  r.params = soup_json(params, r_min);
  r.params["scan"] = "void";
  nlohmann::json jb = nlohmann::json::array();
  for (const Ball& b : balls) jb.push_back({b.center.x, b.center.y, b.radius});
  r.params["balls"] = jb;
  const auto sums = column_sums(trials, width);
  for (std::size_t n = 0; n < width; ++n) {
    r.rows.push_back({static_cast<int>(n), static_cast<double>(n),
                      make_estimate(sums[n], n_trials, master_seed)});
  }
  r.degenerate_redraws = total_redraws(trials);
  finish_fit(r, std::vector<DecayRow>(r.rows.begin() + 1, r.rows.end()));
  return r;
}

DoubleCircleReport double_circle_check(const SoupParams& params, double radius, double r_min,
                                       std::int64_t n_trials, std::uint64_t master_seed,
                                       const TrialOptions& options) {
  require_trials(n_trials);
  params.validate();
  const DiskWindow window{{0.0, 0.0}, radius};
  const auto counts = run_trials<double>(n_trials, options.threads, [&](std::int64_t i) {
    const Configuration c = sample_circle_hits(params, window, r_min, trial_seed(master_seed, i));
    return static_cast<double>(double_intersection_count(c, radius));
  });
  DoubleCircleReport out;
  out.n_trials = n_trials;
  out.master_seed = master_seed;
  out.mean = mean_of(counts);
  out.std_error = sample_sd(counts, out.mean) / std::sqrt(static_cast<double>(n_trials));
  out.expected = params.u * mu_double_circle(params.alpha).value() *
                 std::pow(radius, 2.0 - params.alpha);
  out.relative_error = std::abs(out.mean - out.expected) / out.expected;
  out.params = soup_json(params, r_min);
  out.params["radius"] = radius;
  return out;
}

InvasionComparison invasion_comparison(const SoupParams& params, int m, double r_min,
                                       const std::vector<int>& ts, std::int64_t n_invasion,
                                       std::int64_t n_y, std::uint64_t master_seed,
                                       const TrialOptions& options) {
  require_trials(n_invasion);
  require_trials(n_y);
  params.validate();
  const DiskWindow window{{0.0, 0.0}, std::ldexp(1.0, m)};

  const auto records = run_trials<InvasionRecord>(n_invasion, options.threads, [&](std::int64_t i) {
    return invasion_sequence(sample_configuration(params, window, r_min, trial_seed(master_seed, i)), m);
  });
  const std::uint64_t y_seed = mix64(master_seed ^ kSecondStream);
  const auto ys = run_trials<double>(n_y, options.threads, [&](std::int64_t i) {
    int unused = 0;
    return static_cast<double>(with_redraws(y_seed, i, unused, [&](std::uint64_t seed) {
      return y_statistic(sample_configuration(params, window, r_min, seed), m);
    }));
  });

  InvasionComparison out;
  out.master_seed = master_seed;
  out.params = soup_json(params, r_min);
  out.params["m"] = m;
  out.params["n_invasion"] = n_invasion;
  out.params["n_y"] = n_y;
  for (const InvasionRecord& rec : records) out.truncated_records += rec.truncated ? 1 : 0;

  const double mean_y = mean_of(ys);
  const double sd_y = sample_sd(ys, mean_y);
  for (int t : ts) {
    if (t < 1) throw ArgumentError("comparison lengths must be >= 1");
    std::vector<double> sums;
    sums.reserve(records.size());
    for (const InvasionRecord& rec : records) {
      double s = 0.0;
      for (std::size_t j = 0; j < rec.steps.size() && j < static_cast<std::size_t>(t); ++j) {
        s += rec.steps[j];
      }
      sums.push_back(s);
    }
    InvasionComparisonRow row;
    row.t = t;
    row.mean_l = mean_of(sums);
    row.se_l = sample_sd(sums, row.mean_l) / std::sqrt(static_cast<double>(sums.size()));
    row.mean_y = t * mean_y;
    row.se_y = std::sqrt(static_cast<double>(t)) * sd_y / std::sqrt(static_cast<double>(n_y));
    out.rows.push_back(row);
  }
  return out;
}

DecayReport y_tail_scan(const SoupParams& params, int j, const std::vector<int>& ns,
                        std::int64_t n_trials, std::uint64_t master_seed,
                        const TrialOptions& options) {
  require_trials(n_trials);
  params.validate();
  const DiskWindow window{{0.0, 0.0}, std::ldexp(1.0, j)};
  const double r_min = std::ldexp(1.0, j - 3);
  const auto trials = run_trials<Outcome>(n_trials, options.threads, [&](std::int64_t i) {
    Outcome o;
    const int y = with_redraws(master_seed, i, o.redraws, [&](std::uint64_t seed) {
      return y_statistic(sample_configuration(params, window, r_min, seed), j);
    });
    for (int n : ns) o.hits.push_back(y >= n ? 1 : 0);
    return o;
  });

  DecayReport r;
  r.master_seed = master_seed;
  r.params = soup_json(params, r_min);
  r.params["scan"] = "y_tail";
  r.params["j"] = j;
  const auto sums = column_sums(trials, ns.size());
  for (std::size_t q = 0; q < ns.size(); ++q) {
    r.rows.push_back({ns[q], static_cast<double>(ns[q]), make_estimate(sums[q], n_trials, master_seed)});
  }
  r.degenerate_redraws = total_redraws(trials);
  finish_fit(r, r.rows);
  return r;
}

nlohmann::json to_json(const DecayReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const DecayRow& row : r.rows) {
    nlohmann::json j = to_json(row.estimate);
    j.erase("params");
    j.erase("master_seed");
    j["m"] = row.m;
    j["x"] = row.x;
    rows.push_back(std::move(j));
  }
  nlohmann::json out{{"rows", rows},
                     {"degenerate_redraws", r.degenerate_redraws},
                     {"master_seed", r.master_seed},
                     {"params", r.params}};
  if (r.fit) {
    out["fit"] = {{"slope", r.fit->slope},
                  {"intercept", r.fit->intercept},
                  {"r_squared", r.fit->r_squared},
                  {"rows_used", r.fit->rows_used}};
  } else {
    out["fit"] = nullptr;
    out["fit_error"] = r.fit_error;
  }
  return out;
}

nlohmann::json to_json(const CoupledArmReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < r.radii.size(); ++i) {
    nlohmann::json j = to_json(r.estimates[i]);
    j["r"] = r.radii[i];
    rows.push_back(std::move(j));
  }
  return {{"rows", rows}, {"violations", r.violations}};
}

nlohmann::json to_json(const CorrelationReport& r) {
  return {{"n_trials", r.n_trials}, {"mean1", r.mean1},       {"mean2", r.mean2},
          {"covariance", r.covariance}, {"std_error", r.std_error}, {"bound", r.bound},
          {"degenerate", r.degenerate}, {"master_seed", r.master_seed}, {"params", r.params}};
}

nlohmann::json to_json(const ParkerCowanReport& r) {
  return {{"n_trials", r.n_trials}, {"mean", r.mean}, {"std_error", r.std_error},
          {"oracle", r.oracle},     {"z", r.z},       {"master_seed", r.master_seed},
          {"params", r.params}};
}

nlohmann::json to_json(const DoubleCircleReport& r) {
  return {{"n_trials", r.n_trials}, {"mean", r.mean}, {"std_error", r.std_error},
          {"expected", r.expected}, {"relative_error", r.relative_error},
          {"master_seed", r.master_seed}, {"params", r.params}};
}

nlohmann::json to_json(const InvasionComparison& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"t", row.t}, {"mean_l", row.mean_l}, {"se_l", row.se_l},
                    {"mean_y", row.mean_y}, {"se_y", row.se_y}});
  }
  return {{"rows", rows}, {"truncated_records", r.truncated_records},
          {"master_seed", r.master_seed}, {"params", r.params}};
}

void write_decay_csv(std::ostream& os, const DecayReport& r) {
  os << "m,n_trials,successes,estimate,stderr,ci_lo,ci_hi\n";
  for (const DecayRow& row : r.rows) {
    const EstimateReport& e = row.estimate;
    os << row.m << ',' << e.n_trials << ',' << e.successes << ','
       << nlohmann::json(e.estimate).dump() << ',' << nlohmann::json(e.std_error).dump() << ','
       << nlohmann::json(e.ci_low).dump() << ',' << nlohmann::json(e.ci_high).dump() << '\n';
  }
}

}  // namespace sticksoup
