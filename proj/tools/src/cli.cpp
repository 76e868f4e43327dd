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

#include "sticksoup/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sticksoup/errors.hpp"
#include "sticksoup/estimators.hpp"
#include "sticksoup/events.hpp"
#include "sticksoup/measures.hpp"
#include "sticksoup/version.hpp"

namespace sticksoup::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Param {
  std::string name;
  std::string fallback;
  std::string help;
};

using Values = std::map<std::string, std::string>;

// The fully resolved RunConfig of one command.
class Settings {
 public:
  Settings(std::string command, Values values)
      : command_(std::move(command)), values_(std::move(values)) {}

  const std::string& command() const { return command_; }
  const std::string& text(const std::string& key) const { return values_.at(key); }

  double real(const std::string& key) const {
    const std::string& s = text(key);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
      throw ArgumentError("--" + key + " expects a number, got '" + s + "'");
    }
    return v;
  }

  std::int64_t integer(const std::string& key) const { return parse_int<std::int64_t>(key); }
  std::uint64_t seed(const std::string& key) const { return parse_int<std::uint64_t>(key); }

  bool flag(const std::string& key) const {
    const std::string& s = text(key);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ArgumentError("--" + key + " expects true or false, got '" + s + "'");
  }

  nlohmann::json json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : values_) j[k] = v;
    return j;
  }

 private:
  template <typename Int>
  Int parse_int(const std::string& key) const {
    const std::string& s = text(key);
    Int v{};
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw ArgumentError("--" + key + " expects an integer, got '" + s + "'");
    }
    return v;
  }

  std::string command_;
  Values values_;
};

using Action = std::function<void(const Settings&, std::ostream& out, std::ostream& err)>;

struct Leaf {
  std::string command;
  CLI::App* app = nullptr;
  std::vector<Param> params;
  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;
  CLI::Option* config = nullptr;
  Action action;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Flat `key = value` lines; `#` starts a comment.
Values read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file '" + path + "'");
  Values values;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string key = eq == std::string::npos ? std::string() : trim(line.substr(0, eq));
    if (key.empty()) {
      throw ArgumentError(path + ":" + std::to_string(number) + ": expected 'key = value'");
    }
    if (!values.emplace(key, trim(line.substr(eq + 1))).second) {
      throw ArgumentError(path + ":" + std::to_string(number) + ": duplicate key '" + key + "'");
    }
  }
  return values;
}

Settings resolve(const Leaf& leaf) {
  Values file;
  if (leaf.config->count() > 0) file = read_config_file(leaf.config_path);
  for (const auto& [key, value] : file) {
    const bool known = std::any_of(leaf.params.begin(), leaf.params.end(),
                                   [&](const Param& p) { return p.name == key; });
    if (!known) throw ArgumentError("unknown config key '" + key + "' for " + leaf.command);
  }
  Values values;
  for (const Param& p : leaf.params) {
    if (leaf.options.at(p.name)->count() > 0) {
      values[p.name] = leaf.raw.at(p.name);
    } else if (auto it = file.find(p.name); it != file.end()) {
      values[p.name] = it->second;
    } else {
      values[p.name] = p.fallback;
    }
  }
  return Settings(leaf.command, std::move(values));
}

// Destination named by --out: "-" is the caller's stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  void close() {
    stream_->flush();
    if (!*stream_) throw IoError("write to '" + path_ + "' failed");
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

nlohmann::json header(const Settings& s) {
  return {{"command", s.command()}, {"version", kVersion}, {"config", s.json()}};
}

void emit_json(const Settings& s, std::ostream& out, const nlohmann::json& body) {
  nlohmann::json j = header(s);
  j.update(body);
  Output o(s.text("out"), out);
  o.stream() << j.dump(2) << '\n';
  o.close();
}

void emit_scan(const Settings& s, std::ostream& out, const DecayReport& r) {
  const std::string& format = s.text("format");
  if (format == "json") {
    emit_json(s, out, {{"report", to_json(r)}});
  } else if (format == "csv") {
    Output o(s.text("out"), out);
    o.stream() << "# sticksoup " << kVersion << '\n'
               << "# command " << s.command() << '\n'
               << "# config " << s.json().dump() << '\n';
    write_decay_csv(o.stream(), r);
    o.close();
  } else {
    throw ArgumentError("--format must be json or csv, got '" + format + "'");
  }
}

SoupParams soup_params(const Settings& s) {
  SoupParams p{s.real("u"), s.real("alpha"), s.seed("seed")};
  p.validate();
  return p;
}

TrialOptions trial_options(const Settings& s) {
  const std::int64_t threads = s.integer("threads");
  if (threads < 1 || threads > 1024) throw ArgumentError("--threads must be in [1, 1024]");
  return {static_cast<int>(threads)};
}

std::int64_t trials(const Settings& s) {
  const std::int64_t n = s.integer("trials");
  if (n < 1) throw ArgumentError("--trials must be >= 1");
  return n;
}

void warn_supercritical(const Settings& s, std::ostream& err) {
  if (s.real("u") > 0.5) {
    err << "warning: u = " << s.text("u")
        << " may exceed the critical intensity; arm and crossing estimates can saturate\n";
  }
}

Box box_of(const Settings& s) {
  return Box({s.real("x0"), s.real("y0")}, {s.real("x1"), s.real("y1")});
}

std::vector<double> number_list(const std::string& text, char sep, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw ArgumentError(what + ": cannot parse '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Ball> parse_balls(const std::string& text) {
  std::vector<Ball> balls;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto v = number_list(item, ',', "--balls");
    if (v.size() != 3) throw ArgumentError("--balls entries are x,y,r separated by ';'");
    balls.push_back({{v[0], v[1]}, v[2]});
  }
  return balls;
}

// Loads --in when given, otherwise samples the soup in the disk circumscribing the box.
Configuration scene(const Settings& s, const Box& box) {
  const std::string& in = s.text("in");
  if (!in.empty()) {
    std::ifstream f(in);
    if (!f) throw IoError("cannot read '" + in + "'");
    return read_configuration_jsonl(f);
  }
  return sample_configuration(soup_params(s), {box.center(), 0.5 * box.diagonal()}, s.real("rmin"),
                              s.seed("seed"));
}

nlohmann::json path_json(const ExplorationResult& r) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Point& p : r.path.vertices()) vertices.push_back({p.x, p.y});
  return {{"outcome", r.outcome == ExplorationOutcome::kTop ? "top" : "right"},
          {"vertices", vertices},
          {"sticks_touched", r.sticks_touched},
          {"length", r.path.length()}};
}

// Common parameter groups.
std::vector<Param> soup_group(const char* u, const char* rmin) {
  return {{"u", u, "intensity"}, {"alpha", "2", "tail exponent"}, {"rmin", rmin, "truncation radius"}};
}
std::vector<Param> run_group(const char* trials_default) {
  return {{"trials", trials_default, "number of trials"},
          {"seed", "1", "master seed"},
          {"threads", "1", "worker threads (results do not depend on it)"},
          {"out", "-", "output path, - for standard output"}};
}
std::vector<Param> box_group() {
  return {{"x0", "0", "box min x"}, {"y0", "0", "box min y"}, {"x1", "1", "box max x"}, {"y1", "1", "box max y"}};
}
std::vector<Param> join(std::initializer_list<std::vector<Param>> groups) {
  std::vector<Param> out;
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

constexpr const char* kDefaultBalls =
    "0.08,0.15,0.05;0.29,0.15,0.05;0.5,0.15,0.05;0.71,0.15,0.05;0.92,0.15,0.05";

class Program {
 public:
  Program() : app_("Simulation and verification of Poisson stick soups", "sticksoup") {
    app_.require_subcommand(1);
    app_.set_version_flag("--version", kVersion);
    app_.failure_message(CLI::FailureMessage::help);
    build();
  }

  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app_.parse(reversed);
    } catch (const CLI::ParseError& e) {
      return app_.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }
    const Leaf* leaf = nullptr;
    for (const auto& l : leaves_) {
      if (l->app->parsed()) leaf = l.get();
    }
    if (!leaf) {
      err << app_.help();
      return kExitUsage;
    }
    try {
      const Settings settings = resolve(*leaf);
      leaf->action(settings, out, err);
      return kExitOk;
    } catch (const ArgumentError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const InfiniteMeasureError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const DegeneracyError& e) {
      err << "degenerate configuration: " << e.what() << '\n';
      return kExitRuntime;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitRuntime;
    }
  }

 private:
  void add(CLI::App* parent, const std::string& name, const std::string& command,
           const std::string& description, std::vector<Param> params, Action action) {
    auto leaf = std::make_unique<Leaf>();
    leaf->command = command;
    leaf->app = parent->add_subcommand(name, description);
    leaf->params = std::move(params);
    leaf->action = std::move(action);
    for (const Param& p : leaf->params) {
      leaf->options[p.name] =
          leaf->app->add_option("--" + p.name, leaf->raw[p.name], p.help + " [" + p.fallback + "]");
    }
    leaf->config = leaf->app->add_option("--config", leaf->config_path,
                                         "key = value file; flags override its entries");
    leaves_.push_back(std::move(leaf));
  }

  void build() {
    add(&app_, "sample", "sample", "sample the truncated soup in a disk window as JSON Lines",
        join({soup_group("1", "0.05"),
              {{"window-radius", "1", "window radius"},
               {"window-cx", "0", "window center x"},
               {"window-cy", "0", "window center y"},
               {"seed", "1", "trial seed"},
               {"out", "-", "output path, - for standard output"}}}),
        [](const Settings& s, std::ostream& out, std::ostream&) {
          const DiskWindow w{{s.real("window-cx"), s.real("window-cy")}, s.real("window-radius")};
          const Configuration c = sample_configuration(soup_params(s), w, s.real("rmin"), s.seed("seed"));
          Output o(s.text("out"), out);
          write_configuration_jsonl(o.stream(), c, header(s));
          o.close();
        });

    add(&app_, "trace", "trace", "trace the exploration path of a box",
        join({soup_group("1", "0.05"), box_group(),
              {{"in", "", "JSON Lines configuration; sampled when empty"},
               {"seed", "1", "trial seed"},
               {"out", "-", "output path, - for standard output"}}}),
        [](const Settings& s, std::ostream& out, std::ostream&) {
          const Box box = box_of(s);
          const Exploration e = explore(scene(s, box), box);
          emit_json(s, out, {{"path", path_json(e.result)}});
        });

    CLI::App* estimate = app_.add_subcommand("estimate", "Monte Carlo estimates");
    estimate->require_subcommand(1);
    add(estimate, "arm", "estimate arm", "P(Arm(1, 2^m)) for m = 1..m-max with a power-law fit",
        join({soup_group("0.1", "0.05"), {{"m-max", "4", "largest scale index"}},
              {{"format", "json", "json or csv"}}, run_group("2000")}),
        [](const Settings& s, std::ostream& out, std::ostream& err) {
          warn_supercritical(s, err);
          emit_scan(s, out,
                    arm_decay_scan(soup_params(s), s.real("rmin"), static_cast<int>(s.integer("m-max")),
                                   trials(s), s.seed("seed"), trial_options(s)));
        });
    add(estimate, "h1", "estimate h1",
        "P(the exploration path of [-2^m, 2^m]^2 traverses D(1, 2^m) k times)",
        join({soup_group("0.1", "0.05"),
              {{"m-max", "3", "largest scale index"}, {"k", "1", "number of traversals"}},
              {{"format", "json", "json or csv"}}, run_group("2000")}),
        [](const Settings& s, std::ostream& out, std::ostream& err) {
          warn_supercritical(s, err);
          emit_scan(s, out,
                    h1_scan(soup_params(s), s.real("rmin"), static_cast<int>(s.integer("k")),
                            static_cast<int>(s.integer("m-max")), trials(s), s.seed("seed"),
                            trial_options(s)));
        });
    add(estimate, "lr1", "estimate lr1",
        "measure of sticks crossing [0, k l] x [0, l] from left to right",
        {{"u", "1", "intensity used for the crossing probability"},
         {"alpha", "2", "tail exponent"},
         {"l", "1", "box height"},
         {"k", "1", "aspect ratio"},
         {"trials", "10000", "number of proposal sticks"},
         {"seed", "1", "master seed"},
         {"out", "-", "output path, - for standard output"}},
        [](const Settings& s, std::ostream& out, std::ostream&) {
          const auto e = lr1_measure(s.real("alpha"), s.real("l"), s.real("k"), trials(s), s.seed("seed"));
          emit_json(s, out, {{"report", to_json(e, s.real("u"))}});
        });
    add(estimate, "crossing", "estimate crossing",
        "P(vacant left-right crossing of [0, k l] x [0, l])",
        join({soup_group("0.3", "0.05"), {{"l", "1", "box height"}, {"k", "1", "aspect ratio"}},
              run_group("2000")}),
        [](const Settings& s, std::ostream& out, std::ostream& err) {
          warn_supercritical(s, err);
          const double l = s.real("l");
          const Box box({0.0, 0.0}, {s.real("k") * l, l});
          const auto r = estimate_probability(VacantCrossingSpec{box}, soup_params(s),
                                              {box.center(), 0.5 * box.diagonal()}, s.real("rmin"),
                                              trials(s), s.seed("seed"), trial_options(s));
          emit_json(s, out, {{"report", to_json(r)}});
        });
    add(estimate, "correlation", "estimate correlation",
        "covariance of a stick hitting B(l1) and a stick hitting D(l2, 2 l2)",
        join({soup_group("1", "10"), {{"l1", "1", "inner radius"}, {"l2", "100", "outer radius"}},
              run_group("2000")}),
        [](const Settings& s, std::ostream& out, std::ostream&) {
          const double l1 = s.real("l1");
          const double l2 = s.real("l2");
          const double r_min = s.real("rmin");
          const auto r = correlation_estimate(hits_disk_event({0.0, 0.0}, l1, r_min),
                                              hits_ring_event({0.0, 0.0}, l2, 2.0 * l2, r_min),
                                              soup_params(s), {{0.0, 0.0}, 2.0 * l2}, r_min, l1, l2,
                                              trials(s), s.seed("seed"), trial_options(s));
          emit_json(s, out, {{"report", to_json(r)}});
        });
    add(estimate, "void", "estimate void",
        "P(the last-left suffix of the unit-box exploration hits the first n balls)",
        join({soup_group("0.2", "0.05"), {{"balls", kDefaultBalls, "x,y,r entries separated by ';'"}},
              {{"format", "json", "json or csv"}}, run_group("2000")}),
        [](const Settings& s, std::ostream& out, std::ostream& err) {
          warn_supercritical(s, err);
          emit_scan(s, out,
                    property_void_scan(soup_params(s), s.real("rmin"), parse_balls(s.text("balls")),
                                       trials(s), s.seed("seed"), Box({0, 0}, {1, 1}),
                                       trial_options(s)));
        });

    CLI::App* verify = app_.add_subcommand("verify", "closed-form cross-checks");
    verify->require_subcommand(1);
    add(verify, "parker-cowan", "verify parker-cowan",
        "mean number of sticks with radius in [r, t) hitting a disk against the closed form",
        join({{{"u", "1", "intensity"}, {"alpha", "2", "tail exponent"}, {"r", "0.5", "band start"},
               {"t", "2", "band end"}, {"window-radius", "1", "disk radius"}},
              run_group("10000")}),
        [](const Settings& s, std::ostream& out, std::ostream&) {
          const auto r = parker_cowan_check(soup_params(s), {{0.0, 0.0}, s.real("window-radius")},
                                            s.real("r"), s.real("t"), trials(s), s.seed("seed"),
                                            std::nullopt, trial_options(s));
          emit_json(s, out, {{"report", to_json(r)}, {"pass", std::abs(r.z) < 3.0}});
        });
    add(verify, "double-circle", "verify double-circle",
        "mean number of sticks meeting a circle twice against the closed form",
        join({soup_group("1", "0.001"), {{"radius", "1", "circle radius"}}, run_group("10000")}),
        [](const Settings& s, std::ostream& out, std::ostream&) {
          const auto r = double_circle_check(soup_params(s), s.real("radius"), s.real("rmin"),
                                             trials(s), s.seed("seed"), trial_options(s));
          emit_json(s, out, {{"report", to_json(r)}, {"pass", r.relative_error < 0.05}});
        });
    add(verify, "mu-hit", "verify mu-hit", "measure of sticks hitting a segment or a ball",
        {{"alpha", "2", "tail exponent"},
         {"shape", "segment", "segment or ball"},
         {"a", "1", "segment length or ball radius"},
         {"range", "at-least", "at-least or below"},
         {"r", "1", "radius threshold"},
         {"out", "-", "output path, - for standard output"}},
        [](const Settings& s, std::ostream& out, std::ostream&) {
          const std::string& shape_name = s.text("shape");
          const std::string& range_name = s.text("range");
          HitShape shape = SegmentShape{s.real("a")};
          if (shape_name == "ball") {
            shape = BallShape{s.real("a")};
          } else if (shape_name != "segment") {
            throw ArgumentError("--shape must be segment or ball");
          }
          RadiusRange range = AtLeast{s.real("r")};
          if (range_name == "below") {
            range = Below{s.real("r")};
          } else if (range_name != "at-least") {
            throw ArgumentError("--range must be at-least or below");
          }
          const ExtendedReal v = mu_hit(s.real("alpha"), shape, range);
          emit_json(s, out, {{"value", v.is_infinite() ? nlohmann::json("infinite") : nlohmann::json(v.value())}});
        });

    add(&app_, "invasion", "invasion", "invasion sequences through dyadic annuli",
        join({soup_group("1", "0.5"),
              {{"m", "5", "starting annulus index"},
               {"compare", "2,4,8", "prefix lengths t compared with sums of Y"}},
              run_group("200")}),
        [](const Settings& s, std::ostream& out, std::ostream&) {
          const SoupParams params = soup_params(s);
          const int m = static_cast<int>(s.integer("m"));
          const double r_min = s.real("rmin");
          const std::int64_t n = trials(s);
          const DiskWindow window{{0.0, 0.0}, std::ldexp(1.0, m)};
          const auto records = run_trials<InvasionRecord>(n, trial_options(s).threads, [&](std::int64_t i) {
            return invasion_sequence(
                sample_configuration(params, window, r_min, trial_seed(s.seed("seed"), i)), m);
          });
          nlohmann::json rows = nlohmann::json::array();
          for (const InvasionRecord& r : records) {
            rows.push_back({{"indices", r.indices},
                            {"steps", r.steps},
                            {"stopping_time", r.stopping_time},
                            {"truncated", r.truncated}});
          }
          std::vector<int> ts;
          for (double t : number_list(s.text("compare"), ',', "--compare")) {
            ts.push_back(static_cast<int>(t));
          }
          const auto cmp = invasion_comparison(params, m, r_min, ts, n, n, s.seed("seed"),
                                               trial_options(s));
          emit_json(s, out, {{"records", rows}, {"comparison", to_json(cmp)}});
        });

    add(&app_, "render", "render", "render a configuration and its exploration path as SVG",
        join({soup_group("1", "0.05"), box_group(),
              {{"in", "", "JSON Lines configuration; sampled when empty"},
               {"trace", "true", "draw the exploration path"},
               {"seed", "1", "trial seed"},
               {"out", "-", "output path, - for standard output"}}}),
        [](const Settings& s, std::ostream& out, std::ostream&) {
          const Box box = box_of(s);
          const Configuration c = scene(s, box);
          std::optional<Exploration> e;
          if (s.flag("trace")) e = explore(c, box);
          const std::string comment = std::string("sticksoup ") + kVersion + " command " +
                                      s.command() + " config " + s.json().dump();
          Output o(s.text("out"), out);
          render_svg(o.stream(), c, e ? &e->result : nullptr, box, comment);
          o.close();
        });
  }

  CLI::App app_;
  std::vector<std::unique_ptr<Leaf>> leaves_;
};

std::string svg_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v + 0.0);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Program program;
  return program.run(args, out, err);
}

void render_svg(std::ostream& os, const Configuration& c, const ExplorationResult* path,
                const Box& box, const std::string& comment) {
  const double margin = 0.02 * std::max(box.width(), box.height());
  const double stroke = 0.002 * box.diagonal();
  const double view_w = box.width() + 2.0 * margin;
  const double view_h = box.height() + 2.0 * margin;
  // SVG y grows downward; every y is negated so the box reads upright.
  auto x = [](Point p) { return svg_number(p.x); };
  auto y = [](Point p) { return svg_number(-p.y); };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!comment.empty()) {
    std::string safe = comment;
    for (std::size_t i = safe.find("--"); i != std::string::npos; i = safe.find("--", i)) {
      safe.replace(i, 2, "- -");
    }
    os << "<!-- " << safe << " -->\n";
  }
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
     << svg_number(box.min().x - margin) << ' ' << svg_number(-box.max().y - margin) << ' '
     << svg_number(view_w) << ' ' << svg_number(view_h) << "\" width=\"800\" height=\""
     << svg_number(std::round(800.0 * view_h / view_w)) << "\">\n";
  os << "<rect x=\"" << x(box.min()) << "\" y=\"" << y(Point{0.0, box.max().y}) << "\" width=\""
     << svg_number(box.width()) << "\" height=\"" << svg_number(box.height())
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << svg_number(stroke) << "\"/>\n";
  os << "<g stroke=\"#1f4e79\" stroke-width=\"" << svg_number(stroke) << "\">\n";
  for (const Stick& s : c.sticks) {
    const auto clipped = clip_segment_to_box(stick_to_segment(s), box);
    if (!clipped) continue;
    os << "<line x1=\"" << x(clipped->a()) << "\" y1=\"" << y(clipped->a()) << "\" x2=\""
       << x(clipped->b()) << "\" y2=\"" << y(clipped->b()) << "\"/>\n";
  }
  os << "</g>\n";
  if (path) {
    os << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << svg_number(4.0 * stroke)
       << "\" stroke-linejoin=\"round\" points=\"";
    bool first = true;
    for (const Point& p : path->path.vertices()) {
      os << (first ? "" : " ") << x(p) << ',' << y(p);
      first = false;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

void render_svg(const Configuration& c, const ExplorationResult* path, const Box& box,
                const std::string& file, const std::string& comment) {
  std::ofstream os(file, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write '" + file + "'");
  render_svg(os, c, path, box, comment);
  os.flush();
  if (!os) throw std::runtime_error("write to '" + file + "' failed");
}

}  // namespace sticksoup::cli
