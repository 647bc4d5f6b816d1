// Copyright 2026 The bakerlab Authors
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

#include "bakerlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bakerlab/entangling.hpp"
#include "bakerlab/io.hpp"
#include "bakerlab/maps.hpp"
#include "bakerlab/random.hpp"

#ifndef BAKERLAB_VERSION
#define BAKERLAB_VERSION "0.0.0"
#endif

namespace bakerlab::cli {

namespace {

using nlohmann::json;

// Random maps requested by kind draw from this stream so they never share
// draws with the per-state streams 0, 1, 2, ...
constexpr std::uint64_t kMapStream = std::uint64_t{1} << 63;

constexpr std::int64_t kTransientSteps = 512;  // window starts at 513

Profile parse_profile(const std::string& name) {
  if (name == "desk") return Profile::Desk;
  if (name == "paper") return Profile::Paper;
  throw InvalidArgument("unknown profile '" + name + "' (expected desk or paper)");
}

std::int64_t pick(const std::optional<std::int64_t>& given, Profile p, std::int64_t desk,
                  std::int64_t paper) {
  if (given) return *given;
  return p == Profile::Desk ? desk : paper;
}

struct Window {
  std::int64_t n_min;
  std::int64_t n_max;
};

Window resolve_window(const ExperimentConfig& cfg) {
  Window w{cfg.n_min.value_or(kTransientSteps + 1), cfg.n_max.value_or(kTransientSteps + 2000)};
  if (w.n_min < 1) throw InvalidArgument("--nmin must be >= 1");
  if (w.n_max < w.n_min) throw InvalidArgument("--nmax must be >= --nmin");
  return w;
}

void require_count(std::int64_t value, std::int64_t min, const char* flag) {
  if (value < min) {
    throw InvalidArgument(std::string(flag) + " must be >= " + std::to_string(min));
  }
}

bool is_random_kind(const std::string& kind) {
  return kind == "cue" || kind == "coe" || kind == "symmetric" || kind == "local";
}

// Map requested via --map or --kind/--d, plus the split it is measured on.
struct ResolvedMap {
  ComplexMatrix u;
  std::optional<Bipartition> split;
};

std::optional<Bipartition> resolve_split(const ExperimentConfig& cfg, Index d) {
  if (!cfg.split.empty()) {
    Bipartition part = parse_split(cfg.split);
    if (d != 0 && part.dim() != d) {
      throw InvalidArgument("--split " + cfg.split + " does not match dimension " +
                            std::to_string(d));
    }
    return part;
  }
  const auto root = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(d))));
  if (d >= 4 && root * root == d) return Bipartition(root, root);
  return std::nullopt;
}

ResolvedMap resolve_map(const ExperimentConfig& cfg) {
  ResolvedMap out;
  if (!cfg.map_path.empty()) {
    out.u = read_matrix_file(cfg.map_path);
    if (out.u.rows() != out.u.cols()) {
      throw InvalidArgument("map file holds a non-square matrix");
    }
    if (cfg.d != 0 && cfg.d != out.u.rows()) {
      throw InvalidArgument("--d does not match the map file dimension");
    }
    require_unitary(out.u, "map file");
    out.split = resolve_split(cfg, out.u.rows());
    return out;
  }
  if (cfg.kind.empty()) throw InvalidArgument("either --kind or --map is required");
  Index d = cfg.d;
  if (d == 0 && !cfg.split.empty()) d = parse_split(cfg.split).dim();
  if (d < 1) throw InvalidArgument("--d is required");
  out.split = resolve_split(cfg, d);

  if (cfg.kind == "identity") {
    out.u = identity(d);
  } else if (is_random_kind(cfg.kind)) {
    RngStream rng(cfg.seed, kMapStream);
    if (cfg.kind == "local") {
      if (!out.split) throw InvalidArgument("--kind local needs --split");
      out.u = sample_local_unitary(*out.split, rng);
    } else {
      out.u = sample_ensemble(*parse_ensemble_kind(cfg.kind), d, rng);
    }
  } else if (const auto kind = parse_map_kind(cfg.kind)) {
    out.u = make_map(*kind, d);
  } else {
    throw InvalidArgument("unknown map kind '" + cfg.kind + "'");
  }
  return out;
}

Bipartition require_split(const ResolvedMap& m) {
  if (!m.split) {
    throw InvalidArgument("--split AxB is required for dimension " +
                          std::to_string(m.u.rows()));
  }
  return *m.split;
}

json config_echo(const ExperimentConfig& cfg) {
  json c = {{"command", cfg.command}, {"kind", cfg.kind},     {"map", cfg.map_path},
            {"d", cfg.d},             {"split", cfg.split},   {"seed", cfg.seed},
            {"bins", cfg.bins},       {"profile", cfg.profile}};
  return c;
}

json metadata(const ExperimentConfig& cfg, json resolved) {
  json meta = {{"tool", "bakerlab"},
               {"version", version()},
               {"command", cfg.command},
               {"seed", cfg.seed},
               {"config", config_echo(cfg)}};
  meta["config"].update(resolved);
  return meta;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json report_to_json(const CommensurabilityReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"k", v.k}, {"l", v.l}, {"m", v.m}, {"n", v.n}, {"mismatch", v.mismatch}});
  }
  return {{"method", r.exhaustive ? "exhaustive" : "sampled"},
          {"tol", r.tol},
          {"dim", r.dim},
          {"quadruples_covered", r.quadruples_covered},
          {"coverage", r.coverage},
          {"expected_accidental", r.expected_accidental},
          {"violation_count", r.violation_count},
          {"count_saturated", r.count_saturated},
          {"clean", r.clean()},
          {"violations", std::move(violations)}};
}

// Standard error of the grand mean from the spread of group means.
double grouped_std_error(std::span<const double> group_means) {
  const auto n = static_cast<double>(group_means.size());
  if (group_means.size() < 2) return 0.0;
  double mean = 0.0;
  for (double v : group_means) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : group_means) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (n - 1.0) / n);
}

json summary_json(std::span<const double> values, std::span<const double> group_means,
                  int bins, json meta) {
  HistogramSummary h = summarize_histogram(values, bins);
  h.metadata = std::move(meta);
  json doc = to_json(h);
  doc["std_error"] = grouped_std_error(group_means);
  return doc;
}

}  // namespace

Bipartition parse_split(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos || x == 0 || x + 1 == text.size()) {
    throw InvalidArgument("--split must look like AxB, got '" + text + "'");
  }
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, x);
    const std::string b = text.substr(x + 1);
    const long long da = std::stoll(a, &used_a);
    const long long db = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing");
    return Bipartition(da, db);
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidArgument("--split must look like AxB, got '" + text + "'");
  }
}

std::string version() { return BAKERLAB_VERSION; }

std::string cmd_gen_map(const ExperimentConfig& cfg) {
  const ResolvedMap m = resolve_map(cfg);
  return matrix_to_json(m.u).dump() + "\n";
}

std::string cmd_timeseries(const ExperimentConfig& cfg) {
  const Profile profile = parse_profile(cfg.profile);
  const ResolvedMap m = resolve_map(cfg);
  const Bipartition part = require_split(m);
  const std::int64_t states = pick(cfg.states, profile, 5, 5);
  const std::int64_t n_max = pick(cfg.n_max, profile, 100, 500);
  require_count(states, 1, "--states");
  require_count(n_max, 1, "--nmax");
  const auto samples = empirical_asymptotic_distribution(m.u, part, 1, n_max, states, cfg.seed);

  const json resolved = {{"dim", m.u.rows()},
                         {"d_a", part.d_a()},
                         {"d_b", part.d_b()},
                         {"states", states},
                         {"n_min", 1},
                         {"n_max", n_max}};
  const std::vector<std::string> header = {
      "bakerlab " + version(), "command: timeseries", "seed: " + std::to_string(cfg.seed),
      "config: " + metadata(cfg, resolved)["config"].dump()};
  std::ostringstream os;
  write_entropy_csv(os, samples, header);
  return os.str();
}

std::string cmd_histogram(const ExperimentConfig& cfg) {
  const Profile profile = parse_profile(cfg.profile);
  const ResolvedMap m = resolve_map(cfg);
  const Bipartition part = require_split(m);
  const Window w = resolve_window(cfg);
  const std::int64_t states = pick(cfg.states, profile, 50, 1000);
  require_count(states, 1, "--states");
  require_count(cfg.bins, 1, "--bins");
  const auto samples = empirical_asymptotic_distribution(m.u, part, w.n_min, w.n_max, states, cfg.seed);

  std::vector<double> values;
  values.reserve(samples.size());
  std::vector<double> per_state(static_cast<std::size_t>(states), 0.0);
  for (const auto& s : samples) {
    values.push_back(s.value);
    per_state[static_cast<std::size_t>(s.state_id)] += s.value;
  }
  const auto window = static_cast<double>(w.n_max - w.n_min + 1);
  for (double& v : per_state) v /= window;

  json resolved = {{"dim", m.u.rows()}, {"d_a", part.d_a()}, {"d_b", part.d_b()},
                   {"states", states},  {"n_min", w.n_min},  {"n_max", w.n_max}};
  std::int64_t reference = 0;
  if (cfg.cue_reference) {
    reference = pick(cfg.samples, profile, 100000, 100000);
    require_count(reference, 1, "--samples");
    resolved["reference_samples"] = reference;
  }
  json doc = summary_json(values, per_state, cfg.bins, metadata(cfg, resolved));
  doc["cue_mean"] = cue_mean_entropy(part);
  if (cfg.cue_reference) {
    const auto ref = haar_state_entropies(part, reference, cfg.seed);
    doc["cue_reference"] = to_json(summarize_histogram(ref, cfg.bins));
  }
  if (!cfg.raw_out.empty()) {
    std::ofstream raw(cfg.raw_out);
    if (!raw) throw InvalidArgument("cannot open '" + cfg.raw_out + "' for writing");
    const std::vector<std::string> header = {
        "bakerlab " + version(), "command: histogram", "seed: " + std::to_string(cfg.seed),
        "config: " + doc["metadata"]["config"].dump()};
    write_entropy_csv(raw, samples, header);
  }
  return dump(doc);
}

std::string cmd_ensemble(const ExperimentConfig& cfg) {
  const Profile profile = parse_profile(cfg.profile);
  const auto kind = parse_ensemble_kind(cfg.kind);
  if (!kind) {
    throw InvalidArgument("ensemble --kind must be cue, coe or symmetric, got '" + cfg.kind + "'");
  }
  Index d = cfg.d;
  if (d == 0 && !cfg.split.empty()) d = parse_split(cfg.split).dim();
  if (d < 1) throw InvalidArgument("--d is required");
  const auto split = resolve_split(cfg, d);
  if (!split) throw InvalidArgument("--split AxB is required for dimension " + std::to_string(d));
  const std::int64_t maps = pick(cfg.samples, profile, 300, 1000);
  const std::int64_t states = pick(cfg.states, profile, 300, 1000);
  require_count(maps, 1, "--samples");
  require_count(states, 1, "--states");
  require_count(cfg.bins, 1, "--bins");

  const auto samples = ensemble_entropies(*kind, *split, maps, states, cfg.seed);
  std::vector<double> values;
  values.reserve(samples.size());
  std::vector<double> per_map(static_cast<std::size_t>(maps), 0.0);
  for (const auto& s : samples) {
    values.push_back(s.value);
    per_map[static_cast<std::size_t>(s.map_id)] += s.value / static_cast<double>(states);
  }
  const json resolved = {{"dim", d},         {"d_a", split->d_a()},  {"d_b", split->d_b()},
                         {"ensemble", cfg.kind}, {"maps", maps}, {"states", states}};
  json doc = summary_json(values, per_map, cfg.bins, metadata(cfg, resolved));
  doc["cue_mean"] = cue_mean_entropy(*split);
  return dump(doc);
}

std::string cmd_epinf(const ExperimentConfig& cfg) {
  const Profile profile = parse_profile(cfg.profile);
  const ResolvedMap m = resolve_map(cfg);
  const Bipartition part = require_split(m);
  const EigenSystem eig = eigensystem(m.u);
  CommensurabilityPolicy policy;
  policy.tol = cfg.tol;
  policy.budget = cfg.budget;
  policy.seed = cfg.seed;
  policy.exhaustive_max_dim = cfg.exhaustive_limit;
  const AsymptoticEntanglement ae(eig, part, policy);
  const double spectral = ae.entangling_power();

  json resolved = {{"dim", m.u.rows()},
                   {"d_a", part.d_a()},
                   {"d_b", part.d_b()},
                   {"tol", cfg.tol},
                   {"budget", cfg.budget},
                   {"exhaustive_limit", cfg.exhaustive_limit},
                   {"cross_check", cfg.cross_check}};
  json doc;
  doc["spectral"] = spectral;
  doc["assumptions_violated"] = !ae.assumptions_hold();
  doc["cue_mean"] = cue_mean_entropy(part);
  doc["commensurability"] = report_to_json(ae.commensurability());
  doc["eigensolver"] = {{"max_residual", eig.max_residual},
                        {"max_overlap", eig.max_overlap},
                        {"reconstruction_residual", reconstruction_residual(eig, m.u)}};
  if (cfg.cross_check) {
    const Window w = resolve_window(cfg);
    const std::int64_t states = pick(cfg.states, profile, 100, 500);
    require_count(states, 2, "--states");
    const MonteCarloEstimate mc = time_state_average(m.u, part, w.n_min, w.n_max, states, cfg.seed);
    resolved["states"] = states;
    resolved["n_min"] = w.n_min;
    resolved["n_max"] = w.n_max;
    doc["cross_check"] = {{"mean", mc.mean},
                          {"std_error", mc.std_error},
                          {"n_samples", mc.n_samples},
                          {"deviation_sigma", mc.std_error > 0.0
                                                  ? std::abs(spectral - mc.mean) / mc.std_error
                                                  : 0.0}};
  }
  doc["metadata"] = metadata(cfg, resolved);
  return dump(doc);
}

std::string cmd_spectrum_check(const ExperimentConfig& cfg) {
  const ResolvedMap m = resolve_map(cfg);
  const EigenSystem eig = eigensystem(m.u);
  CommensurabilityPolicy policy;
  policy.tol = cfg.tol;
  policy.budget = cfg.budget;
  policy.seed = cfg.seed;
  policy.exhaustive_max_dim = cfg.exhaustive_limit;
  const CommensurabilityReport report = commensurability_check(eig.phases, policy);
  json doc = report_to_json(report);
  doc["phases"] = eig.phases;
  doc["eigensolver"] = {{"max_residual", eig.max_residual}, {"max_overlap", eig.max_overlap}};
  doc["metadata"] = metadata(cfg, {{"dim", m.u.rows()}, {"tol", cfg.tol}, {"budget", cfg.budget},
                                     {"exhaustive_limit", cfg.exhaustive_limit}});
  return dump(doc);
}

int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::string result;
    if (cfg.command == "gen-map") {
      result = cmd_gen_map(cfg);
    } else if (cfg.command == "timeseries") {
      result = cmd_timeseries(cfg);
    } else if (cfg.command == "histogram") {
      result = cmd_histogram(cfg);
    } else if (cfg.command == "ensemble") {
      result = cmd_ensemble(cfg);
    } else if (cfg.command == "epinf") {
      result = cmd_epinf(cfg);
    } else if (cfg.command == "spectrum-check") {
      result = cmd_spectrum_check(cfg);
    } else {
      throw InvalidArgument("unknown command '" + cfg.command + "'");
    }
    if (cfg.out.empty() || cfg.out == "-") {
      out << result;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw InvalidArgument("cannot open '" + cfg.out + "' for writing");
      file << result;
    }
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "bakerlab " << cfg.command << ": " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const NumericalError& e) {
    err << "bakerlab " << cfg.command << ": " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace bakerlab::cli
