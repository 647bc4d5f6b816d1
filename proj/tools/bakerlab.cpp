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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bakerlab/cli.hpp"

namespace {

void add_flags(CLI::App* sub, bakerlab::cli::ExperimentConfig& cfg) {
  sub->add_option("--kind", cfg.kind,
                  "map kind (baker, dmap, dprime, bbar, reflection, fourier, lambda, "
                  "identity, cue, coe, symmetric, local) or ensemble kind (cue, coe, symmetric)");
  sub->add_option("--map", cfg.map_path, "cmatrix-json file holding the map");
  sub->add_option("--d", cfg.d, "Hilbert space dimension");
  sub->add_option("--split", cfg.split, "bipartition AxB with d = A*B");
  sub->add_option("--nmin", cfg.n_min, "first time step of the sampling window");
  sub->add_option("--nmax", cfg.n_max, "last time step of the sampling window");
  sub->add_option("--states", cfg.states, "number of random product initial states");
  sub->add_option("--samples", cfg.samples,
                  "ensemble: number of random maps; histogram: CUE reference states");
  sub->add_option("--seed", cfg.seed, "master seed (u64)");
  sub->add_option("--bins", cfg.bins, "histogram bin count");
  sub->add_option("--profile", cfg.profile,
                  "desk (reduced sample counts) or paper (full-scale sample counts)")
      ->check(CLI::IsMember({"desk", "paper"}));
  sub->add_flag("--cross-check", cfg.cross_check,
                "epinf: also estimate by time and state averaging");
  sub->add_flag("--cue-reference", cfg.cue_reference,
                "histogram: add a histogram of Haar-random states");
  sub->add_option("--tol", cfg.tol, "eigenphase resonance tolerance");
  sub->add_option("--budget", cfg.budget, "sampled quadruples for large spectra");
  sub->add_option("--exhaustive-limit", cfg.exhaustive_limit,
                  "largest dimension whose eigenphase quadruples are scanned exhaustively");
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--raw", cfg.raw_out, "histogram: also write raw samples as CSV");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bakerlab: quantum baker maps, random ensembles and entangling power"};
  app.set_version_flag("--version", bakerlab::cli::version());
  app.require_subcommand(1);

  bakerlab::cli::ExperimentConfig cfg;
  const std::pair<const char*, const char*> commands[] = {
      {"gen-map", "write a unitary map as cmatrix-json"},
      {"timeseries", "entropy versus time for random product states (CSV)"},
      {"histogram", "histogram of long-time entropies of one map (JSON)"},
      {"ensemble", "single-application entropies over a random ensemble (JSON)"},
      {"epinf", "asymptotic entangling power from the eigenvectors (JSON)"},
      {"spectrum-check", "eigenphase commensurability report (JSON)"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_flags(sub, cfg);
    sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bakerlab::cli::kExitInvalidConfig;
  }
  return bakerlab::cli::run(cfg, std::cout, std::cerr);
}
