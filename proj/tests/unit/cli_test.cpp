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


#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "bakerlab/cli.hpp"
#include "bakerlab/entangling.hpp"
#include "bakerlab/io.hpp"
#include "bakerlab/maps.hpp"

namespace bakerlab::cli {
namespace {

using nlohmann::json;

const std::filesystem::path& scratch() {
  static const std::filesystem::path dir = [] {
    auto p = std::filesystem::temp_directory_path() / "bakerlab_cli_test";
    std::filesystem::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct Invocation {
  int exit_code = -1;
  std::string out;
  std::string err;
};

Invocation invoke(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const auto err = scratch() / "stderr.txt";
  const std::string cmd = std::string(BAKERLAB_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  Invocation inv;
  inv.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  inv.out = slurp(out);
  inv.err = slurp(err);
  return inv;
}

ExperimentConfig config(const std::string& command) {
  ExperimentConfig cfg;
  cfg.command = command;
  return cfg;
}

TEST(ParseSplit, AcceptsAndRejects) {
  EXPECT_EQ(parse_split("14x17"), Bipartition(14, 17));
  EXPECT_EQ(parse_split("4X4"), Bipartition(4, 4));
  for (const char* bad : {"", "x4", "4x", "4*4", "ax4", "4x4x", "1x8"}) {
    EXPECT_THROW(parse_split(bad), InvalidArgument) << bad;
  }
}

TEST(GenMap, BakerFile) {
  const Invocation inv = invoke("gen-map --kind baker --d 8");
  ASSERT_EQ(inv.exit_code, 0) << inv.err;
  const ComplexMatrix m = matrix_from_json(json::parse(inv.out));
  EXPECT_EQ(m.rows(), 8);
  EXPECT_LT(unitarity_residual(m), 1e-10);
  EXPECT_EQ(m, baker(8));
}

TEST(GenMap, OddBakerRejected) {
  const Invocation inv = invoke("gen-map --kind baker --d 7");
  EXPECT_EQ(inv.exit_code, kExitInvalidConfig);
  EXPECT_NE(inv.err.find("dimension must be even"), std::string::npos) << inv.err;
  EXPECT_TRUE(inv.out.empty());
}

TEST(GenMap, ReflectionIsAntiDiagonal) {
  const auto path = scratch() / "r4.json";
  const Invocation inv = invoke("gen-map --kind reflection --d 4 --out " + path.string());
  ASSERT_EQ(inv.exit_code, 0) << inv.err;
  const ComplexMatrix r = read_matrix_file(path.string());
  for (Index row = 0; row < 4; ++row)
    for (Index col = 0; col < 4; ++col)
      EXPECT_EQ(r(row, col), Complex(row + col == 3 ? 1.0 : 0.0));
}

TEST(ExitCodes, InvalidConfiguration) {
  EXPECT_EQ(invoke("gen-map --kind cat --d 8").exit_code, kExitInvalidConfig);
  EXPECT_EQ(invoke("epinf --kind baker --d 16 --split 3x5").exit_code, kExitInvalidConfig);
  EXPECT_EQ(invoke("epinf --kind baker --d 18").exit_code, kExitInvalidConfig);
  EXPECT_EQ(invoke("timeseries --kind baker --split 4x4 --nmax 0").exit_code, kExitInvalidConfig);
  EXPECT_EQ(invoke("ensemble --kind baker --split 4x4").exit_code, kExitInvalidConfig);
  EXPECT_EQ(invoke("histogram --kind baker --split 4x4 --profile huge").exit_code,
            kExitInvalidConfig);
  EXPECT_EQ(invoke("no-such-command").exit_code, kExitInvalidConfig);
  EXPECT_EQ(invoke("gen-map --kind baker --d notanumber").exit_code, kExitInvalidConfig);
}

TEST(ExitCodes, NonUnitaryMapFileIsNumerical) {
  const auto path = scratch() / "bad.json";
  write_matrix_file(path.string(), 1.5 * identity(4));
  const Invocation inv = invoke("epinf --map " + path.string() + " --split 2x2");
  EXPECT_EQ(inv.exit_code, kExitNumerical);
  EXPECT_NE(inv.err.find("not unitary"), std::string::npos) << inv.err;
}

TEST(ExitCodes, AsymmetricMapIsNumericalInProcess) {
  std::ostringstream out, err;
  ExperimentConfig cfg = config("gen-map");
  cfg.kind = "baker";
  cfg.d = 6;
  cfg.out = (scratch() / "b6.json").string();
  EXPECT_EQ(run(cfg, out, err), kExitOk);
  cfg.kind = "bbar";
  EXPECT_EQ(run(cfg, out, err), kExitInvalidConfig);
}

TEST(Timeseries, IdentityIsZeroAndCarriesProvenance) {
  ExperimentConfig cfg = config("timeseries");
  cfg.kind = "identity";
  cfg.split = "3x4";
  cfg.states = 2;
  cfg.n_max = 10;
  cfg.seed = 17;
  std::istringstream is(cmd_timeseries(cfg));
  const EntropyCsv csv = read_entropy_csv(is);
  ASSERT_EQ(csv.samples.size(), 20u);
  for (const auto& s : csv.samples) EXPECT_LT(s.value, 1e-12);
  ASSERT_GE(csv.metadata.size(), 4u);
  EXPECT_EQ(csv.metadata[0], "bakerlab " + version());
  EXPECT_EQ(csv.metadata[2], "seed: 17");
  const json echo = json::parse(csv.metadata[3].substr(std::string("config: ").size()));
  EXPECT_EQ(echo.at("kind"), "identity");
  EXPECT_EQ(echo.at("n_max"), 10);
}

TEST(Timeseries, DefaultsFollowProfile) {
  ExperimentConfig cfg = config("timeseries");
  cfg.kind = "dmap";
  cfg.d = 16;
  std::istringstream desk(cmd_timeseries(cfg));
  EXPECT_EQ(read_entropy_csv(desk).samples.size(), 5u * 100u);
  cfg.profile = "paper";
  std::istringstream paper(cmd_timeseries(cfg));
  EXPECT_EQ(read_entropy_csv(paper).samples.size(), 5u * 500u);
}

TEST(Determinism, RerunsAreByteIdentical) {
  const std::vector<std::string> commands = {
      "timeseries --kind dmap --d 16 --states 3 --nmax 50 --seed 5",
      "histogram --kind baker --d 16 --states 4 --nmin 10 --nmax 60 --seed 5 --cue-reference "
      "--samples 500",
      "ensemble --kind symmetric --split 2x4 --samples 5 --states 6 --seed 5",
      "epinf --kind baker --d 16 --cross-check --states 4 --nmin 10 --nmax 40 --seed 5",
      "spectrum-check --kind cue --d 12 --seed 5",
      "gen-map --kind coe --d 6 --seed 5"};
  for (const auto& c : commands) {
    SCOPED_TRACE(c);
    const Invocation a = invoke(c);
    const Invocation b = invoke(c);
    ASSERT_EQ(a.exit_code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
  const Invocation other = invoke("timeseries --kind dmap --d 16 --states 3 --nmax 50 --seed 6");
  EXPECT_NE(other.out, invoke(commands[0]).out);
}

TEST(Determinism, OutputFileMatchesStdout) {
  const auto path = scratch() / "ts.csv";
  const std::string args = "timeseries --kind baker --split 4x4 --states 2 --nmax 20 --seed 9";
  const Invocation to_stdout = invoke(args);
  const Invocation to_file = invoke(args + " --out " + path.string());
  ASSERT_EQ(to_file.exit_code, 0);
  EXPECT_EQ(slurp(path), to_stdout.out);
}

TEST(Histogram, SummaryRawCsvAndReference) {
  ExperimentConfig cfg = config("histogram");
  cfg.kind = "baker";
  cfg.d = 16;
  cfg.states = 6;
  cfg.n_min = 20;
  cfg.n_max = 69;
  cfg.bins = 12;
  cfg.seed = 3;
  cfg.cue_reference = true;
  cfg.samples = 2000;
  cfg.raw_out = (scratch() / "raw.csv").string();
  const json doc = json::parse(cmd_histogram(cfg));
  const HistogramSummary h = histogram_from_json(doc);
  EXPECT_EQ(h.n_samples, 300);
  EXPECT_EQ(h.counts.size(), 12u);
  EXPECT_DOUBLE_EQ(doc.at("cue_mean").get<double>(), 9.0 / 17.0);
  EXPECT_GT(doc.at("std_error").get<double>(), 0.0);
  EXPECT_EQ(doc.at("cue_reference").at("n_samples"), 2000);
  EXPECT_EQ(doc.at("metadata").at("seed"), 3);
  EXPECT_EQ(doc.at("metadata").at("version"), version());
  EXPECT_EQ(doc.at("metadata").at("config").at("n_min"), 20);

  std::ifstream raw(cfg.raw_out);
  const EntropyCsv csv = read_entropy_csv(raw);
  ASSERT_EQ(csv.samples.size(), 300u);
  double sum = 0.0;
  for (const auto& s : csv.samples) sum += s.value;
  EXPECT_NEAR(sum / 300.0, h.mean, 1e-12);
  const auto direct = empirical_asymptotic_distribution(baker(16), Bipartition(4, 4), 20, 69, 6, 3);
  for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_EQ(csv.samples[i].value, direct[i].value);
}

TEST(Ensemble, SingleSample) {
  ExperimentConfig cfg = config("ensemble");
  cfg.kind = "cue";
  cfg.split = "4x4";
  cfg.samples = 1;
  cfg.states = 1;
  const HistogramSummary h = histogram_from_json(json::parse(cmd_ensemble(cfg)));
  std::int64_t total = 0;
  for (auto c : h.counts) total += c;
  EXPECT_EQ(total, 1);
}

TEST(Epinf, CrossCheckAgrees) {
  ExperimentConfig cfg = config("epinf");
  cfg.kind = "baker";
  cfg.d = 16;
  cfg.cross_check = true;
  cfg.states = 100;
  const json doc = json::parse(cmd_epinf(cfg));
  EXPECT_FALSE(doc.at("assumptions_violated").get<bool>());
  EXPECT_LT(doc.at("cross_check").at("deviation_sigma").get<double>(), 3.0);
  EXPECT_EQ(doc.at("cross_check").at("n_samples"), 100 * 2000);
  EXPECT_EQ(doc.at("commensurability").at("method"), "exhaustive");
  EXPECT_LT(doc.at("eigensolver").at("reconstruction_residual").get<double>(), 1e-10);
  const double spectral = doc.at("spectral");
  const FormulaValue direct =
      asymptotic_entangling_power(eigensystem(baker(16)), Bipartition(4, 4));
  EXPECT_EQ(spectral, direct.value);
}

TEST(Epinf, QubitBakerBelowCueMean) {
  ExperimentConfig cfg = config("epinf");
  cfg.kind = "baker";
  cfg.d = 256;
  const json doc = json::parse(cmd_epinf(cfg));
  EXPECT_LT(doc.at("spectral").get<double>(), 225.0 / 257.0);
  EXPECT_EQ(doc.at("cue_mean").get<double>(), 225.0 / 257.0);
  EXPECT_EQ(doc.at("commensurability").at("method"), "sampled");
}

TEST(Epinf, LocalMapIsFlagged) {
  const Invocation inv = invoke("epinf --kind local --split 3x4 --seed 2");
  ASSERT_EQ(inv.exit_code, 0) << inv.err;
  const json doc = json::parse(inv.out);
  EXPECT_TRUE(doc.at("assumptions_violated").get<bool>());
  EXPECT_GT(doc.at("commensurability").at("violation_count").get<int>(), 0);
}

TEST(SpectrumCheck, BakerCleanIdentityAndLocalResonant) {
  const auto b32 = scratch() / "b32.json";
  ASSERT_EQ(invoke("gen-map --kind baker --d 32 --out " + b32.string()).exit_code, 0);
  const Invocation clean = invoke("spectrum-check --map " + b32.string());
  ASSERT_EQ(clean.exit_code, 0) << clean.err;
  const json report = json::parse(clean.out);
  EXPECT_EQ(report.at("violation_count"), 0);
  EXPECT_EQ(report.at("method"), "exhaustive");
  EXPECT_EQ(report.at("phases").size(), 32u);

  const auto id4 = scratch() / "id4.json";
  write_matrix_file(id4.string(), identity(4));
  EXPECT_GT(json::parse(invoke("spectrum-check --map " + id4.string()).out)
                .at("violation_count")
                .get<int>(),
            0);

  const auto local = scratch() / "local.json";
  ASSERT_EQ(invoke("gen-map --kind local --split 3x3 --seed 4 --out " + local.string()).exit_code,
            0);
  EXPECT_GT(json::parse(invoke("spectrum-check --map " + local.string()).out)
                .at("violation_count")
                .get<int>(),
            0);
}

TEST(Version, Reported) {
  const Invocation inv = invoke("--version");
  EXPECT_EQ(inv.exit_code, 0);
  EXPECT_NE(inv.out.find(version()), std::string::npos);
}

}  // namespace
}  // namespace bakerlab::cli
