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

#pragma once

// File formats shared by the CLI and the Python module.
//
//   cmatrix-json   {"dim_rows": r, "dim_cols": c, "entries": [[re, im], ...]}
//                  entries flat in row-major order.
//   entropy CSV    '#'-prefixed metadata lines, then "state_id,n,S_L" rows.
//   histogram JSON see HistogramSummary.
//
// Doubles are written in shortest round-trip form so a write/read cycle is
// exact and identical inputs give byte-identical files.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bakerlab/entangling.hpp"
#include "bakerlab/tensor.hpp"

namespace bakerlab {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Throws InvalidArgument on a malformed document.
ComplexMatrix matrix_from_json(const nlohmann::json& doc);

void write_matrix_file(const std::string& path, const ComplexMatrix& m);
ComplexMatrix read_matrix_file(const std::string& path);

void write_entropy_csv(std::ostream& os, std::span<const EntropySample> samples,
                       std::span<const std::string> metadata_lines);

struct EntropyCsv {
  std::vector<std::string> metadata;
  std::vector<EntropySample> samples;
};
EntropyCsv read_entropy_csv(std::istream& is);

struct HistogramSummary {
  std::vector<double> bin_edges;
  std::vector<std::int64_t> counts;
  std::int64_t n_samples = 0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  nlohmann::json metadata = nlohmann::json::object();
};

/// `bins` uniform bins spanning [min, max] of the sample; the maximum lands
/// in the last bin. A sample with zero spread gets a narrow bin range
/// centered on its value. Variance and skewness are population moments.
HistogramSummary summarize_histogram(std::span<const double> values, int bins);

nlohmann::json to_json(const HistogramSummary& h);
HistogramSummary histogram_from_json(const nlohmann::json& doc);

}  // namespace bakerlab
