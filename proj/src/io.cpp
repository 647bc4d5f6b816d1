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

#include "bakerlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bakerlab {

namespace {

constexpr const char* kCsvHeader = "state_id,n,S_L";

template <class T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidArgument(std::string("entropy csv: bad ") + what + " field '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return {{"dim_rows", m.rows()}, {"dim_cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("dim_rows") || !doc.contains("dim_cols") ||
      !doc.contains("entries")) {
    throw InvalidArgument("cmatrix-json: expected an object with dim_rows, dim_cols, entries");
  }
  const auto& rows_field = doc.at("dim_rows");
  const auto& cols_field = doc.at("dim_cols");
  if (!rows_field.is_number_integer() || !cols_field.is_number_integer()) {
    throw InvalidArgument("cmatrix-json: dim_rows and dim_cols must be integers");
  }
  const auto rows = rows_field.get<std::int64_t>();
  const auto cols = cols_field.get<std::int64_t>();
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("cmatrix-json: dimensions must be positive");
  }
  const auto& entries = doc.at("entries");
  if (!entries.is_array() || static_cast<std::int64_t>(entries.size()) != rows * cols) {
    throw InvalidArgument("cmatrix-json: entries must hold dim_rows * dim_cols pairs");
  }
  ComplexMatrix m(rows, cols);
  for (std::int64_t idx = 0; idx < rows * cols; ++idx) {
    const auto& pair = entries[static_cast<std::size_t>(idx)];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw InvalidArgument("cmatrix-json: entry " + std::to_string(idx) +
                            " is not a [re, im] pair");
    }
    m(idx / cols, idx % cols) = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return m;
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream os(path);
  if (!os) throw InvalidArgument("cannot open '" + path + "' for writing");
  os << matrix_to_json(m).dump() << '\n';
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InvalidArgument("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("cmatrix-json: " + std::string(e.what()));
  }
  return matrix_from_json(doc);
}

void write_entropy_csv(std::ostream& os, std::span<const EntropySample> samples,
                       std::span<const std::string> metadata_lines) {
  for (const auto& line : metadata_lines) os << "# " << line << '\n';
  os << kCsvHeader << '\n';
  for (const auto& s : samples) {
    os << s.state_id << ',' << s.time_step << ',' << format_double(s.value) << '\n';
  }
}

EntropyCsv read_entropy_csv(std::istream& is) {
  EntropyCsv out;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      out.metadata.push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader) throw InvalidArgument("entropy csv: unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw InvalidArgument("entropy csv: malformed row '" + line + "'");
    }
    const std::string_view view(line);
    EntropySample s;
    s.state_id = parse_number<std::int64_t>(view.substr(0, c1), "state_id");
    s.time_step = parse_number<std::int64_t>(view.substr(c1 + 1, c2 - c1 - 1), "n");
    s.value = parse_number<double>(view.substr(c2 + 1), "S_L");
    out.samples.push_back(s);
  }
  if (!header_seen) throw InvalidArgument("entropy csv: missing header");
  return out;
}

HistogramSummary summarize_histogram(std::span<const double> values, int bins) {
  if (values.empty()) throw InvalidArgument("histogram: no samples");
  if (bins < 1) throw InvalidArgument("histogram: bin count must be >= 1");
  HistogramSummary h;
  h.n_samples = static_cast<std::int64_t>(values.size());

  double sum = 0.0;
  for (double v : values) sum += v;
  h.mean = sum / static_cast<double>(values.size());
  double m2 = 0.0;
  double m3 = 0.0;
  for (double v : values) {
    const double dv = v - h.mean;
    m2 += dv * dv;
    m3 += dv * dv * dv;
  }
  m2 /= static_cast<double>(values.size());
  m3 /= static_cast<double>(values.size());
  h.variance = m2;
  h.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;

  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (!(hi > lo)) {
    const double pad = 1e-6 * std::max(1.0, std::abs(lo));
    lo -= pad;
    hi += pad;
  }
  h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  const double width = (hi - lo) / bins;
  for (int b = 0; b <= bins; ++b) h.bin_edges[static_cast<std::size_t>(b)] = lo + width * b;
  h.bin_edges.back() = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    auto b = static_cast<std::int64_t>(std::floor((v - lo) / width));
    b = std::clamp<std::int64_t>(b, 0, bins - 1);
    ++h.counts[static_cast<std::size_t>(b)];
  }
  return h;
}

nlohmann::json to_json(const HistogramSummary& h) {
  return {{"bin_edges", h.bin_edges}, {"counts", h.counts},   {"n_samples", h.n_samples},
          {"mean", h.mean},           {"variance", h.variance}, {"skewness", h.skewness},
          {"metadata", h.metadata}};
}

HistogramSummary histogram_from_json(const nlohmann::json& doc) {
  HistogramSummary h;
  try {
    h.bin_edges = doc.at("bin_edges").get<std::vector<double>>();
    h.counts = doc.at("counts").get<std::vector<std::int64_t>>();
    h.n_samples = doc.at("n_samples").get<std::int64_t>();
    h.mean = doc.at("mean").get<double>();
    h.variance = doc.at("variance").get<double>();
    h.skewness = doc.at("skewness").get<double>();
    h.metadata = doc.value("metadata", nlohmann::json::object());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("histogram json: ") + e.what());
  }
  if (h.bin_edges.size() != h.counts.size() + 1) {
    throw InvalidArgument("histogram json: expected one more edge than counts");
  }
  return h;
}

}  // namespace bakerlab
