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


#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>

#include "bakerlab/entangling.hpp"
#include "bakerlab/maps.hpp"
#include "bakerlab/random.hpp"
#include "bakerlab/tensor.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace bakerlab {
namespace {

using Split = std::pair<Index, Index>;

Bipartition to_part(const Split& s) { return Bipartition(s.first, s.second); }

Subsystem to_subsystem(const std::string& keep) {
  if (keep == "A" || keep == "a") return Subsystem::A;
  if (keep == "B" || keep == "b") return Subsystem::B;
  throw InvalidArgument("keep must be 'A' or 'B', got '" + keep + "'");
}

CommensurabilityPolicy make_policy(double tol, Index exhaustive_max_dim, std::uint64_t budget,
                                   std::uint64_t seed) {
  CommensurabilityPolicy p;
  p.tol = tol;
  p.exhaustive_max_dim = exhaustive_max_dim;
  p.budget = budget;
  p.seed = seed;
  return p;
}

py::dict report_to_dict(const CommensurabilityReport& r) {
  py::list violations;
  for (const auto& v : r.violations) {
    violations.append(py::make_tuple(v.k, v.l, v.m, v.n, v.mismatch));
  }
  return py::dict("method"_a = r.exhaustive ? "exhaustive" : "sampled", "tol"_a = r.tol,
                  "dim"_a = r.dim, "quadruples_covered"_a = r.quadruples_covered,
                  "coverage"_a = r.coverage, "violation_count"_a = r.violation_count,
                  "expected_accidental"_a = r.expected_accidental,
                  "count_saturated"_a = r.count_saturated, "clean"_a = r.clean(),
                  "violations"_a = violations);
}

// (n_groups, group_size) array of sample values, state- or map-major.
py::array_t<double> to_grid(const std::vector<EntropySample>& samples, py::ssize_t groups) {
  const py::ssize_t per = groups == 0 ? 0 : static_cast<py::ssize_t>(samples.size()) / groups;
  py::array_t<double> out({groups, per});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < static_cast<py::ssize_t>(samples.size()); ++i) {
    view(i / per, i % per) = samples[static_cast<std::size_t>(i)].value;
  }
  return out;
}

}  // namespace
}  // namespace bakerlab

PYBIND11_MODULE(_core, m) {
  using namespace bakerlab;
  m.doc() = "Quantum baker maps, random unitary ensembles and entangling power";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  // tensor
  m.def("kron", &kron, "a"_a, "b"_a);
  m.def("dagger", &dagger, "a"_a);
  m.def("partial_trace",
        [](const ComplexMatrix& rho, const Split& split, const std::string& keep) {
          return partial_trace(rho, to_part(split), to_subsystem(keep));
        },
        "rho"_a, "split"_a, "keep"_a = "A");
  m.def("reduced_density",
        [](const StateVector& psi, const Split& split, const std::string& keep) {
          return reduced_density(psi, to_part(split), to_subsystem(keep));
        },
        "psi"_a, "split"_a, "keep"_a = "A");
  m.def("unitarity_residual", &unitarity_residual, "u"_a);
  m.def("swap_subsystems",
        [](const StateVector& psi, const Split& split) {
          return swap_subsystems(psi, to_part(split));
        },
        "psi"_a, "split"_a);

  py::class_<EigenSystem>(m, "EigenSystem")
      .def_readonly("phases", &EigenSystem::phases)
      .def_readonly("vectors", &EigenSystem::vectors)
      .def_readonly("max_residual", &EigenSystem::max_residual)
      .def_readonly("max_overlap", &EigenSystem::max_overlap)
      .def_property_readonly("dim", &EigenSystem::dim);
  m.def("eigensystem", &eigensystem, "u"_a);

  // maps
  m.def("antiperiodic_fourier", &antiperiodic_fourier, "d"_a);
  m.def("reflection", &reflection, "d"_a);
  m.def("baker", &baker, "d"_a);
  m.def("lambda_basis", &lambda_basis, "d"_a);
  m.def("d_map", &d_map, "d"_a, "sign"_a = 1);
  m.def("bbar", &bbar, "d"_a);
  m.def("make_map",
        [](const std::string& kind, Index d) {
          const auto k = parse_map_kind(kind);
          if (!k) throw InvalidArgument("unknown map kind '" + kind + "'");
          return make_map(*k, d);
        },
        "kind"_a, "d"_a);
  m.def("reduce_by_symmetry",
        [](const ComplexMatrix& u) {
          SymmetryBlocks b = reduce_by_symmetry(u);
          return py::make_tuple(b.minus, b.plus, b.off_diagonal);
        },
        "u"_a, "Returns (minus_block, plus_block, off_diagonal_residual).");
  m.def("reflection_commutator", &reflection_commutator, "u"_a);
  m.def("time_reversal_residual", &time_reversal_residual, "m"_a);

  // random
  m.def("haar_state",
        [](Index d, std::uint64_t seed, std::uint64_t stream) {
          RngStream rng(seed, stream);
          return haar_state(d, rng);
        },
        "d"_a, "seed"_a, "stream"_a = 0);
  m.def("product_state",
        [](const Split& split, std::uint64_t seed, std::uint64_t stream) {
          RngStream rng(seed, stream);
          return product_state(to_part(split), rng);
        },
        "split"_a, "seed"_a, "stream"_a = 0);
  m.def("sample_ensemble",
        [](const std::string& kind, Index d, std::uint64_t seed, std::uint64_t stream) {
          const auto k = parse_ensemble_kind(kind);
          if (!k) throw InvalidArgument("unknown ensemble '" + kind + "'");
          RngStream rng(seed, stream);
          return sample_ensemble(*k, d, rng);
        },
        "kind"_a, "d"_a, "seed"_a, "stream"_a = 0);
  m.def("sample_local_unitary",
        [](const Split& split, std::uint64_t seed, std::uint64_t stream) {
          RngStream rng(seed, stream);
          return sample_local_unitary(to_part(split), rng);
        },
        "split"_a, "seed"_a, "stream"_a = 0);

  // entangling
  m.def("linear_entropy",
        [](const StateVector& psi, const Split& split, const std::string& keep) {
          return linear_entropy(psi, to_part(split), to_subsystem(keep));
        },
        "psi"_a, "split"_a, "keep"_a = "A");
  m.def("cue_mean_entropy", [](const Split& s) { return cue_mean_entropy(to_part(s)); },
        "split"_a);
  m.def("max_linear_entropy", [](const Split& s) { return max_linear_entropy(to_part(s)); },
        "split"_a);
  m.def("entropy_timeseries",
        [](const ComplexMatrix& u, const StateVector& psi0, const Split& split,
           std::int64_t n_max) {
          const auto samples = entropy_timeseries(u, psi0, to_part(split), n_max);
          py::array_t<double> out(static_cast<py::ssize_t>(samples.size()));
          auto view = out.mutable_unchecked<1>();
          for (std::size_t i = 0; i < samples.size(); ++i) {
            view(static_cast<py::ssize_t>(i)) = samples[i].value;
          }
          return out;
        },
        "u"_a, "psi0"_a, "split"_a, "n_max"_a, "S_L(U^n psi0) for n = 1..n_max.");
  m.def("entangling_power_mc",
        [](const ComplexMatrix& u, const Split& split, std::int64_t n, std::uint64_t seed) {
          const auto est = entangling_power_mc(u, to_part(split), n, seed);
          return py::make_tuple(est.mean, est.std_error);
        },
        "u"_a, "split"_a, "n_samples"_a, "seed"_a, "Returns (mean, std_error).");
  m.def("time_state_average",
        [](const ComplexMatrix& u, const Split& split, std::int64_t n_min, std::int64_t n_max,
           std::int64_t n_states, std::uint64_t seed) {
          const auto est = time_state_average(u, to_part(split), n_min, n_max, n_states, seed);
          return py::make_tuple(est.mean, est.std_error);
        },
        "u"_a, "split"_a, "n_min"_a, "n_max"_a, "n_states"_a, "seed"_a,
        "Returns (mean, std_error).");
  m.def("empirical_asymptotic_distribution",
        [](const ComplexMatrix& u, const Split& split, std::int64_t n_min, std::int64_t n_max,
           std::int64_t n_states, std::uint64_t seed) {
          return to_grid(
              empirical_asymptotic_distribution(u, to_part(split), n_min, n_max, n_states, seed),
              n_states);
        },
        "u"_a, "split"_a, "n_min"_a, "n_max"_a, "n_states"_a, "seed"_a,
        "Array of shape (n_states, n_max - n_min + 1).");
  m.def("ensemble_entropies",
        [](const std::string& kind, const Split& split, std::int64_t n_maps,
           std::int64_t n_states, std::uint64_t seed) {
          const auto k = parse_ensemble_kind(kind);
          if (!k) throw InvalidArgument("unknown ensemble '" + kind + "'");
          return to_grid(ensemble_entropies(*k, to_part(split), n_maps, n_states, seed), n_maps);
        },
        "kind"_a, "split"_a, "n_maps"_a, "n_states"_a, "seed"_a,
        "Array of shape (n_maps, n_states).");
  m.def("commensurability_check",
        [](const std::vector<double>& phases, double tol, Index exhaustive_max_dim,
           std::uint64_t budget, std::uint64_t seed) {
          return report_to_dict(
              commensurability_check(phases, make_policy(tol, exhaustive_max_dim, budget, seed)));
        },
        "phases"_a, "tol"_a = 1e-8, "exhaustive_max_dim"_a = 64, "budget"_a = 10'000'000,
        "seed"_a = 0);

  py::class_<AsymptoticEntanglement>(m, "AsymptoticEntanglement")
      .def(py::init([](const ComplexMatrix& u, const Split& split, double tol,
                       Index exhaustive_max_dim, std::uint64_t budget, std::uint64_t seed) {
             return AsymptoticEntanglement(eigensystem(u), to_part(split),
                                           make_policy(tol, exhaustive_max_dim, budget, seed));
           }),
           "u"_a, "split"_a, "tol"_a = 1e-8, "exhaustive_max_dim"_a = 64,
           "budget"_a = 10'000'000, "seed"_a = 0)
      .def("entropy", &AsymptoticEntanglement::entropy, "psi"_a)
      .def("entangling_power", &AsymptoticEntanglement::entangling_power)
      .def_property_readonly("assumptions_hold", &AsymptoticEntanglement::assumptions_hold)
      .def_property_readonly("commensurability", [](const AsymptoticEntanglement& a) {
        return report_to_dict(a.commensurability());
      });
}
