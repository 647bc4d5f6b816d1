# Copyright 2026 The bakerlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quantum baker maps, random unitary ensembles and entangling power.

Bipartitions are passed as ``split=(d_a, d_b)``; basis index
``j = j_a * d_b + j_b``. Seeded functions are deterministic in
``(seed, stream)``.
"""

from ._core import (
    AsymptoticEntanglement,
    EigenSystem,
    InvalidArgument,
    NumericalError,
    antiperiodic_fourier,
    baker,
    bbar,
    commensurability_check,
    cue_mean_entropy,
    d_map,
    dagger,
    eigensystem,
    empirical_asymptotic_distribution,
    ensemble_entropies,
    entangling_power_mc,
    entropy_timeseries,
    haar_state,
    kron,
    lambda_basis,
    linear_entropy,
    make_map,
    max_linear_entropy,
    partial_trace,
    product_state,
    reduce_by_symmetry,
    reduced_density,
    reflection,
    reflection_commutator,
    sample_ensemble,
    sample_local_unitary,
    swap_subsystems,
    time_reversal_residual,
    time_state_average,
    unitarity_residual,
)

__version__ = "0.1.0"


def asymptotic_entangling_power(u, split, **policy):
    """Returns (value, assumptions_violated)."""
    asym = AsymptoticEntanglement(u, split, **policy)
    return asym.entangling_power(), not asym.assumptions_hold


def asymptotic_entropy(u, psi, split, **policy):
    """Returns (value, assumptions_violated)."""
    asym = AsymptoticEntanglement(u, split, **policy)
    return asym.entropy(psi), not asym.assumptions_hold
