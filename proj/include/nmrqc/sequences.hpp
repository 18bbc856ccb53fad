// Copyright 2026 The nmrqc Authors
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

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nmrqc/dynamics.hpp"
#include "nmrqc/gates.hpp"
#include "nmrqc/spin_system.hpp"
#include "nmrqc/spinops.hpp"

namespace nmrqc {

/// High-temperature thermal state 2^-N 1 + sum_i p_i 2^(1-N) Iz_i.
/// Throws if any |p_i| > 1 or the state would not be positive.
DensityMatrix thermal_state(const SpinSystem& sys, const std::vector<double>& polarizations);
/// Uses each spin's configured equilibrium polarization.
DensityMatrix thermal_state(const SpinSystem& sys);

/// CNOT built from y pulses and a coupled evolution.
Gate cnot(int control, int target);

/// Diagonal gate putting a -1 on basis state `bits` (two spins), up to a
/// global phase, built from one pi coupled evolution and z rotations.
std::vector<Gate> phase_flip_primitives(std::string_view bits);

/// The three temporal-labeling preparations {1, P, P^2}. P maps
/// |01> -> |11> -> |10> -> |01> and fixes |00>.
std::array<GateSequence, 3> temporal_labeling_preps(int n_spins = 2);

/// Averages the three labeled copies of `rho`; the deviation of the result
/// is proportional to |00><00| - 1/4.
DensityMatrix temporal_average(const DensityMatrix& rho);

/// diag(+-1) with -1 at index x0.
Operator oracle_gate(std::string_view x0);

/// Single-iteration two-qubit Grover search for `x0` with pseudo-Hadamard
/// (90 degree y) superposition pulses. Maps |00> to |x0>.
GateSequence grover_circuit(std::string_view x0);

/// Exact unitary of a gate or sequence, computed from gate definitions
/// (oracles as their diagonal matrix, not their pulse decomposition).
Operator gate_unitary(const Gate& gate, int n_spins);
Operator unitary(const GateSequence& seq);

/// Flattens composites and replaces oracles with their primitive
/// decomposition; the result has only Rotation and CoupledEvolution gates.
GateSequence expand(const GateSequence& seq);

/// Gates to pulses and delays. Transverse rotations become pulses, a coupled
/// evolution of phase phi on pair (i, j) becomes a delay of
/// phi / (2 pi |J_ij + 2 D_ij|), and z rotations (including the Zeeman
/// precession accumulated during delays) are tracked in the software frame.
PulseSequence compile(const GateSequence& gates, const SpinSystem& sys);

using RunObserver =
    std::function<void(const PulseSequenceEvent& event, const DensityMatrix& before, const DensityMatrix& after)>;

/// Plays a pulse sequence on `rho0`: pulses as ideal rotations, delays under
/// the weak-coupling Hamiltonian of `sys`, then the residual frame rotation so
/// the result is expressed in the frame the compiler tracked.
DensityMatrix run(const DensityMatrix& rho0, const PulseSequence& seq, const SpinSystem& sys,
                  const RelaxationParams& relax, const RunObserver& observer = {});

/// Expected number of oracle evaluations for a classical search among `n`
/// elements, querying in random order. When n >= 3 the last element is
/// inferred after n - 1 misses instead of being queried; with one or two
/// elements every candidate, including the last, is confirmed by a query.
/// Gives 1, 1.5 and 2.25 for n = 1, 2 and 4.
double classical_query_expectation(int n_elements);

struct GroverResult {
    std::string x0;
    /// Average of the three temporally labeled experiments.
    DensityMatrix state;
    /// Effective pure-state fidelity with |x0>.
    double fidelity;
    double duration_s;
};

/// Full pipeline: thermal state, each temporal-labeling preparation followed
/// by the compiled Grover circuit, averaged.
GroverResult run_grover(const SpinSystem& sys, std::string_view x0, const RelaxationParams& relax,
                        const RunObserver& observer = {});

}  // namespace nmrqc
