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

// Gate-level and pulse-level program representations. Both serialize to JSON
// with angles in degrees and durations in seconds.

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "nmrqc/spinops.hpp"

namespace nmrqc {

/// exp(-i angle I_axis) on one spin. z rotations compile to frame updates.
struct Rotation {
    int spin = 0;
    Axis axis = Axis::x;
    double angle_rad = 0.0;
};

/// exp(-i phase Iz_i Iz_j): free evolution under the pair's weak coupling.
struct CoupledEvolution {
    int i = 0;
    int j = 1;
    double phase_rad = 0.0;
};

/// Phase oracle marking the basis state `x0`; counts as one query.
struct Oracle {
    std::string x0;
};

struct Gate;

/// Named group of gates, e.g. "cnot(0,1)" or "diffusion".
struct Composite {
    std::string label;
    std::vector<Gate> gates;
};

struct Gate {
    std::variant<Rotation, CoupledEvolution, Oracle, Composite> op;
};

struct GateSequence {
    int n_spins = 2;
    std::vector<Gate> gates;

    /// Throws if any gate references a spin outside [0, n_spins) or the
    /// oracle label has the wrong length.
    void validate() const;
    GateSequence& append(const GateSequence& other);
};

Gate rotation(int spin, Axis axis, double angle_rad);
Gate coupled_evolution(int i, int j, double phase_rad);
Gate oracle(std::string x0);
Gate composite(std::string label, std::vector<Gate> gates);

/// Number of Oracle gates, searching composites recursively.
int count_oracle_queries(const GateSequence& seq);

struct PulseEvent {
    int spin = 0;
    /// Transverse rotation axis measured from +x toward +y.
    double phase_rad = 0.0;
    double angle_rad = 0.0;
};

struct DelayEvent {
    double duration_s = 0.0;
};

/// Acquisition on the listed spins' channels.
struct AcquireEvent {
    std::vector<int> spins;
};

using PulseSequenceEvent = std::variant<PulseEvent, DelayEvent, AcquireEvent>;

struct PulseSequence {
    int n_spins = 2;
    std::vector<PulseSequenceEvent> events;
    /// Accumulated software frame rotation per spin (z rotations applied by
    /// phase bookkeeping instead of pulses).
    std::vector<double> frame_rad;

    /// Durations >= 0, at most one acquire and only as the last event.
    void validate() const;
    double duration_s() const;
    bool empty() const { return events.empty(); }
};

nlohmann::json to_json(const GateSequence& seq);
GateSequence gate_sequence_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PulseSequence& seq);
PulseSequence pulse_sequence_from_json(const nlohmann::json& j);

}  // namespace nmrqc
