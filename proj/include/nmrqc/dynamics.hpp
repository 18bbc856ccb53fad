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

#include <vector>

#include "nmrqc/spin_system.hpp"
#include "nmrqc/spinops.hpp"

namespace nmrqc {

/// Phenomenological relaxation: coherences decay with the T2 of every spin
/// that flips between the two basis states; longitudinal orders relax with T1
/// toward the thermal state set by `polarization`.
struct RelaxationParams {
    std::vector<double> t1_s;
    std::vector<double> t2_s;
    std::vector<double> polarization;
    bool enabled = false;

    static RelaxationParams off() { return {}; }
    static RelaxationParams from(const SpinSystem& sys, bool enabled = true);

    /// Throws unless enabled parameters cover `n_spins` with T1 >= T2 > 0.
    void validate(int n_spins) const;
};

/// Coefficient of Iz_i in the high-temperature thermal state for a spin of
/// the given polarization: polarization * 2^(1-N). For one spin this gives
/// 1/2 + p Iz, i.e. level populations (1 +- p) / 2.
double thermal_iz_coefficient(double polarization, int n_spins);

/// U = exp(-i 2pi H t) for H in Hz, by eigendecomposition.
Operator propagator(const Operator& h_hz, double t_s);

/// Ideal instantaneous rotation exp(-i angle I_axis) on one spin.
Operator pulse(int spin, Axis axis, double angle_rad, int n_spins);

/// Rotation about the transverse axis at `phase_rad` from +x toward +y.
Operator phased_pulse(int spin, double phase_rad, double angle_rad, int n_spins);

/// exp(-i angle Iz) on one spin.
Operator z_rotation(int spin, double angle_rad, int n_spins);

/// U rho U^dagger.
DensityMatrix evolve(const DensityMatrix& rho, const Operator& u);

/// Free evolution under `h_hz` for `t_s` seconds. With relaxation enabled H
/// must be diagonal in the product basis; each coherence then picks up its
/// phase and decays, and the populations relax toward equilibrium.
DensityMatrix delay(const DensityMatrix& rho, const Operator& h_hz, double t_s, const RelaxationParams& relax);

/// Diagonal thermal state reached by T1 relaxation (full kind), or its
/// deviation part.
DensityMatrix thermal_equilibrium(const std::vector<double>& polarization, StateKind kind = StateKind::full);

}  // namespace nmrqc
