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

// Spin Hamiltonians in frequency units (H/h, Hz). Frequencies are offsets in
// a rotating frame, one frame per isotope.

#include <Eigen/Dense>

#include "nmrqc/spin_system.hpp"
#include "nmrqc/spinops.hpp"

namespace nmrqc {

enum class CouplingRegime { isotropic, liquid_crystal };

/// Whether weak-coupling builders refuse systems failing first_order_ok.
enum class FirstOrderCheck { enforce, skip };

inline constexpr double kFirstOrderRatio = 10.0;

using PairMask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Isotropic-solution Hamiltonian: Zeeman offsets plus full scalar (J)
/// coupling I_i . I_j. Dipolar couplings are ignored.
Operator h_iso(const SpinSystem& sys);

/// Secular isotropic Hamiltonian: sum nu_i Iz_i + sum J_ij Iz_i Iz_j.
Operator h_iso_weak(const SpinSystem& sys, FirstOrderCheck check = FirstOrderCheck::enforce,
                    double ratio_threshold = kFirstOrderRatio);

/// Oriented-solute Hamiltonian: h_iso plus the dipolar term
/// D_ij (2 Iz_i Iz_j - (Ix_i Ix_j + Iy_i Iy_j) / 2).
Operator h_lc(const SpinSystem& sys);

/// Secular two-spin oriented-solute Hamiltonian:
/// nu_A Iz_A + nu_B Iz_B + (J + 2D) Iz_A Iz_B. Requires exactly two spins.
Operator h_lc_weak(const SpinSystem& sys, FirstOrderCheck check = FirstOrderCheck::enforce,
                   double ratio_threshold = kFirstOrderRatio);

/// The weak-coupling Hamiltonian used for free evolution: h_lc_weak when the
/// system has dipolar couplings, h_iso_weak otherwise.
Operator h_weak(const SpinSystem& sys, FirstOrderCheck check = FirstOrderCheck::enforce);

/// Per-pair first-order test. Pair (i, j) passes when the spins are different
/// isotopes, or when |nu_i - nu_j| >= ratio * |coupling|, where the coupling
/// is J_ij (isotropic) or J_ij + 2 D_ij (liquid crystal). The diagonal is true.
PairMask first_order_ok(const SpinSystem& sys, double ratio_threshold = kFirstOrderRatio,
                        CouplingRegime regime = CouplingRegime::liquid_crystal);

/// J_ij + 2 D_ij in Hz.
double effective_coupling(const SpinSystem& sys, SpinPair pair);

}  // namespace nmrqc
