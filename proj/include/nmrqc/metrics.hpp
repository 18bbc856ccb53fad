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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nmrqc/hamiltonians.hpp"
#include "nmrqc/spin_system.hpp"

namespace nmrqc {

/// Recycle delay as a multiple of the longest T1.
inline constexpr double kWaitT1Multiple = 5.0;

/// 2 |J + 2D| for one pair, in Hz. Throws on an uncoupled pair.
double clock_frequency(const SpinSystem& sys, SpinPair pair);

/// Clock of the whole register: the slowest coupled pair.
double clock_frequency(const SpinSystem& sys);

/// Gates executable within the shortest coherence time: min_i T2_i * f_clock.
double figure_of_merit(const SpinSystem& sys);

/// 5 * max_i T1_i.
double wait_time(const SpinSystem& sys);

struct MetricsReport {
    std::string solvent;
    double f_clock_hz = 0.0;
    double t2_min_s = 0.0;
    double figure_of_merit = 0.0;
    double wait_time_s = 0.0;
    std::vector<double> wait_time_per_spin_s;
    std::optional<double> speedup_vs_reference;
    std::optional<double> figure_of_merit_ratio;
    std::optional<double> wait_time_ratio;
};

MetricsReport metrics_report(const SpinSystem& sys, const std::optional<SpinSystem>& reference = std::nullopt);
nlohmann::json to_json(const MetricsReport& report);

/// Max-norm distance between the propagators of the full and secular
/// two-spin Hamiltonians, with the spins placed `separation_hz` apart, over
/// one coupling gate time 1 / (2 |coupling|).
double secular_discrepancy(const SpinSystem& sys, double separation_hz,
                           CouplingRegime regime = CouplingRegime::liquid_crystal);

}  // namespace nmrqc
