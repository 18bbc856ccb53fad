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

#include "nmrqc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nmrqc/dynamics.hpp"
#include "nmrqc/error.hpp"

namespace nmrqc {

double clock_frequency(const SpinSystem& sys, SpinPair pair) {
    const double j = effective_coupling(sys, pair);
    if (j == 0.0) {
        throw InvalidArgument("pair (" + std::to_string(pair.i) + ", " + std::to_string(pair.j) + ") is uncoupled");
    }
    return 2.0 * std::abs(j);
}

double clock_frequency(const SpinSystem& sys) {
    double slowest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < sys.n_spins(); ++i) {
        for (int j = i + 1; j < sys.n_spins(); ++j) {
            if (effective_coupling(sys, SpinPair{i, j}) != 0.0) {
                slowest = std::min(slowest, clock_frequency(sys, SpinPair{i, j}));
            }
        }
    }
    if (!std::isfinite(slowest)) {
        throw InvalidArgument("spin system has no coupled pair");
    }
    return slowest;
}

namespace {

double t2_min(const SpinSystem& sys) {
    double t = std::numeric_limits<double>::infinity();
    for (const auto& s : sys.spins()) {
        t = std::min(t, s.t2_s);
    }
    return t;
}

}  // namespace

double figure_of_merit(const SpinSystem& sys) {
    return t2_min(sys) * clock_frequency(sys);
}

double wait_time(const SpinSystem& sys) {
    double t1 = 0.0;
    for (const auto& s : sys.spins()) {
        t1 = std::max(t1, s.t1_s);
    }
    return kWaitT1Multiple * t1;
}

MetricsReport metrics_report(const SpinSystem& sys, const std::optional<SpinSystem>& reference) {
    MetricsReport r;
    r.solvent = sys.solvent();
    r.f_clock_hz = clock_frequency(sys);
    r.t2_min_s = t2_min(sys);
    r.figure_of_merit = r.t2_min_s * r.f_clock_hz;
    r.wait_time_s = wait_time(sys);
    for (const auto& s : sys.spins()) {
        r.wait_time_per_spin_s.push_back(kWaitT1Multiple * s.t1_s);
    }
    if (reference) {
        r.speedup_vs_reference = r.f_clock_hz / clock_frequency(*reference);
        r.figure_of_merit_ratio = r.figure_of_merit / figure_of_merit(*reference);
        r.wait_time_ratio = r.wait_time_s / wait_time(*reference);
    }
    return r;
}

nlohmann::json to_json(const MetricsReport& report) {
    nlohmann::json j{{"solvent", report.solvent},
                     {"f_clock_hz", report.f_clock_hz},
                     {"t2_min_s", report.t2_min_s},
                     {"figure_of_merit", report.figure_of_merit},
                     {"wait_time_s", report.wait_time_s},
                     {"wait_time_per_spin_s", report.wait_time_per_spin_s}};
    if (report.speedup_vs_reference) {
        j["speedup_vs_reference"] = *report.speedup_vs_reference;
    }
    if (report.figure_of_merit_ratio) {
        j["figure_of_merit_ratio"] = *report.figure_of_merit_ratio;
    }
    if (report.wait_time_ratio) {
        j["wait_time_ratio"] = *report.wait_time_ratio;
    }
    return j;
}

double secular_discrepancy(const SpinSystem& sys, double separation_hz, CouplingRegime regime) {
    if (sys.n_spins() != 2) {
        throw WrongArity("secular check is defined for two spins");
    }
    const SpinSystem shifted = sys.with_frequencies({0.0, separation_hz});
    const bool lc = regime == CouplingRegime::liquid_crystal;
    const double coupling = lc ? effective_coupling(sys, SpinPair{0, 1}) : sys.j_hz(0, 1);
    if (coupling == 0.0) {
        throw InvalidArgument("secular check needs a nonzero coupling");
    }
    const double t = 1.0 / (2.0 * std::abs(coupling));
    const Operator full = lc ? h_lc(shifted) : h_iso(shifted);
    const Operator weak = lc ? h_lc_weak(shifted, FirstOrderCheck::skip) : h_iso_weak(shifted, FirstOrderCheck::skip);
    return max_abs(propagator(full, t).matrix() - propagator(weak, t).matrix());
}

}  // namespace nmrqc
