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

#include <string>
#include <vector>

#include "nmrqc/spin_system.hpp"

namespace fixtures {

inline nmrqc::Spin spin(std::string label, std::string isotope, double nu, double t1 = 2.0, double t2 = 1.0,
                        double p = 0.0) {
    return nmrqc::Spin{std::move(label), std::move(isotope), nu, t1, t2, p};
}

// Two spins with couplings j and d. Isotopes default to 1H/13C so the pair
// is heteronuclear and always first order.
inline nmrqc::SpinSystem pair(double nu_a, double nu_b, double j, double d, std::string iso_a = "1H",
                              std::string iso_b = "13C") {
    Eigen::MatrixXd jm(2, 2);
    jm << 0, j, j, 0;
    Eigen::MatrixXd dm(2, 2);
    dm << 0, d, d, 0;
    return nmrqc::SpinSystem({spin("A", iso_a, nu_a), spin("B", iso_b, nu_b)}, jm, dm, "test");
}

inline nmrqc::SpinSystem single(double nu, double t1 = 2.0, double t2 = 1.0) {
    return nmrqc::SpinSystem({spin("A", "1H", nu, t1, t2)}, Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Zero(1, 1),
                             "test");
}

inline std::string profile(const std::string& name) {
    return std::string(NMRQC_PROFILE_DIR) + "/" + name;
}

}  // namespace fixtures
