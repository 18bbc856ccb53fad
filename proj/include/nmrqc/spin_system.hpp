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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace nmrqc {

struct Spin {
    std::string label;
    std::string isotope;
    /// Resonance offset in the rotating frame of this spin's isotope, Hz.
    double nu_hz = 0.0;
    double t1_s = 1.0;
    double t2_s = 1.0;
    /// Equilibrium polarization (population difference of the spin's two
    /// levels). Sets both the thermal state and the T1 relaxation target.
    double polarization = 0.0;
};

struct SpinPair {
    int i = 0;
    int j = 1;
};

/// Equilibrium polarization of a proton at 9.4 T and 300 K.
inline constexpr double kProtonPolarization = 6.4e-5;

/// Gyromagnetic ratio / 2pi in MHz/T for the isotopes the profiles use.
double gyromagnetic_ratio_mhz_per_t(std::string_view isotope);

/// Thermal polarization of `isotope` scaled from kProtonPolarization.
double default_polarization(std::string_view isotope);

/// Spins, their pairwise couplings in Hz, and relaxation times. J and D are
/// symmetric with zero diagonal; T1 >= T2 > 0 for every spin.
class SpinSystem {
   public:
    SpinSystem(std::vector<Spin> spins, Eigen::MatrixXd j_hz, Eigen::MatrixXd d_hz, std::string solvent);

    int n_spins() const { return static_cast<int>(spins_.size()); }
    int dim() const { return 1 << n_spins(); }
    const std::vector<Spin>& spins() const { return spins_; }
    const Spin& spin(int i) const { return spins_.at(static_cast<size_t>(i)); }
    const Eigen::MatrixXd& j_hz() const { return j_; }
    const Eigen::MatrixXd& d_hz() const { return d_; }
    double j_hz(int i, int k) const { return j_(i, k); }
    double d_hz(int i, int k) const { return d_(i, k); }
    const std::string& solvent() const { return solvent_; }

    bool heteronuclear(int i, int k) const { return spin(i).isotope != spin(k).isotope; }
    bool has_dipolar() const;
    void check_pair(SpinPair p) const;

    /// Index of the spin whose label or isotope equals `name` ("H", "1H").
    int find_spin(std::string_view name) const;

    SpinSystem with_frequencies(const std::vector<double>& nu_hz) const;
    SpinSystem with_couplings(SpinPair p, double j_hz, double d_hz) const;
    SpinSystem with_relaxation(int spin, double t1_s, double t2_s) const;

   private:
    std::vector<Spin> spins_;
    Eigen::MatrixXd j_;
    Eigen::MatrixXd d_;
    std::string solvent_;
};

/// Profile schema:
///   {"solvent": str,
///    "spins": [{"label", "isotope", "nu_hz", "t1_s", "t2_s", ["polarization"]}],
///    "couplings": [{"i", "j", "j_hz", "d_hz"}]}
SpinSystem spin_system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SpinSystem& sys);
SpinSystem load_profile(const std::filesystem::path& path);

/// 13C-1H chloroform in acetone-d6: J = 215 Hz, no dipolar coupling.
SpinSystem chloroform_acetone();
/// 13C-1H chloroform in ZLI-1167: J + 2D = 1706 Hz, attributed entirely to
/// D = 853 Hz with J = 0.
SpinSystem chloroform_zli1167();

}  // namespace nmrqc
