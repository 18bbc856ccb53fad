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

#include "nmrqc/spin_system.hpp"

#include <cmath>
#include <fstream>

#include "nmrqc/error.hpp"
#include "nmrqc/spinops.hpp"

namespace nmrqc {

double gyromagnetic_ratio_mhz_per_t(std::string_view isotope) {
    struct Entry {
        std::string_view isotope;
        double gamma;
    };
    static constexpr Entry kTable[] = {
        {"1H", 42.577478}, {"2H", 6.535903},   {"13C", 10.708395}, {"15N", -4.316},
        {"19F", 40.078},   {"31P", 17.235},    {"29Si", -8.465},
    };
    for (const auto& e : kTable) {
        if (e.isotope == isotope) {
            return e.gamma;
        }
    }
    throw ProfileError("unknown isotope '" + std::string(isotope) + "'");
}

double default_polarization(std::string_view isotope) {
    return kProtonPolarization * gyromagnetic_ratio_mhz_per_t(isotope) / gyromagnetic_ratio_mhz_per_t("1H");
}

SpinSystem::SpinSystem(std::vector<Spin> spins, Eigen::MatrixXd j_hz, Eigen::MatrixXd d_hz, std::string solvent)
    : spins_(std::move(spins)), j_(std::move(j_hz)), d_(std::move(d_hz)), solvent_(std::move(solvent)) {
    const auto n = static_cast<Eigen::Index>(spins_.size());
    if (n < 1 || n > kMaxSpins) {
        throw InvalidArgument("spin system must have 1.." + std::to_string(kMaxSpins) + " spins");
    }
    if (j_.rows() != n || j_.cols() != n || d_.rows() != n || d_.cols() != n) {
        throw DimensionMismatch("coupling matrices must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    for (Eigen::Index a = 0; a < n; ++a) {
        if (j_(a, a) != 0.0 || d_(a, a) != 0.0) {
            throw InvalidArgument("coupling matrices must have a zero diagonal");
        }
        for (Eigen::Index b = a + 1; b < n; ++b) {
            if (j_(a, b) != j_(b, a) || d_(a, b) != d_(b, a)) {
                throw InvalidArgument("coupling matrices must be symmetric");
            }
        }
    }
    for (const auto& s : spins_) {
        if (!(s.t2_s > 0.0) || !(s.t1_s >= s.t2_s)) {
            throw InvalidArgument("spin '" + s.label + "' violates T1 >= T2 > 0");
        }
        if (!std::isfinite(s.nu_hz) || std::abs(s.polarization) > 1.0) {
            throw InvalidArgument("spin '" + s.label + "' has an invalid frequency or polarization");
        }
    }
}

bool SpinSystem::has_dipolar() const {
    return d_.cwiseAbs().maxCoeff() > 0.0;
}

void SpinSystem::check_pair(SpinPair p) const {
    if (p.i < 0 || p.j < 0 || p.i >= n_spins() || p.j >= n_spins() || p.i == p.j) {
        throw InvalidArgument("invalid spin pair (" + std::to_string(p.i) + ", " + std::to_string(p.j) + ")");
    }
}

int SpinSystem::find_spin(std::string_view name) const {
    for (int i = 0; i < n_spins(); ++i) {
        if (spins_[static_cast<size_t>(i)].label == name) {
            return i;
        }
    }
    for (int i = 0; i < n_spins(); ++i) {
        if (spins_[static_cast<size_t>(i)].isotope == name) {
            return i;
        }
    }
    throw InvalidArgument("no spin labelled '" + std::string(name) + "'");
}

SpinSystem SpinSystem::with_frequencies(const std::vector<double>& nu_hz) const {
    if (static_cast<int>(nu_hz.size()) != n_spins()) {
        throw DimensionMismatch("frequency list length does not match spin count");
    }
    auto spins = spins_;
    for (size_t i = 0; i < spins.size(); ++i) {
        spins[i].nu_hz = nu_hz[i];
    }
    return SpinSystem(std::move(spins), j_, d_, solvent_);
}

SpinSystem SpinSystem::with_couplings(SpinPair p, double j_hz, double d_hz) const {
    check_pair(p);
    Eigen::MatrixXd j = j_;
    Eigen::MatrixXd d = d_;
    j(p.i, p.j) = j(p.j, p.i) = j_hz;
    d(p.i, p.j) = d(p.j, p.i) = d_hz;
    return SpinSystem(spins_, std::move(j), std::move(d), solvent_);
}

SpinSystem SpinSystem::with_relaxation(int spin, double t1_s, double t2_s) const {
    auto spins = spins_;
    auto& s = spins.at(static_cast<size_t>(spin));
    s.t1_s = t1_s;
    s.t2_s = t2_s;
    return SpinSystem(std::move(spins), j_, d_, solvent_);
}

SpinSystem spin_system_from_json(const nlohmann::json& j) {
    try {
        std::vector<Spin> spins;
        for (const auto& s : j.at("spins")) {
            Spin spin;
            spin.label = s.at("label").get<std::string>();
            spin.isotope = s.at("isotope").get<std::string>();
            spin.nu_hz = s.at("nu_hz").get<double>();
            spin.t1_s = s.at("t1_s").get<double>();
            spin.t2_s = s.at("t2_s").get<double>();
            spin.polarization =
                s.contains("polarization") ? s["polarization"].get<double>() : default_polarization(spin.isotope);
            spins.push_back(std::move(spin));
        }
        const auto n = static_cast<Eigen::Index>(spins.size());
        Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(n, n);
        Eigen::MatrixXd dm = Eigen::MatrixXd::Zero(n, n);
        Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(n, n);
        for (const auto& c : j.value("couplings", nlohmann::json::array())) {
            const int a = c.at("i").get<int>();
            const int b = c.at("j").get<int>();
            if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
                throw ProfileError("coupling references invalid pair (" + std::to_string(a) + ", " +
                                   std::to_string(b) + ")");
            }
            if (seen(a, b)++ != 0) {
                throw ProfileError("duplicate coupling entry for pair (" + std::to_string(a) + ", " +
                                   std::to_string(b) + ")");
            }
            seen(b, a) = 1;
            jm(a, b) = jm(b, a) = c.value("j_hz", 0.0);
            dm(a, b) = dm(b, a) = c.value("d_hz", 0.0);
        }
        return SpinSystem(std::move(spins), std::move(jm), std::move(dm), j.value("solvent", std::string{}));
    } catch (const nlohmann::json::exception& e) {
        throw ProfileError(std::string("malformed profile: ") + e.what());
    } catch (const ProfileError&) {
        throw;
    } catch (const Error& e) {
        throw ProfileError(std::string("invalid profile: ") + e.what());
    }
}

nlohmann::json to_json(const SpinSystem& sys) {
    nlohmann::json out;
    out["solvent"] = sys.solvent();
    auto& spins = out["spins"] = nlohmann::json::array();
    for (const auto& s : sys.spins()) {
        spins.push_back({{"label", s.label},
                         {"isotope", s.isotope},
                         {"nu_hz", s.nu_hz},
                         {"t1_s", s.t1_s},
                         {"t2_s", s.t2_s},
                         {"polarization", s.polarization}});
    }
    auto& couplings = out["couplings"] = nlohmann::json::array();
    for (int a = 0; a < sys.n_spins(); ++a) {
        for (int b = a + 1; b < sys.n_spins(); ++b) {
            if (sys.j_hz(a, b) != 0.0 || sys.d_hz(a, b) != 0.0) {
                couplings.push_back({{"i", a}, {"j", b}, {"j_hz", sys.j_hz(a, b)}, {"d_hz", sys.d_hz(a, b)}});
            }
        }
    }
    return out;
}

SpinSystem load_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ProfileError("cannot open profile '" + path.string() + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ProfileError("cannot parse profile '" + path.string() + "': " + e.what());
    }
    return spin_system_from_json(j);
}

namespace {

SpinSystem chloroform(std::string solvent, double j_hz, double d_hz, double h_t1, double h_t2, double c_t1,
                      double c_t2) {
    const Spin h{"H", "1H", 0.0, h_t1, h_t2, default_polarization("1H")};
    const Spin c{"C", "13C", 0.0, c_t1, c_t2, default_polarization("13C")};
    Eigen::MatrixXd j(2, 2);
    j << 0.0, j_hz, j_hz, 0.0;
    Eigen::MatrixXd d(2, 2);
    d << 0.0, d_hz, d_hz, 0.0;
    return SpinSystem({h, c}, j, d, std::move(solvent));
}

}  // namespace

SpinSystem chloroform_acetone() {
    return chloroform("acetone-d6", 215.0, 0.0, 19.0, 7.0, 25.0, 0.3);
}

SpinSystem chloroform_zli1167() {
    return chloroform("ZLI-1167", 0.0, 853.0, 1.4, 0.7, 2.0, 0.2);
}

}  // namespace nmrqc
