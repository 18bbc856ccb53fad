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

#include "nmrqc/tomography.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "nmrqc/error.hpp"
#include "nmrqc/sequences.hpp"

namespace nmrqc {

namespace {

constexpr int kExperiments = 9;
constexpr int kComponents = 15;

Matrix pauli(int k) {
    Matrix m = Matrix::Zero(2, 2);
    switch (k) {
        case 0:
            m << 1.0, 0.0, 0.0, 1.0;
            break;
        case 1:
            m << 0.0, 1.0, 1.0, 0.0;
            break;
        case 2:
            m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
            break;
        default:
            m << 1.0, 0.0, 0.0, -1.0;
            break;
    }
    return m;
}

void require_two_spins(int n) {
    if (n != 2) {
        throw WrongArity("tomography is implemented for two spins, got " + std::to_string(n));
    }
}

}  // namespace

std::vector<PulseSequence> tomography_experiment_set(int n_spins) {
    require_two_spins(n_spins);
    // none, 90x, 90y
    const double phases[] = {0.0, 0.0, std::numbers::pi / 2.0};
    std::vector<PulseSequence> out;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            PulseSequence seq;
            seq.n_spins = 2;
            if (a != 0) {
                seq.events.emplace_back(PulseEvent{0, phases[a], std::numbers::pi / 2.0});
            }
            if (b != 0) {
                seq.events.emplace_back(PulseEvent{1, phases[b], std::numbers::pi / 2.0});
            }
            seq.events.emplace_back(AcquireEvent{{0, 1}});
            out.push_back(std::move(seq));
        }
    }
    return out;
}

TomographySettings TomographySettings::defaults(const SpinSystem& sys) {
    TomographySettings s;
    s.relax = RelaxationParams::from(sys, true);
    for (int i = 0; i < sys.n_spins(); ++i) {
        s.acquisition.push_back(default_acquisition(sys, i));
    }
    return s;
}

std::vector<Measurement> simulate_measurements(const DensityMatrix& rho, const SpinSystem& sys,
                                               const TomographySettings& settings) {
    require_two_spins(sys.n_spins());
    if (static_cast<int>(settings.acquisition.size()) != sys.n_spins()) {
        throw DimensionMismatch("one acquisition setting per spin is required");
    }
    std::vector<Measurement> out;
    for (const auto& seq : tomography_experiment_set(2)) {
        // Readout sequences hold only pulses, so relaxation cannot act here.
        const DensityMatrix after = run(rho, seq, sys, RelaxationParams::off());
        Measurement m;
        for (int spin : std::get<AcquireEvent>(seq.events.back()).spins) {
            const auto& acq = settings.acquisition[static_cast<size_t>(spin)];
            if (acq.observe_spin != spin) {
                throw InvalidArgument("acquisition settings are not indexed by spin");
            }
            const Spectrum spec = spectrum(fid(after, sys, acq, settings.relax), acq);
            m.push_back(ChannelReadout{spin, line_table(spec, line_frequencies(sys, spin), settings.half_width_bins)});
        }
        out.push_back(std::move(m));
    }
    return out;
}

Eigen::VectorXd Tomographer::flatten(const std::vector<Measurement>& measurements) {
    std::vector<double> v;
    for (const auto& m : measurements) {
        for (const auto& ch : m) {
            for (const auto& p : ch.lines) {
                const Complex z = p.value();
                v.push_back(z.real());
                v.push_back(z.imag());
            }
        }
    }
    return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Tomographer::Tomographer(SpinSystem sys, TomographySettings settings)
    : sys_(std::move(sys)), settings_(std::move(settings)) {
    require_two_spins(sys_.n_spins());
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == 0 && b == 0) {
                continue;
            }
            basis_.push_back(Eigen::kroneckerProduct(pauli(a), pauli(b)).eval() / 4.0);
        }
    }
    for (size_t k = 0; k < basis_.size(); ++k) {
        const Eigen::VectorXd column = flatten(simulate_measurements(DensityMatrix::deviation(basis_[k]), sys_, settings_));
        if (k == 0) {
            design_.resize(column.size(), kComponents);
        }
        design_.col(static_cast<Eigen::Index>(k)) = column;
    }
    svd_.compute(design_, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd_.singularValues();
    const double cutoff = 1e-10 * sv(0);
    rank_ = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > cutoff) {
            ++rank_;
        }
    }
}

DensityMatrix Tomographer::reconstruct(const std::vector<Measurement>& measurements) const {
    if (static_cast<int>(measurements.size()) != kExperiments) {
        throw InvalidArgument("expected " + std::to_string(kExperiments) + " measurements, got " +
                              std::to_string(measurements.size()));
    }
    const Eigen::VectorXd y = flatten(measurements);
    if (y.size() != design_.rows()) {
        throw InvalidArgument("measurement layout does not match the tomography experiment set");
    }
    if (rank_ < kComponents) {
        throw RankDeficient("tomography design matrix has rank " + std::to_string(rank_) + " < 15");
    }
    const Eigen::VectorXd coeff = svd_.solve(y);
    Matrix dev = Matrix::Zero(4, 4);
    for (size_t k = 0; k < basis_.size(); ++k) {
        dev += coeff(static_cast<Eigen::Index>(k)) * basis_[k];
    }
    dev = 0.5 * (dev + dev.adjoint()).eval();
    return DensityMatrix::deviation(std::move(dev));
}

DensityMatrix reconstruct(const std::vector<Measurement>& measurements, const SpinSystem& sys) {
    return Tomographer(sys, TomographySettings::defaults(sys)).reconstruct(measurements);
}

std::string render_bar_table(const DensityMatrix& deviation) {
    const int n = deviation.n_spins();
    const double top = max_abs(deviation.matrix());
    constexpr int kWidth = 24;
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-*s %-*s %10s %10s  %s\n", n + 2, "row", n + 2, "col", "re/max", "im/max",
                  "real part (scaled to max |element|)");
    out << buf;
    for (int r = 0; r < deviation.dim(); ++r) {
        for (int c = 0; c < deviation.dim(); ++c) {
            const Complex z = deviation(r, c);
            const double scaled = top > 0.0 ? z.real() / top : 0.0;
            const int len = static_cast<int>(std::lround(std::abs(scaled) * kWidth));
            std::string bar(static_cast<size_t>(kWidth), ' ');
            bar += '|';
            if (scaled >= 0.0) {
                bar += std::string(static_cast<size_t>(len), '#');
            } else {
                bar.replace(static_cast<size_t>(kWidth - len), static_cast<size_t>(len), static_cast<size_t>(len), '#');
            }
            std::snprintf(buf, sizeof(buf), "|%s> <%s| %10.4f %10.4f  %s\n", basis_label(r, n).c_str(),
                          basis_label(c, n).c_str(), scaled, top > 0.0 ? z.imag() / top : 0.0, bar.c_str());
            out << buf;
        }
    }
    return out.str();
}

}  // namespace nmrqc
