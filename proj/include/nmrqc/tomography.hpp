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

// Linear-inversion state tomography for two spins: nine readout experiments
// (each spin gets no pulse, 90x or 90y), both channels acquired, doublet line
// integrals as data, least squares over the 15 traceless Hermitian
// product-operator components.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nmrqc/dynamics.hpp"
#include "nmrqc/gates.hpp"
#include "nmrqc/readout.hpp"
#include "nmrqc/spin_system.hpp"

namespace nmrqc {

/// Readout sequences in the order (spin 0 pulse) x (spin 1 pulse), each
/// from {none, 90x, 90y}, ending in an acquire on both channels.
std::vector<PulseSequence> tomography_experiment_set(int n_spins = 2);

/// Line table of one channel in one experiment.
struct ChannelReadout {
    int spin = 0;
    std::vector<Peak> lines;
};

using Measurement = std::vector<ChannelReadout>;

struct TomographySettings {
    RelaxationParams relax;
    /// One entry per spin; observe_spin must match the index.
    std::vector<AcquisitionParams> acquisition;
    int half_width_bins = 4;

    static TomographySettings defaults(const SpinSystem& sys);
};

/// Runs the nine readout experiments on `rho` (full or deviation).
std::vector<Measurement> simulate_measurements(const DensityMatrix& rho, const SpinSystem& sys,
                                               const TomographySettings& settings);

/// Caches the design matrix mapping deviation components to measurements.
class Tomographer {
   public:
    Tomographer(SpinSystem sys, TomographySettings settings);

    /// Least-squares deviation matrix; Hermitian and traceless.
    DensityMatrix reconstruct(const std::vector<Measurement>& measurements) const;

    const Eigen::MatrixXd& design() const { return design_; }
    int rank() const { return rank_; }
    /// Traceless Hermitian basis: Pauli products sigma_a (x) sigma_b / 4.
    const std::vector<Matrix>& basis() const { return basis_; }

    static Eigen::VectorXd flatten(const std::vector<Measurement>& measurements);

   private:
    SpinSystem sys_;
    TomographySettings settings_;
    std::vector<Matrix> basis_;
    Eigen::MatrixXd design_;
    int rank_ = 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd_;
};

/// Convenience wrapper building a Tomographer with default settings.
DensityMatrix reconstruct(const std::vector<Measurement>& measurements, const SpinSystem& sys);

/// Text rendering of a deviation matrix: one row per element with its real
/// and imaginary parts and a bar scaled to the largest modulus.
std::string render_bar_table(const DensityMatrix& deviation);

}  // namespace nmrqc
