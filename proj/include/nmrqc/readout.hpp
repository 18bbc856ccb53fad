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

// Detection: free induction decays, spectra and peak tables.
//
// Conventions: the detected signal is Tr(rho I+) with I+ = Ix + i Iy, so a
// coherence precessing at +nu appears at +nu on the frequency axis, and a
// 90-degree y pulse applied to +Iz gives a positive absorption line.

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "nmrqc/dynamics.hpp"
#include "nmrqc/spin_system.hpp"
#include "nmrqc/spinops.hpp"

namespace nmrqc {

struct AcquisitionParams {
    int n_points = 4096;
    double dwell_s = 2e-4;
    /// Extra Lorentzian broadening (FWHM, Hz) on top of T2.
    double broadening_hz = 0.0;
    int observe_spin = 0;

    double spectral_width_hz() const { return 1.0 / dwell_s; }
    /// n_points a power of two >= 256, dwell > 0, broadening >= 0.
    void validate() const;
};

/// Extra line broadening of oriented solutes, chosen so chloroform lines stay
/// below 2 Hz (13C) and 3 Hz (1H). Zero for isotropic solutions.
double default_broadening_hz(const SpinSystem& sys, int spin);

/// Sampling that covers every line of `spin` with a 2x margin and records at
/// least five effective decay times.
AcquisitionParams default_acquisition(const SpinSystem& sys, int spin);

/// First-order line positions of `spin`: nu + sum_k (+-)(J + 2D)_k / 2,
/// ordered by the basis index of the partner spins (partner bit 0 = +).
std::vector<double> line_frequencies(const SpinSystem& sys, int spin);

enum class ReadoutPulse { none, y90 };

/// s(k) = Tr(rho(k dwell) I+_observe) under the weak-coupling Hamiltonian,
/// with T2 damping when `relax` is enabled and the extra broadening factor
/// exp(-pi broadening t). Throws when the spectral width cannot hold the lines.
std::vector<Complex> fid(const DensityMatrix& rho, const SpinSystem& sys, const AcquisitionParams& acq,
                         const RelaxationParams& relax, ReadoutPulse readout = ReadoutPulse::none);

struct Peak {
    double frequency_hz = 0.0;
    double amplitude = 0.0;  // modulus
    double phase_rad = 0.0;

    Complex value() const { return std::polar(amplitude, phase_rad); }
    /// Real (absorption) part; positive for absorption, negative for emission.
    double absorption() const { return value().real(); }
};

struct Spectrum {
    std::vector<double> frequency_hz;
    std::vector<Complex> amplitude;
    std::vector<Peak> peaks;
    double dwell_s = 0.0;

    double bin_width_hz() const { return 1.0 / (static_cast<double>(frequency_hz.size()) * dwell_s); }
    /// Index of the bin nearest to `hz`.
    int bin_of(double hz) const;
};

inline constexpr double kPeakThreshold = 0.05;

/// Unitary DFT (Parseval holds exactly), centred axis from -sw/2 to
/// sw/2 - bin, and peaks: local maxima of |S| above 5% of the largest, with
/// parabolic interpolation of the frequency.
Spectrum spectrum(const std::vector<Complex>& fid, const AcquisitionParams& acq);

std::vector<Peak> find_peaks(const Spectrum& s, double threshold = kPeakThreshold);

/// Integrated complex amplitude in a window of +-half_width bins around each
/// of `frequencies_hz`. Linear in the spectrum, which tomography relies on.
std::vector<Peak> line_table(const Spectrum& s, const std::vector<double>& frequencies_hz, int half_width_bins = 4);

struct LineFit {
    double frequency_hz = 0.0;
    double fwhm_hz = 0.0;
};

/// Fits a single exponentially decaying component to the two bins around the
/// line nearest `near_hz`. Exact for an isolated line whether or not the FID
/// has decayed by the end of acquisition.
LineFit fit_line(const Spectrum& s, double near_hz);

void write_spectrum_csv(std::ostream& out, const Spectrum& s);
nlohmann::json to_json(const std::vector<Peak>& peaks);
nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const nlohmann::json& j);

}  // namespace nmrqc
