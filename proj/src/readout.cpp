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

#include "nmrqc/readout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include <unsupported/Eigen/FFT>

#include "nmrqc/error.hpp"
#include "nmrqc/hamiltonians.hpp"

namespace nmrqc {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

int next_power_of_two(double n) {
    int p = 1;
    while (p < n && p < (1 << 30)) {
        p <<= 1;
    }
    return p;
}

}  // namespace

void AcquisitionParams::validate() const {
    if (!is_power_of_two(n_points) || n_points < 256) {
        throw InvalidArgument("n_points must be a power of two >= 256");
    }
    if (!(dwell_s > 0.0)) {
        throw InvalidArgument("dwell must be positive");
    }
    if (!(broadening_hz >= 0.0)) {
        throw InvalidArgument("broadening must be non-negative");
    }
}

double default_broadening_hz(const SpinSystem& sys, int spin) {
    if (!sys.has_dipolar()) {
        return 0.0;
    }
    const auto& iso = sys.spin(spin).isotope;
    if (iso == "13C") {
        return 0.3;
    }
    if (iso == "1H") {
        return 2.0;
    }
    return 1.0;
}

std::vector<double> line_frequencies(const SpinSystem& sys, int spin) {
    if (spin < 0 || spin >= sys.n_spins()) {
        throw InvalidArgument("observe spin out of range");
    }
    std::vector<int> partners;
    for (int k = 0; k < sys.n_spins(); ++k) {
        if (k != spin) {
            partners.push_back(k);
        }
    }
    const size_t n_lines = size_t{1} << partners.size();
    std::vector<double> lines(n_lines, sys.spin(spin).nu_hz);
    for (size_t state = 0; state < n_lines; ++state) {
        for (size_t p = 0; p < partners.size(); ++p) {
            const bool down = (state >> (partners.size() - 1 - p)) & 1U;
            const double j = effective_coupling(sys, SpinPair{spin, partners[p]});
            lines[state] += (down ? -0.5 : 0.5) * j;
        }
    }
    return lines;
}

AcquisitionParams default_acquisition(const SpinSystem& sys, int spin) {
    double fmax = 0.0;
    for (double f : line_frequencies(sys, spin)) {
        fmax = std::max(fmax, std::abs(f));
    }
    AcquisitionParams acq;
    acq.observe_spin = spin;
    acq.broadening_hz = default_broadening_hz(sys, spin);
    const double sw = std::max(4.0 * fmax, 1000.0);
    acq.dwell_s = 1.0 / sw;
    const double decay_s = 1.0 / (1.0 / sys.spin(spin).t2_s + kPi * acq.broadening_hz);
    acq.n_points = std::min(next_power_of_two(std::max(4096.0, 5.0 * decay_s * sw)), 1 << 18);
    return acq;
}

std::vector<Complex> fid(const DensityMatrix& rho_in, const SpinSystem& sys, const AcquisitionParams& acq,
                         const RelaxationParams& relax, ReadoutPulse readout) {
    acq.validate();
    const int n = sys.n_spins();
    const int obs = acq.observe_spin;
    if (rho_in.n_spins() != n) {
        throw DimensionMismatch("state does not match the spin system");
    }
    if (obs < 0 || obs >= n) {
        throw InvalidArgument("observe spin out of range");
    }
    relax.validate(n);
    for (double f : line_frequencies(sys, obs)) {
        if (!(acq.spectral_width_hz() > 2.0 * std::abs(f))) {
            throw InvalidArgument("spectral width " + std::to_string(acq.spectral_width_hz()) +
                                  " Hz is too small for a line at " + std::to_string(f) + " Hz (aliasing)");
        }
    }
    const DensityMatrix rho =
        readout == ReadoutPulse::y90 ? evolve(rho_in, pulse(obs, Axis::y, kPi / 2.0, n)) : rho_in;
    const Eigen::VectorXcd energy = h_weak(sys).matrix().diagonal();

    // Tr(rho I+) picks the elements rho(r, c) where r has the observed spin
    // down, c has it up, and all other spins agree.
    struct Component {
        Complex amplitude;
        Complex rate;  // s(t) = amplitude * exp(rate t)
    };
    std::vector<Component> components;
    const double decay = (relax.enabled ? 1.0 / relax.t2_s[static_cast<size_t>(obs)] : 0.0) + kPi * acq.broadening_hz;
    const int obs_mask = 1 << (n - 1 - obs);
    for (int r = 0; r < rho.dim(); ++r) {
        if ((r & obs_mask) == 0) {
            continue;
        }
        const int c = r & ~obs_mask;
        const Complex a = rho(r, c);
        if (a == Complex(0.0)) {
            continue;
        }
        const double freq = energy(c).real() - energy(r).real();
        components.push_back({a, Complex(-decay, 2 * kPi * freq)});
    }

    std::vector<Complex> s(static_cast<size_t>(acq.n_points), Complex(0.0));
    for (size_t k = 0; k < s.size(); ++k) {
        const double t = static_cast<double>(k) * acq.dwell_s;
        for (const auto& comp : components) {
            s[k] += comp.amplitude * std::exp(comp.rate * t);
        }
    }
    return s;
}

int Spectrum::bin_of(double hz) const {
    if (frequency_hz.empty()) {
        throw InvalidArgument("empty spectrum");
    }
    const double df = bin_width_hz();
    const long idx = std::lround((hz - frequency_hz.front()) / df);
    return static_cast<int>(std::clamp<long>(idx, 0, static_cast<long>(frequency_hz.size()) - 1));
}

Spectrum spectrum(const std::vector<Complex>& signal, const AcquisitionParams& acq) {
    if (!(acq.dwell_s > 0.0) || !is_power_of_two(static_cast<int>(signal.size()))) {
        throw InvalidArgument("spectrum needs a power-of-two FID and a positive dwell");
    }
    const size_t n = signal.size();
    Eigen::FFT<double> fft;
    std::vector<Complex> raw;
    fft.fwd(raw, signal);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double df = 1.0 / (static_cast<double>(n) * acq.dwell_s);

    Spectrum out;
    out.dwell_s = acq.dwell_s;
    out.frequency_hz.resize(n);
    out.amplitude.resize(n);
    const long half = static_cast<long>(n / 2);
    for (size_t m = 0; m < n; ++m) {
        const long k = static_cast<long>(m) - half;
        out.frequency_hz[m] = static_cast<double>(k) * df;
        out.amplitude[m] = raw[static_cast<size_t>((k + static_cast<long>(n)) % static_cast<long>(n))] * scale;
    }
    out.peaks = find_peaks(out);
    return out;
}

std::vector<Peak> find_peaks(const Spectrum& s, double threshold) {
    std::vector<Peak> peaks;
    const size_t n = s.amplitude.size();
    if (n < 3) {
        return peaks;
    }
    std::vector<double> mag(n);
    for (size_t m = 0; m < n; ++m) {
        mag[m] = std::abs(s.amplitude[m]);
    }
    const double top = *std::max_element(mag.begin(), mag.end());
    if (top == 0.0) {
        return peaks;
    }
    const double df = s.bin_width_hz();
    for (size_t m = 0; m < n; ++m) {
        const double b = mag[m];
        if (b < threshold * top) {
            continue;
        }
        const double a = m > 0 ? mag[m - 1] : 0.0;
        const double c = m + 1 < n ? mag[m + 1] : 0.0;
        if (!(b > a && b >= c)) {
            continue;
        }
        const double denom = a - 2.0 * b + c;
        const double delta = denom != 0.0 ? std::clamp(0.5 * (a - c) / denom, -0.5, 0.5) : 0.0;
        peaks.push_back(Peak{s.frequency_hz[m] + delta * df, b - 0.25 * (a - c) * delta, std::arg(s.amplitude[m])});
    }
    return peaks;
}

std::vector<Peak> line_table(const Spectrum& s, const std::vector<double>& frequencies_hz, int half_width_bins) {
    std::vector<Peak> out;
    const int n = static_cast<int>(s.amplitude.size());
    for (double f : frequencies_hz) {
        const int centre = s.bin_of(f);
        Complex sum(0.0);
        for (int m = std::max(0, centre - half_width_bins); m <= std::min(n - 1, centre + half_width_bins); ++m) {
            sum += s.amplitude[static_cast<size_t>(m)];
        }
        out.push_back(Peak{f, std::abs(sum), std::arg(sum)});
    }
    return out;
}

LineFit fit_line(const Spectrum& s, double near_hz) {
    const int n = static_cast<int>(s.amplitude.size());
    int m = s.bin_of(near_hz);
    for (int k = std::max(0, m - 3); k <= std::min(n - 1, m + 3); ++k) {
        if (std::abs(s.amplitude[static_cast<size_t>(k)]) > std::abs(s.amplitude[static_cast<size_t>(m)])) {
            m = k;
        }
    }
    const int lo = std::max(0, m - 1);
    const int hi = std::min(n - 1, m + 1);
    const int other = std::abs(s.amplitude[static_cast<size_t>(lo)]) > std::abs(s.amplitude[static_cast<size_t>(hi)]) ? lo : hi;
    auto twiddle = [&](int bin) {
        // DFT index of shifted bin `bin` is bin - n/2 (mod n).
        return std::polar(1.0, -2.0 * kPi * static_cast<double>(bin - n / 2) / n);
    };
    const Complex s1 = s.amplitude[static_cast<size_t>(m)];
    const Complex s2 = s.amplitude[static_cast<size_t>(other)];
    // For s_k = A a^k the DFT is A (1 - a^N) / (1 - a w), so two bins fix a.
    const Complex pole = (s2 - s1) / (s2 * twiddle(other) - s1 * twiddle(m));
    const double decay = -std::log(std::abs(pole)) / s.dwell_s;
    return LineFit{std::arg(pole) / (2.0 * kPi * s.dwell_s), std::max(0.0, decay / kPi)};
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    out << "frequency_hz,real,imag\n";
    char buf[96];
    for (size_t m = 0; m < s.frequency_hz.size(); ++m) {
        std::snprintf(buf, sizeof(buf), "%.10g,%.12e,%.12e\n", s.frequency_hz[m], s.amplitude[m].real(),
                      s.amplitude[m].imag());
        out << buf;
    }
}

nlohmann::json to_json(const std::vector<Peak>& peaks) {
    auto arr = nlohmann::json::array();
    for (const auto& p : peaks) {
        arr.push_back({{"frequency_hz", p.frequency_hz}, {"amplitude", p.amplitude}, {"phase_rad", p.phase_rad}});
    }
    return arr;
}

nlohmann::json to_json(const DensityMatrix& rho) {
    std::vector<double> re;
    std::vector<double> im;
    for (int r = 0; r < rho.dim(); ++r) {
        for (int c = 0; c < rho.dim(); ++c) {
            re.push_back(rho(r, c).real());
            im.push_back(rho(r, c).imag());
        }
    }
    return {{"dim", rho.dim()},
            {"kind", rho.kind() == StateKind::full ? "full" : "deviation"},
            {"real", re},
            {"imag", im}};
}

DensityMatrix density_matrix_from_json(const nlohmann::json& j) {
    try {
        const int dim = j.at("dim").get<int>();
        const auto re = j.at("real").get<std::vector<double>>();
        const auto im = j.at("imag").get<std::vector<double>>();
        if (dim < 2 || dim > kMaxDim || re.size() != static_cast<size_t>(dim) * dim || im.size() != re.size()) {
            throw InvalidArgument("density matrix JSON has inconsistent sizes");
        }
        Matrix m(dim, dim);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                const size_t k = static_cast<size_t>(r) * dim + c;
                m(r, c) = Complex(re[k], im[k]);
            }
        }
        const auto kind = j.value("kind", std::string("full"));
        if (kind == "full") {
            return DensityMatrix::full(std::move(m));
        }
        if (kind == "deviation") {
            return DensityMatrix::deviation(std::move(m));
        }
        throw InvalidArgument("unknown density matrix kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed density matrix: ") + e.what());
    }
}

}  // namespace nmrqc
