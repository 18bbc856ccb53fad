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
// Reference implementations for tests. Everything here is written from
// definitions with plain loops and must not call into the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline int bit(int index, int spin, int n) {
    return (index >> (n - 1 - spin)) & 1;
}

inline M kron(const M& a, const M& b) {
    M out = M::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

// Single-spin operators written entry by entry from bit flips.
inline M iz(int spin, int n) {
    const int d = 1 << n;
    M m = M::Zero(d, d);
    for (int r = 0; r < d; ++r) m(r, r) = bit(r, spin, n) ? -0.5 : 0.5;
    return m;
}

inline M ix(int spin, int n) {
    const int d = 1 << n;
    const int mask = 1 << (n - 1 - spin);
    M m = M::Zero(d, d);
    for (int r = 0; r < d; ++r) m(r ^ mask, r) = 0.5;
    return m;
}

inline M iy(int spin, int n) {
    const int d = 1 << n;
    const int mask = 1 << (n - 1 - spin);
    M m = M::Zero(d, d);
    for (int r = 0; r < d; ++r) m(r ^ mask, r) = bit(r, spin, n) ? C(0, -0.5) : C(0, 0.5);
    return m;
}

// Matrix exponential by scaling and squaring of a Taylor series.
inline M expm(const M& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int s = 0;
    while (norm / std::pow(2.0, s) > 0.25) ++s;
    const M x = a / std::pow(2.0, s);
    M term = M::Identity(a.rows(), a.cols());
    M sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * x / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < s; ++i) sum = sum * sum;
    return sum;
}

// exp(-i 2pi H t) with H in Hz.
inline M prop(const M& h, double t) {
    return expm(C(0, -2.0 * std::numbers::pi * t) * h);
}

// Rotation exp(-i angle I_axis) on one spin; axis 0,1,2 = x,y,z.
inline M rot(int spin, int axis, double angle, int n) {
    const M op = axis == 0 ? ix(spin, n) : axis == 1 ? iy(spin, n) : iz(spin, n);
    return expm(C(0, -angle) * op);
}

inline double max_abs(const M& m) {
    return m.cwiseAbs().maxCoeff();
}

// Unitary DFT with the k = 0 bin at the start; sign exp(-2 pi i k n / N).
inline std::vector<C> dft(const std::vector<C>& x) {
    const size_t n = x.size();
    std::vector<C> out(n);
    for (size_t k = 0; k < n; ++k) {
        C acc = 0.0;
        for (size_t j = 0; j < n; ++j) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n);
            acc += x[j] * std::polar(1.0, ang);
        }
        out[k] = acc / std::sqrt(static_cast<double>(n));
    }
    return out;
}

// Classical search by enumerating every (marked element, query order) pair.
// The last candidate is inferred without a query when n >= 3.
inline double query_expectation(int n) {
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    double total = 0.0;
    long cases = 0;
    do {
        for (int marked = 0; marked < n; ++marked) {
            int queries = 0;
            for (int k = 0; k < n; ++k) {
                if (k == n - 1 && n >= 3) break;
                ++queries;
                if (order[static_cast<size_t>(k)] == marked) break;
            }
            total += queries;
            ++cases;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return total / static_cast<double>(cases);
}

// Two-spin weak-coupling Hamiltonian diag(nu_A Iz_A + nu_B Iz_B + c Iz_A Iz_B).
inline M h_weak2(double nu_a, double nu_b, double c) {
    return nu_a * iz(0, 2) + nu_b * iz(1, 2) + c * iz(0, 2) * iz(1, 2);
}

// Full two-spin Hamiltonian with isotropic J and dipolar D terms.
inline M h_full2(double nu_a, double nu_b, double j, double d) {
    const M xx = ix(0, 2) * ix(1, 2);
    const M yy = iy(0, 2) * iy(1, 2);
    const M zz = iz(0, 2) * iz(1, 2);
    return nu_a * iz(0, 2) + nu_b * iz(1, 2) + j * (xx + yy + zz) + d * (2.0 * zz - 0.5 * (xx + yy));
}

// Population bookkeeping for the three-step cyclic labeling of two spins:
// populations of |01>, |10>, |11> are cycled and averaged, |00> is fixed.
inline std::vector<double> labeled_populations(const std::vector<double>& p) {
    const std::vector<double> cyc{p[1], p[2], p[3]};
    const double mean = (cyc[0] + cyc[1] + cyc[2]) / 3.0;
    return {p[0], mean, mean, mean};
}

// FID by stepping the state with the given Hamiltonian and explicit
// elementwise T2 damping, then taking Tr(rho I+).
inline std::vector<C> fid(const M& rho, const M& h, int spin, int n, double dwell, int points,
                          const std::vector<double>& t2) {
    const int d = 1 << n;
    const M iplus = ix(spin, n) + C(0, 1) * iy(spin, n);
    std::vector<C> out;
    for (int k = 0; k < points; ++k) {
        const double t = k * dwell;
        const M u = prop(h, t);
        M r = u * rho * u.adjoint();
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                double rate = 0.0;
                for (int s = 0; s < n; ++s)
                    if (bit(a, s, n) != bit(b, s, n) && !t2.empty()) rate += 1.0 / t2[static_cast<size_t>(s)];
                r(a, b) *= std::exp(-rate * t);
            }
        out.push_back((r * iplus).trace());
    }
    return out;
}


// Delay with diagonal H: per-element phases, T2 damping summed over flipped
// spins, and longitudinal orders c_S = Tr(rho Z_S) relaxed by sum over S of
// 1/T1 toward p_i for single spins and toward 0 for higher orders.
inline M relax_delay(const M& rho, const M& h, double t, const std::vector<double>& t1,
                     const std::vector<double>& t2, const std::vector<double>& p) {
    const int d = static_cast<int>(rho.rows());
    int n = 0;
    while ((1 << n) < d) ++n;
    M out = rho;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (a == b) continue;
            double rate = 0.0;
            for (int s = 0; s < n; ++s)
                if (bit(a, s, n) != bit(b, s, n)) rate += 1.0 / t2[static_cast<size_t>(s)];
            const double dw = (h(a, a) - h(b, b)).real();
            out(a, b) = rho(a, b) * std::polar(std::exp(-rate * t), -2.0 * std::numbers::pi * dw * t);
        }
    auto sign = [&](int k, int subset) {
        double v = 1.0;
        for (int s = 0; s < n; ++s)
            if ((subset >> s) & 1) v *= bit(k, s, n) ? -1.0 : 1.0;
        return v;
    };
    std::vector<double> c(static_cast<size_t>(d), 0.0);
    for (int subset = 0; subset < d; ++subset) {
        for (int k = 0; k < d; ++k) c[static_cast<size_t>(subset)] += rho(k, k).real() * sign(k, subset);
        if (subset == 0) continue;
        double rate = 0.0;
        int count = 0;
        int only = 0;
        for (int s = 0; s < n; ++s)
            if ((subset >> s) & 1) {
                rate += 1.0 / t1[static_cast<size_t>(s)];
                ++count;
                only = s;
            }
        const double target = count == 1 ? p[static_cast<size_t>(only)] : 0.0;
        c[static_cast<size_t>(subset)] = target + (c[static_cast<size_t>(subset)] - target) * std::exp(-rate * t);
    }
    for (int k = 0; k < d; ++k) {
        double v = 0.0;
        for (int subset = 0; subset < d; ++subset) v += c[static_cast<size_t>(subset)] * sign(k, subset);
        out(k, k) = v / d;
    }
    return out;
}

}  // namespace oracle
