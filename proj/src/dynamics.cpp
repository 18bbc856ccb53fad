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

#include "nmrqc/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "nmrqc/error.hpp"

namespace nmrqc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Matrix embed_single(const Matrix& single, int spin, int n_spins) {
    // Built from angular_momentum so the bit convention lives in one place.
    const Matrix ix = angular_momentum(spin, Axis::x, n_spins).matrix();
    const Matrix iy = angular_momentum(spin, Axis::y, n_spins).matrix();
    const Matrix iz = angular_momentum(spin, Axis::z, n_spins).matrix();
    const Matrix id = Matrix::Identity(ix.rows(), ix.cols());
    // single = a 1 + b sx + c sy + d sz, with s = 2 I.
    const Complex a = 0.5 * (single(0, 0) + single(1, 1));
    const Complex d = 0.5 * (single(0, 0) - single(1, 1));
    const Complex b = 0.5 * (single(0, 1) + single(1, 0));
    const Complex c = Complex(0.0, 0.5) * (single(0, 1) - single(1, 0));
    return a * id + 2.0 * (b * ix + c * iy + d * iz);
}

// Walsh-Hadamard transform over all bits, in place.
void walsh(std::vector<double>& v) {
    for (size_t h = 1; h < v.size(); h <<= 1) {
        for (size_t i = 0; i < v.size(); i += 2 * h) {
            for (size_t k = i; k < i + h; ++k) {
                const double u = v[k];
                const double w = v[k + h];
                v[k] = u + w;
                v[k + h] = u - w;
            }
        }
    }
}

// T1 step on the diagonal. In the basis of longitudinal product operators
// prod_{i in S} 2 Iz_i, the coefficient of each order S relaxes toward its
// equilibrium value at rate sum_{i in S} 1/T1_i. Single-spin orders carry
// the polarization, higher orders relax to zero, the identity is untouched.
void relax_populations(Matrix& m, double t, const RelaxationParams& relax, int n) {
    const size_t dim = static_cast<size_t>(m.rows());
    std::vector<double> c(dim);
    for (size_t x = 0; x < dim; ++x) {
        c[x] = m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)).real();
    }
    walsh(c);
    for (size_t s = 1; s < dim; ++s) {
        c[s] /= static_cast<double>(dim);
        double rate = 0.0;
        int members = 0;
        int member = -1;
        for (int bit = 0; bit < n; ++bit) {
            if ((s >> bit) & 1U) {
                const int spin = n - 1 - bit;
                rate += 1.0 / relax.t1_s[static_cast<size_t>(spin)];
                ++members;
                member = spin;
            }
        }
        const double eq = members == 1
                              ? 0.5 * thermal_iz_coefficient(relax.polarization[static_cast<size_t>(member)], n)
                              : 0.0;
        c[s] = eq + (c[s] - eq) * std::exp(-rate * t);
    }
    c[0] /= static_cast<double>(dim);
    walsh(c);
    for (size_t x = 0; x < dim; ++x) {
        m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = c[x];
    }
}

}  // namespace

RelaxationParams RelaxationParams::from(const SpinSystem& sys, bool enabled) {
    RelaxationParams p;
    p.enabled = enabled;
    for (const auto& s : sys.spins()) {
        p.t1_s.push_back(s.t1_s);
        p.t2_s.push_back(s.t2_s);
        p.polarization.push_back(s.polarization);
    }
    return p;
}

void RelaxationParams::validate(int n_spins) const {
    if (!enabled) {
        return;
    }
    const auto n = static_cast<size_t>(n_spins);
    if (t1_s.size() != n || t2_s.size() != n || polarization.size() != n) {
        throw DimensionMismatch("relaxation parameters do not match " + std::to_string(n_spins) + " spins");
    }
    for (size_t i = 0; i < n; ++i) {
        if (!(t2_s[i] > 0.0) || !(t1_s[i] >= t2_s[i])) {
            throw InvalidArgument("relaxation times violate T1 >= T2 > 0 for spin " + std::to_string(i));
        }
    }
}

double thermal_iz_coefficient(double polarization, int n_spins) {
    return polarization * std::ldexp(1.0, 1 - n_spins);
}

Operator propagator(const Operator& h_hz, double t_s) {
    if (!is_hermitian(h_hz.matrix())) {
        throw InvalidArgument("propagator requires a Hermitian Hamiltonian");
    }
    if (!(t_s >= 0.0)) {
        throw InvalidArgument("propagation time must be non-negative");
    }
    const Matrix& h = h_hz.matrix();
    if (h_hz.is_diagonal(0.0)) {
        Matrix u = Matrix::Zero(h.rows(), h.cols());
        for (Eigen::Index k = 0; k < h.rows(); ++k) {
            u(k, k) = std::polar(1.0, -kTwoPi * h(k, k).real() * t_s);
        }
        return Operator(std::move(u), OperatorRole::unitary);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Eigen::VectorXd& lambda = es.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        phases(k) = std::polar(1.0, -kTwoPi * lambda(k) * t_s);
    }
    const Matrix& v = es.eigenvectors();
    Matrix u = v * phases.asDiagonal() * v.adjoint();
    return Operator(std::move(u), OperatorRole::unitary);
}

Operator phased_pulse(int spin, double phase_rad, double angle_rad, int n_spins) {
    const double c = std::cos(0.5 * angle_rad);
    const double s = std::sin(0.5 * angle_rad);
    Matrix single(2, 2);
    // exp(-i angle (cos(phi) sx + sin(phi) sy) / 2)
    single << c, Complex(0.0, -s) * std::polar(1.0, -phase_rad), Complex(0.0, -s) * std::polar(1.0, phase_rad), c;
    return Operator(embed_single(single, spin, n_spins), OperatorRole::unitary);
}

Operator pulse(int spin, Axis axis, double angle_rad, int n_spins) {
    switch (axis) {
        case Axis::x:
            return phased_pulse(spin, 0.0, angle_rad, n_spins);
        case Axis::y:
            return phased_pulse(spin, 0.5 * std::numbers::pi, angle_rad, n_spins);
        case Axis::z:
            return z_rotation(spin, angle_rad, n_spins);
    }
    throw InvalidArgument("unknown axis");
}

Operator z_rotation(int spin, double angle_rad, int n_spins) {
    Matrix single = Matrix::Zero(2, 2);
    single(0, 0) = std::polar(1.0, -0.5 * angle_rad);
    single(1, 1) = std::polar(1.0, 0.5 * angle_rad);
    return Operator(embed_single(single, spin, n_spins), OperatorRole::unitary);
}

DensityMatrix evolve(const DensityMatrix& rho, const Operator& u) {
    if (rho.dim() != u.dim()) {
        throw DimensionMismatch("state and propagator dimensions differ");
    }
    Matrix out = u.matrix() * rho.matrix() * u.matrix().adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out), rho.kind());
}

DensityMatrix delay(const DensityMatrix& rho, const Operator& h_hz, double t_s, const RelaxationParams& relax) {
    if (rho.dim() != h_hz.dim()) {
        throw DimensionMismatch("state and Hamiltonian dimensions differ");
    }
    if (!(t_s >= 0.0)) {
        throw InvalidArgument("delay must be non-negative");
    }
    const int n = rho.n_spins();
    relax.validate(n);
    const bool diagonal = h_hz.is_diagonal();
    if (!diagonal) {
        if (relax.enabled) {
            throw InvalidArgument("relaxation requires a Hamiltonian diagonal in the product basis");
        }
        return evolve(rho, propagator(h_hz, t_s));
    }
    if (!is_hermitian(h_hz.matrix())) {
        throw InvalidArgument("delay requires a Hermitian Hamiltonian");
    }
    Matrix m = rho.matrix();
    const auto& h = h_hz.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (r == c) {
                continue;
            }
            Complex factor = std::polar(1.0, -kTwoPi * (h(r, r).real() - h(c, c).real()) * t_s);
            if (relax.enabled) {
                double rate = 0.0;
                for (int s = 0; s < n; ++s) {
                    if (spin_bit(static_cast<int>(r), s, n) != spin_bit(static_cast<int>(c), s, n)) {
                        rate += 1.0 / relax.t2_s[static_cast<size_t>(s)];
                    }
                }
                factor *= std::exp(-rate * t_s);
            }
            m(r, c) *= factor;
        }
    }
    if (relax.enabled) {
        relax_populations(m, t_s, relax, n);
    }
    return DensityMatrix(std::move(m), rho.kind());
}

DensityMatrix thermal_equilibrium(const std::vector<double>& polarization, StateKind kind) {
    const int n = static_cast<int>(polarization.size());
    if (n < 1 || n > kMaxSpins) {
        throw InvalidArgument("thermal state needs 1.." + std::to_string(kMaxSpins) + " polarizations");
    }
    double total = 0.0;
    for (double p : polarization) {
        if (std::abs(p) > 1.0) {
            throw InvalidArgument("polarization magnitude exceeds 1");
        }
        total += std::abs(p);
    }
    // Eigenvalues are 2^-N (1 +- p_1 +- ... +- p_N).
    if (total > 1.0 + kTraceTol) {
        throw InvalidArgument("polarizations sum to more than 1; the linear thermal state is not positive");
    }
    const int dim = 1 << n;
    Matrix m = Matrix::Zero(dim, dim);
    if (kind == StateKind::full) {
        m.diagonal().setConstant(1.0 / dim);
    }
    for (int i = 0; i < n; ++i) {
        m += thermal_iz_coefficient(polarization[static_cast<size_t>(i)], n) *
             angular_momentum(i, Axis::z, n).matrix();
    }
    return DensityMatrix(std::move(m), kind);
}

}  // namespace nmrqc
