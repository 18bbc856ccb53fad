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

#include "nmrqc/hamiltonians.hpp"

#include <cmath>
#include <vector>

#include "nmrqc/error.hpp"

namespace nmrqc {

namespace {

struct SpinOps {
    std::vector<Matrix> x, y, z;
};

SpinOps spin_ops(int n) {
    SpinOps ops;
    for (int i = 0; i < n; ++i) {
        ops.x.push_back(angular_momentum(i, Axis::x, n).matrix());
        ops.y.push_back(angular_momentum(i, Axis::y, n).matrix());
        ops.z.push_back(angular_momentum(i, Axis::z, n).matrix());
    }
    return ops;
}

Matrix zeeman(const SpinSystem& sys, const SpinOps& ops) {
    Matrix h = Matrix::Zero(sys.dim(), sys.dim());
    for (int i = 0; i < sys.n_spins(); ++i) {
        h += sys.spin(i).nu_hz * ops.z[static_cast<size_t>(i)];
    }
    return h;
}

// Drops the imaginary round-off of products like Iy Iy and restores exact
// Hermitian symmetry.
Operator hermitian(Matrix h) {
    Matrix sym = 0.5 * (h + h.adjoint());
    return Operator(std::move(sym), OperatorRole::hermitian);
}

void require_first_order(const SpinSystem& sys, double ratio, CouplingRegime regime) {
    const PairMask ok = first_order_ok(sys, ratio, regime);
    for (int i = 0; i < sys.n_spins(); ++i) {
        for (int j = i + 1; j < sys.n_spins(); ++j) {
            if (!ok(i, j)) {
                throw FirstOrderViolation("spins " + std::to_string(i) + " and " + std::to_string(j) +
                                          " are not weakly coupled (|nu_i - nu_j| < " + std::to_string(ratio) +
                                          " x coupling)");
            }
        }
    }
}

Matrix secular(const SpinSystem& sys, const Eigen::MatrixXd& coupling) {
    const auto ops = spin_ops(sys.n_spins());
    Matrix h = zeeman(sys, ops);
    for (int i = 0; i < sys.n_spins(); ++i) {
        for (int j = i + 1; j < sys.n_spins(); ++j) {
            h += coupling(i, j) * ops.z[static_cast<size_t>(i)] * ops.z[static_cast<size_t>(j)];
        }
    }
    return h;
}

}  // namespace

Operator h_iso(const SpinSystem& sys) {
    const auto ops = spin_ops(sys.n_spins());
    Matrix h = zeeman(sys, ops);
    for (size_t i = 0; i < ops.z.size(); ++i) {
        for (size_t j = i + 1; j < ops.z.size(); ++j) {
            const double jij = sys.j_hz(static_cast<int>(i), static_cast<int>(j));
            if (jij != 0.0) {
                h += jij * (ops.x[i] * ops.x[j] + ops.y[i] * ops.y[j] + ops.z[i] * ops.z[j]);
            }
        }
    }
    return hermitian(std::move(h));
}

Operator h_iso_weak(const SpinSystem& sys, FirstOrderCheck check, double ratio_threshold) {
    if (check == FirstOrderCheck::enforce) {
        require_first_order(sys, ratio_threshold, CouplingRegime::isotropic);
    }
    return hermitian(secular(sys, sys.j_hz()));
}

Operator h_lc(const SpinSystem& sys) {
    const auto ops = spin_ops(sys.n_spins());
    Matrix h = h_iso(sys).matrix();
    for (size_t i = 0; i < ops.z.size(); ++i) {
        for (size_t j = i + 1; j < ops.z.size(); ++j) {
            const double dij = sys.d_hz(static_cast<int>(i), static_cast<int>(j));
            if (dij != 0.0) {
                h += dij * (2.0 * ops.z[i] * ops.z[j] - 0.5 * (ops.x[i] * ops.x[j] + ops.y[i] * ops.y[j]));
            }
        }
    }
    return hermitian(std::move(h));
}

Operator h_lc_weak(const SpinSystem& sys, FirstOrderCheck check, double ratio_threshold) {
    if (sys.n_spins() != 2) {
        throw WrongArity("h_lc_weak is defined for two spins, got " + std::to_string(sys.n_spins()));
    }
    if (check == FirstOrderCheck::enforce) {
        require_first_order(sys, ratio_threshold, CouplingRegime::liquid_crystal);
    }
    return hermitian(secular(sys, sys.j_hz() + 2.0 * sys.d_hz()));
}

Operator h_weak(const SpinSystem& sys, FirstOrderCheck check) {
    return sys.has_dipolar() ? h_lc_weak(sys, check) : h_iso_weak(sys, check);
}

PairMask first_order_ok(const SpinSystem& sys, double ratio_threshold, CouplingRegime regime) {
    const int n = sys.n_spins();
    PairMask ok = PairMask::Constant(n, n, true);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || sys.heteronuclear(i, j)) {
                continue;
            }
            const double coupling = regime == CouplingRegime::isotropic
                                        ? sys.j_hz(i, j)
                                        : effective_coupling(sys, SpinPair{i, j});
            const double separation = std::abs(sys.spin(i).nu_hz - sys.spin(j).nu_hz);
            ok(i, j) = separation >= ratio_threshold * std::abs(coupling);
        }
    }
    return ok;
}

double effective_coupling(const SpinSystem& sys, SpinPair pair) {
    sys.check_pair(pair);
    return sys.j_hz(pair.i, pair.j) + 2.0 * sys.d_hz(pair.i, pair.j);
}

}  // namespace nmrqc
