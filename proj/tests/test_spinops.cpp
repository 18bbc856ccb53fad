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

#include <gtest/gtest.h>

#include "nmrqc/error.hpp"
#include "nmrqc/spinops.hpp"
#include "oracles.hpp"

using namespace nmrqc;

namespace {

Matrix diag(std::initializer_list<double> v) {
    Eigen::VectorXcd d(static_cast<Eigen::Index>(v.size()));
    Eigen::Index k = 0;
    for (double x : v) d(k++) = x;
    return d.asDiagonal();
}

Matrix comm(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

const Axis kAxes[] = {Axis::x, Axis::y, Axis::z};

}  // namespace

TEST(angular_momentum, single_spin_z) {
    EXPECT_EQ(angular_momentum(0, Axis::z, 1).matrix(), diag({0.5, -0.5}));
}

TEST(angular_momentum, second_spin_z) {
    EXPECT_EQ(angular_momentum(1, Axis::z, 2).matrix(), diag({0.5, -0.5, 0.5, -0.5}));
}

TEST(angular_momentum, single_spin_x) {
    Matrix expect(2, 2);
    expect << 0, 0.5, 0.5, 0;
    EXPECT_EQ(angular_momentum(0, Axis::x, 1).matrix(), expect);
}

TEST(angular_momentum, matches_bitwise_oracle) {
    for (int n = 1; n <= 4; ++n)
        for (int s = 0; s < n; ++s) {
            EXPECT_LT(oracle::max_abs(angular_momentum(s, Axis::x, n).matrix() - oracle::ix(s, n)), 1e-15);
            EXPECT_LT(oracle::max_abs(angular_momentum(s, Axis::y, n).matrix() - oracle::iy(s, n)), 1e-15);
            EXPECT_LT(oracle::max_abs(angular_momentum(s, Axis::z, n).matrix() - oracle::iz(s, n)), 1e-15);
        }
}

TEST(angular_momentum, rejects_bad_index) {
    EXPECT_THROW(angular_momentum(2, Axis::z, 2), InvalidArgument);
    EXPECT_THROW(angular_momentum(-1, Axis::z, 2), InvalidArgument);
    EXPECT_THROW(angular_momentum(0, Axis::z, 9), InvalidArgument);
}

TEST(angular_momentum, commutators) {
    const int n = 3;
    for (int s = 0; s < n; ++s) {
        const Matrix x = angular_momentum(s, Axis::x, n).matrix();
        const Matrix y = angular_momentum(s, Axis::y, n).matrix();
        const Matrix z = angular_momentum(s, Axis::z, n).matrix();
        const Complex i(0, 1);
        EXPECT_LT(max_abs(comm(x, y) - i * z), 1e-12);
        EXPECT_LT(max_abs(comm(y, z) - i * x), 1e-12);
        EXPECT_LT(max_abs(comm(z, x) - i * y), 1e-12);
    }
}

TEST(angular_momentum, different_spins_commute) {
    const int n = 3;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            for (Axis p : kAxes)
                for (Axis q : kAxes) {
                    EXPECT_LT(max_abs(comm(angular_momentum(a, p, n).matrix(), angular_momentum(b, q, n).matrix())),
                              1e-12);
                }
        }
}

TEST(tensor, identities) {
    EXPECT_EQ(tensor(Operator::identity(2), Operator::identity(2)).matrix(), Matrix::Identity(4, 4));
}

TEST(tensor, pauli_z) {
    const Operator z(diag({1, -1}));
    EXPECT_EQ(tensor(z, z).matrix(), diag({1, -1, -1, 1}));
}

TEST(tensor, iz_iz) {
    const Operator z = angular_momentum(0, Axis::z, 1);
    EXPECT_EQ(tensor(z, z).matrix(), diag({0.25, -0.25, -0.25, 0.25}));
}

TEST(tensor, associative_and_matches_oracle) {
    const Operator a = angular_momentum(0, Axis::x, 1);
    const Operator b = angular_momentum(0, Axis::y, 1);
    const Operator c = tensor(angular_momentum(0, Axis::z, 1), a);
    EXPECT_EQ(tensor(tensor(a, b), c).matrix(), tensor(a, tensor(b, c)).matrix());
    EXPECT_LT(oracle::max_abs(tensor(a, c).matrix() - oracle::kron(a.matrix(), c.matrix())), 1e-15);
}

TEST(tensor, rejects_oversize) {
    const Operator big = Operator::identity(16);
    EXPECT_NO_THROW(tensor(big, big));
    EXPECT_THROW(tensor(tensor(big, big), Operator::identity(2)), DimensionMismatch);
}

TEST(projector, examples) {
    EXPECT_EQ(projector("11").matrix(), diag({0, 0, 0, 1}));
    EXPECT_EQ(projector("00").matrix(), diag({1, 0, 0, 0}));
    EXPECT_EQ(projector("0").matrix(), diag({1, 0}));
}

TEST(projector, idempotent) {
    for (const char* b : {"0", "1", "01", "10", "110", "0101"}) {
        const Matrix p = projector(b).matrix();
        EXPECT_LT(max_abs(p * p - p), 1e-12);
    }
}

TEST(projector, rejects_bad_label) {
    EXPECT_THROW(projector(""), InvalidArgument);
    EXPECT_THROW(projector("0a"), InvalidArgument);
}

TEST(fidelity, examples) {
    EXPECT_DOUBLE_EQ(fidelity(DensityMatrix::pure("00"), DensityMatrix::pure("00")), 1.0);
    EXPECT_DOUBLE_EQ(fidelity(DensityMatrix::pure("00"), DensityMatrix::pure("11")), 0.0);
    EXPECT_DOUBLE_EQ(fidelity(DensityMatrix::maximally_mixed(4), DensityMatrix::pure("11")), 0.25);
}

TEST(fidelity, errors) {
    const DensityMatrix dev = DensityMatrix::pure("00").deviation_part();
    EXPECT_THROW(fidelity(dev, DensityMatrix::pure("00")), InvalidArgument);
    EXPECT_THROW(fidelity(DensityMatrix::pure("0"), DensityMatrix::pure("00")), DimensionMismatch);
    EXPECT_THROW(fidelity(DensityMatrix::pure("00"), DensityMatrix::maximally_mixed(4)), InvalidArgument);
}

TEST(effective_pure_fidelity, pseudo_pure_scores_one) {
    const double a = 1e-5;
    const Matrix m = (1 - a) * Matrix::Identity(4, 4) / 4.0 + a * projector("10").matrix();
    const DensityMatrix rho = DensityMatrix::full(m);
    EXPECT_NEAR(effective_pure_fidelity(rho, "10"), 1.0, 1e-12);
    EXPECT_NEAR(effective_pure_fidelity(rho, "01"), 0.25 + 0.75 * (-1.0 / 3.0), 1e-12);
    EXPECT_DOUBLE_EQ(effective_pure_fidelity(DensityMatrix::maximally_mixed(4), "00"), 0.25);
}

TEST(density_matrix, invariants) {
    EXPECT_THROW(DensityMatrix::full(diag({0.6, 0.6})), InvalidArgument);
    EXPECT_THROW(DensityMatrix::full(diag({1.2, -0.2})), InvalidArgument);
    EXPECT_THROW(DensityMatrix::deviation(diag({0.1, 0.1})), InvalidArgument);
    EXPECT_THROW(DensityMatrix::full(diag({0.5, 0.25, 0.25})), DimensionMismatch);
    Matrix skew(2, 2);
    skew << 0.5, 0.1, -0.1, 0.5;
    EXPECT_THROW(DensityMatrix::full(skew), InvalidArgument);
    const DensityMatrix d = DensityMatrix::pure("1").deviation_part();
    EXPECT_EQ(d.kind(), StateKind::deviation);
    EXPECT_NEAR(d.trace(), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(DensityMatrix::pure("01").purity(), 1.0);
}

TEST(operator_roles, validated) {
    Matrix nonunitary = Matrix::Identity(2, 2) * 2.0;
    EXPECT_THROW(Operator(nonunitary, OperatorRole::unitary), InvalidArgument);
    Matrix nonherm(2, 2);
    nonherm << 0, 1, 0, 0;
    EXPECT_THROW(Operator(nonherm, OperatorRole::hermitian), InvalidArgument);
    EXPECT_THROW(Operator(Matrix::Identity(3, 3)), DimensionMismatch);
}

TEST(basis_labels, round_trip) {
    for (int k = 0; k < 8; ++k) EXPECT_EQ(basis_index(basis_label(k, 3)), k);
    EXPECT_EQ(basis_index("10"), 2);
    EXPECT_EQ(spin_bit(2, 0, 2), 1);
}
