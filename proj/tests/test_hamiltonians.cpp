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

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "fixtures.hpp"
#include "nmrqc/error.hpp"
#include "nmrqc/hamiltonians.hpp"
#include "oracles.hpp"

using namespace nmrqc;

namespace {

std::vector<double> sorted_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end());
    return v;
}

Matrix diag(std::initializer_list<double> v) {
    Eigen::VectorXcd d(static_cast<Eigen::Index>(v.size()));
    Eigen::Index k = 0;
    for (double x : v) d(k++) = x;
    return d.asDiagonal();
}

}  // namespace

TEST(h_iso, singlet_triplet_split) {
    const Matrix h = h_iso(fixtures::pair(0, 0, 215, 0, "1H", "1H")).matrix();
    const auto ev = sorted_eigenvalues(h);
    // Oracle: brute-force diagonalization of the hand-written Hamiltonian.
    const auto oracle_ev = sorted_eigenvalues(oracle::h_full2(0, 0, 215, 0));
    ASSERT_EQ(ev.size(), 4u);
    for (size_t k = 0; k < 4; ++k) EXPECT_NEAR(ev[k], oracle_ev[k], 1e-10);
    EXPECT_NEAR(ev[0], -161.25, 1e-10);
    for (size_t k = 1; k < 4; ++k) EXPECT_NEAR(ev[k], 53.75, 1e-10);
}

TEST(h_iso, zeeman_only) {
    EXPECT_LT(max_abs(h_iso(fixtures::single(100)).matrix() - diag({50, -50})), 1e-12);
    const auto sys = fixtures::pair(300, -40, 0, 0);
    EXPECT_LT(max_abs(h_iso(sys).matrix() - (300 * oracle::iz(0, 2) - 40 * oracle::iz(1, 2))), 1e-12);
}

TEST(h_iso, ignores_dipolar) {
    const auto a = fixtures::pair(10, 20, 215, 0);
    const auto b = fixtures::pair(10, 20, 215, 400);
    EXPECT_EQ(h_iso(a).matrix(), h_iso(b).matrix());
}

TEST(h_iso_weak, j_pattern) {
    const Matrix h = h_iso_weak(fixtures::pair(0, 0, 215, 0)).matrix();
    EXPECT_LT(max_abs(h - diag({53.75, -53.75, -53.75, 53.75})), 1e-12);
}

TEST(h_iso_weak, acetone_profile) {
    const Matrix h = h_iso_weak(chloroform_acetone()).matrix();
    EXPECT_LT(max_abs(h - 215.0 * diag({0.25, -0.25, -0.25, 0.25})), 1e-12);
}

TEST(h_iso_weak, pure_zeeman_when_uncoupled) {
    const auto sys = fixtures::pair(120, 7, 0, 0, "1H", "1H");
    EXPECT_LT(max_abs(h_iso_weak(sys).matrix() - (120 * oracle::iz(0, 2) + 7 * oracle::iz(1, 2))), 1e-12);
}

TEST(h_iso_weak, is_diagonal_part_of_h_iso) {
    const auto sys = fixtures::pair(5000, -3000, 215, 0, "1H", "1H");
    const Matrix full = h_iso(sys).matrix();
    const Matrix diagonal = full.diagonal().asDiagonal();
    EXPECT_LT(max_abs(h_iso_weak(sys).matrix() - diagonal), 1e-12);
}

TEST(h_iso_weak, first_order_violation) {
    const auto sys = fixtures::pair(0, 1000, 215, 0, "1H", "1H");
    EXPECT_THROW(h_iso_weak(sys), FirstOrderViolation);
    EXPECT_NO_THROW(h_iso_weak(sys, FirstOrderCheck::skip));
}

TEST(h_lc, equals_h_iso_without_dipolar) {
    const auto sys = fixtures::pair(37, -12, 215, 0);
    EXPECT_LT(max_abs(h_lc(sys).matrix() - h_iso(sys).matrix()), 1e-12);
}

TEST(h_lc, dipolar_expansion) {
    const Matrix h = h_lc(fixtures::pair(0, 0, 0, 100, "1H", "1H")).matrix();
    Matrix expect = diag({50, -50, -50, 50});
    expect(1, 2) = -25;
    expect(2, 1) = -25;
    EXPECT_LT(max_abs(h - expect), 1e-12);
    EXPECT_LT(max_abs(h - oracle::h_full2(0, 0, 0, 100)), 1e-12);
}

TEST(h_lc, matches_oracle_general) {
    const auto sys = fixtures::pair(211, -87, 31, 17, "1H", "1H");
    EXPECT_LT(max_abs(h_lc(sys).matrix() - oracle::h_full2(211, -87, 31, 17)), 1e-12);
}

TEST(h_lc_weak, reduces_to_iso_weak) {
    const auto sys = fixtures::pair(0, 0, 215, 0);
    EXPECT_LT(max_abs(h_lc_weak(sys).matrix() - h_iso_weak(sys).matrix()), 1e-12);
}

TEST(h_lc_weak, zli_profile) {
    const Matrix h = h_lc_weak(chloroform_zli1167()).matrix();
    EXPECT_LT(max_abs(h - diag({426.5, -426.5, -426.5, 426.5})), 1e-12);
}

TEST(h_lc_weak, closed_form_eigenvalues) {
    const double a = 310;
    const double b = -140;
    const double c = 215 + 2 * 745.5;
    const auto ev = sorted_eigenvalues(h_lc_weak(fixtures::pair(a, b, 215, 745.5)).matrix());
    std::vector<double> expect{(a + b) / 2 + c / 4, -(a + b) / 2 + c / 4, (a - b) / 2 - c / 4, -(a - b) / 2 - c / 4};
    std::sort(expect.begin(), expect.end());
    for (size_t k = 0; k < 4; ++k) EXPECT_NEAR(ev[k], expect[k], 1e-10);
}

TEST(h_lc_weak, wrong_arity) {
    EXPECT_THROW(h_lc_weak(fixtures::single(0)), WrongArity);
}

TEST(h_lc_weak, first_order_violation) {
    const auto sys = fixtures::pair(0, 5000, 0, 853, "1H", "1H");
    EXPECT_THROW(h_lc_weak(sys), FirstOrderViolation);
    EXPECT_NO_THROW(h_lc_weak(sys, FirstOrderCheck::skip));
}

TEST(hamiltonians, hermitian) {
    for (const auto& sys : {chloroform_acetone(), chloroform_zli1167(), fixtures::pair(1e5, -2e5, 215, 745.5)}) {
        EXPECT_TRUE(is_hermitian(h_iso(sys).matrix()));
        EXPECT_TRUE(is_hermitian(h_lc(sys).matrix()));
        EXPECT_TRUE(is_hermitian(h_iso_weak(sys).matrix()));
        EXPECT_TRUE(is_hermitian(h_lc_weak(sys).matrix()));
    }
}

TEST(first_order_ok, examples) {
    EXPECT_TRUE(first_order_ok(fixtures::pair(0, 500000, 215, 0, "1H", "1H"))(0, 1));
    EXPECT_FALSE(first_order_ok(fixtures::pair(0, 1000, 215, 0, "1H", "1H"))(0, 1));
    EXPECT_TRUE(first_order_ok(chloroform_acetone())(0, 1));
    EXPECT_TRUE(first_order_ok(chloroform_zli1167())(0, 1));
    EXPECT_TRUE(first_order_ok(fixtures::pair(0, 0, 215, 0))(0, 1));
}

TEST(first_order_ok, regimes) {
    // |J| = 100 passes, |J + 2D| = 500 does not.
    const auto sys = fixtures::pair(0, 2000, 100, 200, "1H", "1H");
    EXPECT_TRUE(first_order_ok(sys, 10, CouplingRegime::isotropic)(0, 1));
    EXPECT_FALSE(first_order_ok(sys, 10, CouplingRegime::liquid_crystal)(0, 1));
    EXPECT_TRUE(first_order_ok(sys, 4, CouplingRegime::liquid_crystal)(0, 1));
}

TEST(effective_coupling, profiles) {
    EXPECT_DOUBLE_EQ(effective_coupling(chloroform_acetone(), {0, 1}), 215.0);
    EXPECT_DOUBLE_EQ(effective_coupling(chloroform_zli1167(), {0, 1}), 1706.0);
    EXPECT_DOUBLE_EQ(effective_coupling(fixtures::pair(0, 0, 0, 0), {0, 1}), 0.0);
    EXPECT_DOUBLE_EQ(effective_coupling(fixtures::pair(0, 0, 215, 745.5), {0, 1}), 1706.0);
}

TEST(spin_system, validation) {
    Eigen::MatrixXd asym(2, 2);
    asym << 0, 1, 2, 0;
    const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(2, 2);
    const std::vector<Spin> spins{fixtures::spin("A", "1H", 0), fixtures::spin("B", "13C", 0)};
    EXPECT_THROW(SpinSystem(spins, asym, zero, "x"), InvalidArgument);
    Eigen::MatrixXd diag_nonzero = zero;
    diag_nonzero(0, 0) = 1;
    EXPECT_THROW(SpinSystem(spins, diag_nonzero, zero, "x"), InvalidArgument);
    EXPECT_THROW(SpinSystem(spins, Eigen::MatrixXd::Zero(3, 3), zero, "x"), DimensionMismatch);
    EXPECT_THROW(SpinSystem({fixtures::spin("A", "1H", 0, 1.0, 2.0)}, Eigen::MatrixXd::Zero(1, 1),
                            Eigen::MatrixXd::Zero(1, 1), "x"),
                 InvalidArgument);
    EXPECT_THROW(SpinSystem({fixtures::spin("A", "1H", 0, 1.0, 0.0)}, Eigen::MatrixXd::Zero(1, 1),
                            Eigen::MatrixXd::Zero(1, 1), "x"),
                 InvalidArgument);
}

TEST(spin_system, profiles_match_builtins) {
    for (const auto& [file, builtin] : {std::pair{"chloroform_acetone_d6.json", chloroform_acetone()},
                                        std::pair{"chloroform_zli1167.json", chloroform_zli1167()}}) {
        const SpinSystem sys = load_profile(fixtures::profile(file));
        EXPECT_EQ(sys.solvent(), builtin.solvent());
        ASSERT_EQ(sys.n_spins(), 2);
        for (int i = 0; i < 2; ++i) {
            EXPECT_EQ(sys.spin(i).label, builtin.spin(i).label);
            EXPECT_EQ(sys.spin(i).isotope, builtin.spin(i).isotope);
            EXPECT_DOUBLE_EQ(sys.spin(i).t1_s, builtin.spin(i).t1_s);
            EXPECT_DOUBLE_EQ(sys.spin(i).t2_s, builtin.spin(i).t2_s);
            EXPECT_DOUBLE_EQ(sys.spin(i).polarization, builtin.spin(i).polarization);
        }
        EXPECT_EQ(sys.j_hz(), builtin.j_hz());
        EXPECT_EQ(sys.d_hz(), builtin.d_hz());
    }
}

TEST(spin_system, json_round_trip) {
    const SpinSystem sys = fixtures::pair(12.5, -3, 215, 745.5);
    const SpinSystem back = spin_system_from_json(to_json(sys));
    EXPECT_EQ(to_json(back), to_json(sys));
}

TEST(spin_system, bad_profiles) {
    EXPECT_THROW(load_profile("/nonexistent/profile.json"), ProfileError);
    EXPECT_THROW(spin_system_from_json(nlohmann::json{{"solvent", "x"}}), ProfileError);
    nlohmann::json j = to_json(chloroform_acetone());
    j["couplings"][0]["i"] = 5;
    EXPECT_THROW(spin_system_from_json(j), ProfileError);
}

TEST(spin_system, polarization_ratio) {
    const SpinSystem sys = chloroform_acetone();
    EXPECT_NEAR(sys.spin(0).polarization / sys.spin(1).polarization, 3.98, 0.01);
    EXPECT_EQ(sys.find_spin("H"), 0);
    EXPECT_EQ(sys.find_spin("13C"), 1);
    EXPECT_THROW(sys.find_spin("F"), InvalidArgument);
}
