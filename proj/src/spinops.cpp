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

#include "nmrqc/spinops.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "nmrqc/error.hpp"

namespace nmrqc {

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const double scale = std::max(1.0, max_abs(m));
    return max_abs(m - m.adjoint()) <= tol * scale;
}

bool is_unitary(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    return max_abs(m.adjoint() * m - id) <= tol;
}

int spin_count(Eigen::Index dim) {
    if (dim < 2 || dim > kMaxDim || (dim & (dim - 1)) != 0) {
        throw DimensionMismatch("dimension " + std::to_string(dim) +
                                " is not a power of two in [2, " + std::to_string(kMaxDim) + "]");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

int basis_index(std::string_view bits) {
    if (bits.empty() || static_cast<int>(bits.size()) > kMaxSpins) {
        throw InvalidArgument("basis label must have 1.." + std::to_string(kMaxSpins) + " bits");
    }
    int index = 0;
    for (char b : bits) {
        if (b != '0' && b != '1') {
            throw InvalidArgument("basis label '" + std::string(bits) + "' is not a bit string");
        }
        index = (index << 1) | (b - '0');
    }
    return index;
}

std::string basis_label(int index, int n_spins) {
    std::string out(static_cast<size_t>(n_spins), '0');
    for (int s = 0; s < n_spins; ++s) {
        out[static_cast<size_t>(s)] = static_cast<char>('0' + spin_bit(index, s, n_spins));
    }
    return out;
}

Operator::Operator(Matrix m, OperatorRole role) : m_(std::move(m)), role_(role) {
    if (m_.rows() != m_.cols()) {
        throw DimensionMismatch("operator must be square");
    }
    spin_count(m_.rows());
    if (role_ == OperatorRole::hermitian && !is_hermitian(m_)) {
        throw InvalidArgument("operator tagged Hermitian is not Hermitian");
    }
    if (role_ == OperatorRole::unitary && !is_unitary(m_)) {
        throw InvalidArgument("operator tagged unitary is not unitary");
    }
}

Operator Operator::identity(int dim) {
    return Operator(Matrix::Identity(dim, dim), OperatorRole::unitary);
}

Operator Operator::adjoint() const {
    return Operator(m_.adjoint(), role_);
}

bool Operator::is_diagonal(double tol) const {
    Matrix off = m_;
    off.diagonal().setZero();
    return max_abs(off) <= tol * std::max(1.0, max_abs(m_));
}

namespace {

void require_same_dim(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("operator dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
}

}  // namespace

Operator operator*(const Operator& a, const Operator& b) {
    require_same_dim(a, b);
    const bool unitary = a.role_ == OperatorRole::unitary && b.role_ == OperatorRole::unitary;
    return Operator(a.m_ * b.m_, unitary ? OperatorRole::unitary : OperatorRole::general);
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_dim(a, b);
    const bool herm = a.role_ == OperatorRole::hermitian && b.role_ == OperatorRole::hermitian;
    return Operator(a.m_ + b.m_, herm ? OperatorRole::hermitian : OperatorRole::general);
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_dim(a, b);
    const bool herm = a.role_ == OperatorRole::hermitian && b.role_ == OperatorRole::hermitian;
    return Operator(a.m_ - b.m_, herm ? OperatorRole::hermitian : OperatorRole::general);
}

Operator operator*(double s, const Operator& a) {
    const auto role = a.role_ == OperatorRole::hermitian ? OperatorRole::hermitian : OperatorRole::general;
    return Operator(s * a.m_, role);
}

DensityMatrix::DensityMatrix(Matrix m, StateKind kind) : m_(std::move(m)), kind_(kind) {
    if (m_.rows() != m_.cols()) {
        throw DimensionMismatch("density matrix must be square");
    }
    spin_count(m_.rows());
    if (!is_hermitian(m_)) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    const double expected = kind_ == StateKind::full ? 1.0 : 0.0;
    if (std::abs(m_.trace() - Complex(expected)) > kTraceTol) {
        throw InvalidArgument(kind_ == StateKind::full ? "full density matrix must have unit trace"
                                                       : "deviation density matrix must be traceless");
    }
}

DensityMatrix DensityMatrix::full(Matrix m) {
    DensityMatrix rho(std::move(m), StateKind::full);
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kTraceTol) {
        throw InvalidArgument("full density matrix has a negative eigenvalue");
    }
    return rho;
}

DensityMatrix DensityMatrix::deviation(Matrix m) {
    return DensityMatrix(std::move(m), StateKind::deviation);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim), StateKind::full);
}

DensityMatrix DensityMatrix::pure(std::string_view bits) {
    return DensityMatrix(projector(bits).matrix(), StateKind::full);
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

DensityMatrix DensityMatrix::deviation_part() const {
    if (kind_ == StateKind::deviation) {
        return *this;
    }
    Matrix dev = m_;
    dev.diagonal().array() -= m_.trace() / static_cast<double>(dim());
    return DensityMatrix(std::move(dev), StateKind::deviation);
}

namespace {

Matrix single_spin(Axis axis) {
    Matrix m(2, 2);
    switch (axis) {
        case Axis::x:
            m << 0.0, 0.5, 0.5, 0.0;
            break;
        case Axis::y:
            m << 0.0, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.0;
            break;
        case Axis::z:
            m << 0.5, 0.0, 0.0, -0.5;
            break;
    }
    return m;
}

void check_spin(int spin, int n_spins) {
    if (n_spins < 1 || n_spins > kMaxSpins) {
        throw InvalidArgument("n_spins must be in [1, " + std::to_string(kMaxSpins) + "], got " +
                              std::to_string(n_spins));
    }
    if (spin < 0 || spin >= n_spins) {
        throw InvalidArgument("spin index " + std::to_string(spin) + " out of range for " +
                              std::to_string(n_spins) + " spins");
    }
}

// Embeds a 2x2 single-spin matrix at position `spin`.
Matrix embed(const Matrix& single, int spin, int n_spins) {
    const int left = 1 << spin;
    const int right = 1 << (n_spins - 1 - spin);
    const Matrix a = Matrix::Identity(left, left);
    const Matrix b = Matrix::Identity(right, right);
    Matrix ab = Eigen::kroneckerProduct(a, single);
    return Eigen::kroneckerProduct(ab, b);
}

}  // namespace

Operator angular_momentum(int spin, Axis axis, int n_spins) {
    check_spin(spin, n_spins);
    return Operator(embed(single_spin(axis), spin, n_spins), OperatorRole::hermitian);
}

Operator raising(int spin, int n_spins) {
    check_spin(spin, n_spins);
    Matrix plus = Matrix::Zero(2, 2);
    plus(0, 1) = 1.0;
    return Operator(embed(plus, spin, n_spins));
}

Operator tensor(const Operator& a, const Operator& b) {
    if (static_cast<long>(a.dim()) * b.dim() > kMaxDim) {
        throw DimensionMismatch("tensor product exceeds " + std::to_string(kMaxSpins) + " spins");
    }
    Matrix k = Eigen::kroneckerProduct(a.matrix(), b.matrix());
    OperatorRole role = OperatorRole::general;
    if (a.role() == b.role()) {
        role = a.role();
    }
    return Operator(std::move(k), role);
}

Operator projector(std::string_view bits) {
    const int index = basis_index(bits);
    const int dim = 1 << bits.size();
    Matrix p = Matrix::Zero(dim, dim);
    p(index, index) = 1.0;
    return Operator(std::move(p), OperatorRole::hermitian);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& target) {
    if (rho.kind() != StateKind::full || target.kind() != StateKind::full) {
        throw InvalidArgument("fidelity requires full density matrices");
    }
    if (rho.dim() != target.dim()) {
        throw DimensionMismatch("fidelity operands have different dimensions");
    }
    if (std::abs(target.purity() - 1.0) > kTraceTol) {
        throw InvalidArgument("fidelity target must be a pure state");
    }
    const double f = (rho.matrix() * target.matrix()).trace().real();
    return std::clamp(f, 0.0, 1.0);
}

double effective_pure_fidelity(const DensityMatrix& rho, std::string_view bits) {
    const DensityMatrix target = DensityMatrix::pure(bits);
    if (target.dim() != rho.dim()) {
        throw DimensionMismatch("label '" + std::string(bits) + "' does not match the state dimension");
    }
    const Matrix dev = rho.deviation_part().matrix();
    const Matrix tdev = target.deviation_part().matrix();
    const double norm = std::sqrt((dev * dev).trace().real() * (tdev * tdev).trace().real());
    if (norm == 0.0) {
        return 1.0 / rho.dim();
    }
    const double corr = (dev * tdev).trace().real() / norm;
    const double d = rho.dim();
    return 1.0 / d + (1.0 - 1.0 / d) * corr;
}

}  // namespace nmrqc
