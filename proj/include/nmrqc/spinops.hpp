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

// Dense operator algebra for systems of N spin-1/2 nuclei.
//
// Basis convention: the computational product basis |b_0 b_1 ... b_{N-1}>,
// where b_k = 0 is spin-up (Iz = +1/2) and spin 0 is the most significant
// bit of the basis index. In the bundled chloroform profiles spin 0 is 1H and
// spin 1 is 13C, so |10> means "proton down, carbon up".

#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace nmrqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kMaxSpins = 8;
inline constexpr int kMaxDim = 1 << kMaxSpins;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;

enum class Axis { x, y, z };

enum class OperatorRole { general, hermitian, unitary };

/// Largest entrywise modulus, the norm used for every tolerance check here.
double max_abs(const Matrix& m);

/// Entrywise Hermiticity check. The tolerance is relative to the largest entry
/// once entries exceed 1, so Hamiltonians in Hz are held to the same
/// number of significant digits as dimensionless operators.
bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& m, double tol = kUnitaryTol);

/// Number of spins for a power-of-two dimension; throws otherwise.
int spin_count(Eigen::Index dim);

/// Value (0 or 1) of `spin`'s bit inside basis index `index`.
inline int spin_bit(int index, int spin, int n_spins) {
    return (index >> (n_spins - 1 - spin)) & 1;
}

/// Parses "0110"-style labels; leftmost character is spin 0.
int basis_index(std::string_view bits);
std::string basis_label(int index, int n_spins);

/// Square complex matrix of dimension 2^N tagged with its algebraic role.
/// Hermitian and unitary tags are verified on construction.
class Operator {
   public:
    explicit Operator(Matrix m, OperatorRole role = OperatorRole::general);

    static Operator identity(int dim);

    const Matrix& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }
    int n_spins() const { return spin_count(m_.rows()); }
    OperatorRole role() const { return role_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    Operator adjoint() const;
    Complex trace() const { return m_.trace(); }
    bool is_diagonal(double tol = kHermitianTol) const;

    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator*(double s, const Operator& a);

   private:
    Matrix m_;
    OperatorRole role_;
};

enum class StateKind { full, deviation };

/// Density matrix, either the full state (trace 1) or its traceless
/// deviation part. Construction checks Hermiticity and trace; `full()`
/// additionally checks positivity.
class DensityMatrix {
   public:
    DensityMatrix(Matrix m, StateKind kind);

    /// Full state with eigenvalue check (>= -1e-10).
    static DensityMatrix full(Matrix m);
    static DensityMatrix deviation(Matrix m);
    static DensityMatrix maximally_mixed(int dim);
    static DensityMatrix pure(std::string_view bits);

    const Matrix& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }
    int n_spins() const { return spin_count(m_.rows()); }
    StateKind kind() const { return kind_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    double trace() const { return m_.trace().real(); }
    double purity() const;
    /// rho - Tr(rho)/d * 1; a deviation matrix is returned unchanged.
    DensityMatrix deviation_part() const;

   private:
    Matrix m_;
    StateKind kind_;
};

/// I_axis on `spin` for an `n_spins` system: (sigma_axis / 2) at position
/// `spin`, identity elsewhere.
Operator angular_momentum(int spin, Axis axis, int n_spins);

/// Raising operator I+ = Ix + i Iy on `spin`.
Operator raising(int spin, int n_spins);

/// Kronecker product a (x) b; the first factor carries the higher bits.
Operator tensor(const Operator& a, const Operator& b);

/// |x><x| in the product basis.
Operator projector(std::string_view bits);

/// <psi|rho|psi> for a pure target |psi><psi|.
double fidelity(const DensityMatrix& rho, const DensityMatrix& target);

/// Fidelity of the effective pure state carried by a pseudo-pure density
/// matrix. The deviation part is rescaled to the norm of a pure-state
/// deviation, so a state (1-a) 1/d + a |x><x| scores exactly 1 for any a > 0.
/// Equals 1/d + (1 - 1/d) * corr, where corr is the normalized overlap of the
/// two deviation matrices.
double effective_pure_fidelity(const DensityMatrix& rho, std::string_view bits);

}  // namespace nmrqc
