#pragma once

#include <array>
#include <complex>

namespace laqc {

using complexd = std::complex<double>;

// 2x2 complex matrix, row-major storage.
struct Matrix2c {
    std::array<complexd, 4> e{};

    complexd& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const complexd& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    static Matrix2c identity();
};

// 4x4 complex matrix, row-major storage. Also serves as the density-matrix
// carrier; validity (Hermitian, unit trace, PSD) is checked by the helpers
// below rather than enforced at construction.
struct Matrix4c {
    std::array<complexd, 16> e{};

    complexd& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
    const complexd& operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

    static Matrix4c identity();
};

using DensityMatrix4 = Matrix4c;

using Ket2 = std::array<complexd, 2>;
using Ket4 = std::array<complexd, 4>;

Matrix4c operator+(const Matrix4c& a, const Matrix4c& b);
Matrix4c operator-(const Matrix4c& a, const Matrix4c& b);
Matrix4c operator*(const Matrix4c& a, const Matrix4c& b);
Matrix4c operator*(complexd s, const Matrix4c& a);

Matrix4c adjoint(const Matrix4c& m);
complexd trace(const Matrix4c& m);

Matrix4c kron(const Matrix2c& a, const Matrix2c& b);
Ket4 kron(const Ket2& a, const Ket2& b);

// <v|m|v>
complexd expectation(const Matrix4c& m, const Ket4& v);
// |v><v|
Matrix4c outer(const Ket4& v);

// Trace over the first (A) or second (B) qubit of a two-qubit operator.
Matrix2c partial_trace_a(const Matrix4c& m);
Matrix2c partial_trace_b(const Matrix4c& m);

double max_abs_diff(const Matrix4c& a, const Matrix4c& b);
// max entrywise |m - m^dagger|
double hermiticity_defect(const Matrix4c& m);

struct EigenSystem4 {
    std::array<double, 4> values;  // ascending
    Matrix4c vectors;              // columns are the matching orthonormal eigenvectors
};

// Cyclic Jacobi diagonalization of a 4x4 Hermitian matrix: sweeps over all
// off-diagonal pairs until the off-diagonal Frobenius norm drops below
// 1e-13, at most 100 sweeps.
EigenSystem4 jacobi_eigensystem(Matrix4c m);
std::array<double, 4> jacobi_eigenvalues(const Matrix4c& m);  // ascending

// min eigenvalue >= -tol, Hermitian and unit trace within tol
bool is_density_matrix(const Matrix4c& m, double tol);
// throws std::invalid_argument naming the violated property
void require_density(const Matrix4c& m, double tol, const char* who);

}  // namespace laqc
