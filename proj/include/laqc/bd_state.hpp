#pragma once

#include <array>
#include <string>

#include "laqc/matrix.hpp"

namespace laqc {

/// Correlation coefficients (c1, c2, c3) of a Bell-diagonal two-qubit state
///   rho = (1/4)(I + c1 X(x)X + c2 Y(x)Y + c3 Z(x)Z).
/// Plain construction performs no validation so that unphysical triples can
/// be built and diagnosed; make_physical() is the checked entry point.
struct BDTriple {
    double c1{};
    double c2{};
    double c3{};
};

inline constexpr double default_physical_tol = 1e-9;

// Pauli matrices and the qubit identity.
inline const Matrix2c pauli_x{{complexd{0.0}, complexd{1.0}, complexd{1.0}, complexd{0.0}}};
inline const Matrix2c pauli_y{{complexd{0.0}, complexd{0.0, -1.0}, complexd{0.0, 1.0}, complexd{0.0}}};
inline const Matrix2c pauli_z{{complexd{1.0}, complexd{0.0}, complexd{0.0}, complexd{-1.0}}};
inline const Matrix2c identity2 = Matrix2c::identity();

/// The four eigenvalues of the Bell-diagonal density matrix, in the fixed order
///   ((1-c1-c2-c3)/4, (1-c1+c2+c3)/4, (1+c1-c2+c3)/4, (1+c1+c2-c3)/4),
/// i.e. the populations of the Bell states (Psi-, Phi-, Phi+, Psi+).
std::array<double, 4> bd_eigenvalues(const BDTriple& state);

/// Density-matrix realization of the state. Hermitian with unit trace for any
/// input; positive semidefinite iff the state is physical.
DensityMatrix4 bd_to_density(const BDTriple& state);

/// True iff every eigenvalue is >= -tol (the tetrahedron condition). Boundary
/// states (a zero eigenvalue, e.g. pure Bell states) are physical.
bool is_physical(const BDTriple& state, double tol = default_physical_tol);

/// Empty string if physical; otherwise a description of the most-violated
/// tetrahedron inequality, e.g. "(1 - c1 - c2 - c3)/4 = -0.5 < 0".
std::string physicality_violation(const BDTriple& state, double tol = default_physical_tol);

/// Validated constructor: throws std::invalid_argument naming the violated
/// tetrahedron inequality if the triple is not a physical state.
BDTriple make_physical(double c1, double c2, double c3, double tol = default_physical_tol);

/// Werner state c = (-z, -z, -z); physical for every z in [0, 1].
/// Throws std::invalid_argument outside that range.
BDTriple werner(double z);

}  // namespace laqc
