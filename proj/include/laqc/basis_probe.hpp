#pragma once

#include <array>
#include <string>

#include "laqc/bd_state.hpp"
#include "laqc/info_theory.hpp"
#include "laqc/matrix.hpp"

namespace laqc {

/// Per-subsystem probe-basis angles. theta in [0, pi], phi in [0, 2 pi).
struct ProbeBasis {
    double theta_a{};
    double phi_a{};
    double theta_b{};
    double phi_b{};

    static ProbeBasis symmetric(double theta, double phi) { return {theta, phi, theta, phi}; }
};

/// Phases of the balanced complementary basis on each subsystem, in [0, 2 pi).
struct PhasePair {
    double phi1{};
    double phi2{};
};

/// The three computational-basis choices that keep a Bell-diagonal state
/// Bell-diagonal when rewritten: the z, x and y correlation axes.
enum class BasisCase { I, II, III };

struct CaseAngles {
    double theta;
    double phi;
};

/// (theta, phi) of each case: I -> (0, 0), II -> (pi/2, 0), III -> (pi/2, pi/2).
CaseAngles case_angles(BasisCase c);

std::string to_string(BasisCase c);

/// Probe basis of one qubit:
///   |mu0> =  cos(theta/2)|0> + sin(theta/2) e^{i phi} |1>
///   |mu1> = -sin(theta/2)|0> + cos(theta/2) e^{i phi} |1>
/// Orthonormal for all angles.
std::array<Ket2, 2> mu_basis(double theta, double phi);

/// Unitary whose columns are |mu0>, |mu1>.
Matrix2c mu_unitary(double theta, double phi);

/// Measurement statistics R_ij = <mu_i mu_j| rho |mu_i mu_j> in a product
/// probe basis; marginals are the row/column sums.
JointDistribution2x2 r_coefficients(const DensityMatrix4& rho, const ProbeBasis& basis);

/// Closed-form R table of a Bell-diagonal state probed in the same basis on
/// both sides:
///   R_ij = (1/4)[1 + (-1)^{i+j} c3]
///        + (-1)^{i+j} (1/2) cos^2(theta/2) sin^2(theta/2)
///          [(c1 + c2) + cos(2 phi)(c1 - c2) - 2 c3],
/// with both marginals exactly (1/2, 1/2).
JointDistribution2x2 r_coefficients_bd(const BDTriple& state, double theta, double phi);

/// The state dephased in the product probe basis:
///   chi = sum_ij R_ij |mu_i mu_j><mu_i mu_j|.
/// Its eigenvalues are the R_ij.
DensityMatrix4 chi_of_rho(const DensityMatrix4& rho, const ProbeBasis& basis);

/// rho rewritten in the probe basis: (U_a (x) U_b)^dagger rho (U_a (x) U_b)
/// with U the mu-basis unitary of each side.
DensityMatrix4 to_probe_basis(const DensityMatrix4& rho, const ProbeBasis& basis);

/// A Bell-diagonal state rewritten in the case's computational basis. Case I
/// leaves the matrix unchanged; cases II and III move c1 (resp. c2) to the
/// diagonal and carry c3 -+ c2 (resp. c3 -+ c1) on the anti-diagonal. Unit
/// trace, Hermiticity and the eigenvalue multiset are preserved.
DensityMatrix4 transform_to_optimal_basis(const BDTriple& state, BasisCase c);

/// Probabilities of the complementary-basis measurement
///   |u0> = (|0> + e^{i Phi}|1>)/sqrt(2),  |u1> = (|0> - e^{i Phi}|1>)/sqrt(2)
/// with phase phases.phi1 on A and phases.phi2 on B:
///   p[i][j] = <u_i u_j| rho_tilde |u_i u_j>.
JointDistribution2x2 u_basis_probabilities(const DensityMatrix4& rho_tilde,
                                           const PhasePair& phases);

}  // namespace laqc
