#include "laqc/basis_probe.hpp"

#include <cmath>
#include <numbers>

namespace laqc {

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

CaseAngles case_angles(BasisCase c) {
    switch (c) {
        case BasisCase::I: return {0.0, 0.0};
        case BasisCase::II: return {0.5 * pi, 0.0};
        case BasisCase::III: return {0.5 * pi, 0.5 * pi};
    }
    return {0.0, 0.0};  // unreachable
}

std::string to_string(BasisCase c) {
    switch (c) {
        case BasisCase::I: return "I";
        case BasisCase::II: return "II";
        case BasisCase::III: return "III";
    }
    return "?";
}

std::array<Ket2, 2> mu_basis(double theta, double phi) {
    const double ch = std::cos(0.5 * theta);
    const double sh = std::sin(0.5 * theta);
    const complexd ph = std::polar(1.0, phi);
    return {Ket2{complexd{ch}, sh * ph}, Ket2{complexd{-sh}, ch * ph}};
}

Matrix2c mu_unitary(double theta, double phi) {
    const auto mu = mu_basis(theta, phi);
    Matrix2c u;
    for (int i = 0; i < 2; ++i) {
        u(i, 0) = mu[0][static_cast<std::size_t>(i)];
        u(i, 1) = mu[1][static_cast<std::size_t>(i)];
    }
    return u;
}

JointDistribution2x2 r_coefficients(const DensityMatrix4& rho, const ProbeBasis& basis) {
    const auto mu_a = mu_basis(basis.theta_a, basis.phi_a);
    const auto mu_b = mu_basis(basis.theta_b, basis.phi_b);
    double p[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            p[i][j] = expectation(rho, kron(mu_a[static_cast<std::size_t>(i)],
                                            mu_b[static_cast<std::size_t>(j)]))
                          .real();
    return JointDistribution2x2::from_joint(p[0][0], p[0][1], p[1][0], p[1][1]);
}

JointDistribution2x2 r_coefficients_bd(const BDTriple& s, double theta, double phi) {
    const double ch2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double sh2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const double w = 0.5 * ch2 * sh2 *
                     ((s.c1 + s.c2) + std::cos(2.0 * phi) * (s.c1 - s.c2) - 2.0 * s.c3);
    const double p_even = 0.25 * (1.0 + s.c3) + w;  // R00 = R11
    const double p_odd = 0.25 * (1.0 - s.c3) - w;   // R01 = R10
    return JointDistribution2x2::with_marginals(p_even, p_odd, p_odd, p_even, 0.5, 0.5);
}

DensityMatrix4 chi_of_rho(const DensityMatrix4& rho, const ProbeBasis& basis) {
    const auto mu_a = mu_basis(basis.theta_a, basis.phi_a);
    const auto mu_b = mu_basis(basis.theta_b, basis.phi_b);
    DensityMatrix4 chi;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Ket4 v = kron(mu_a[static_cast<std::size_t>(i)], mu_b[static_cast<std::size_t>(j)]);
            const double r_ij = expectation(rho, v).real();
            chi = chi + complexd{r_ij} * outer(v);
        }
    }
    return chi;
}

DensityMatrix4 to_probe_basis(const DensityMatrix4& rho, const ProbeBasis& basis) {
    const Matrix4c u = kron(mu_unitary(basis.theta_a, basis.phi_a),
                            mu_unitary(basis.theta_b, basis.phi_b));
    return adjoint(u) * rho * u;
}

DensityMatrix4 transform_to_optimal_basis(const BDTriple& s, BasisCase c) {
    // diagonal carries the case's axis coefficient, the anti-diagonal the
    // other two
    double diag_c = 0.0, corner = 0.0, middle = 0.0;
    switch (c) {
        case BasisCase::I:
            diag_c = s.c3;
            corner = s.c1 - s.c2;
            middle = s.c1 + s.c2;
            break;
        case BasisCase::II:
            diag_c = s.c1;
            corner = s.c3 - s.c2;
            middle = s.c3 + s.c2;
            break;
        case BasisCase::III:
            diag_c = s.c2;
            corner = s.c3 - s.c1;
            middle = s.c3 + s.c1;
            break;
    }
    DensityMatrix4 rho;
    rho(0, 0) = 0.25 * (1.0 + diag_c);
    rho(1, 1) = 0.25 * (1.0 - diag_c);
    rho(2, 2) = 0.25 * (1.0 - diag_c);
    rho(3, 3) = 0.25 * (1.0 + diag_c);
    rho(0, 3) = 0.25 * corner;
    rho(3, 0) = 0.25 * corner;
    rho(1, 2) = 0.25 * middle;
    rho(2, 1) = 0.25 * middle;
    return rho;
}

JointDistribution2x2 u_basis_probabilities(const DensityMatrix4& rho, const PhasePair& phases) {
    // Expansion of <u_a u_b| rho |u_a u_b> over the flip structure of the
    // basis vectors: with z_n = e^{i Phi_n} and signs sigma = (-1)^a,
    // tau = (-1)^b,
    //   p(a,b) = (1/4)[ Tr rho + sigma A1 + tau A2 + sigma tau A12 ],
    //   A1  = 2 Re[z1 (rho02 + rho13)],  A2 = 2 Re[z2 (rho01 + rho23)],
    //   A12 = 2 Re[z1 z2 rho03 + z1 conj(z2) rho12].
    const complexd z1 = std::polar(1.0, phases.phi1);
    const complexd z2 = std::polar(1.0, phases.phi2);
    const double tr = trace(rho).real();
    const double a1 = 2.0 * (z1 * (rho(0, 2) + rho(1, 3))).real();
    const double a2 = 2.0 * (z2 * (rho(0, 1) + rho(2, 3))).real();
    const double a12 = 2.0 * (z1 * z2 * rho(0, 3) + z1 * std::conj(z2) * rho(1, 2)).real();

    const double p00 = 0.25 * (tr + a1 + a2 + a12);
    const double p01 = 0.25 * (tr + a1 - a2 - a12);
    const double p10 = 0.25 * (tr - a1 + a2 - a12);
    const double p11 = 0.25 * (tr - a1 - a2 + a12);
    return JointDistribution2x2::from_joint(p00, p01, p10, p11);
}

}  // namespace laqc
