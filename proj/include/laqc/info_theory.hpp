#pragma once

#include <array>
#include <span>

#include "laqc/matrix.hpp"

namespace laqc {

inline constexpr double default_distribution_tol = 1e-9;

/// Joint probability table of two binary outcomes plus its marginals. Carries
/// the measured R_ij coefficients of a two-qubit state in a product basis,
/// where the marginals are exactly (1/2, 1/2) by construction.
struct JointDistribution2x2 {
    std::array<std::array<double, 2>, 2> p{};
    std::array<double, 2> marginal_a{};
    std::array<double, 2> marginal_b{};

    /// Builds the table from four joint probabilities; marginals are the row
    /// and column sums. Entries in [-tol, 0) are clamped to 0; entries beyond
    /// tolerance or a normalization defect beyond tol throw
    /// std::invalid_argument.
    static JointDistribution2x2 from_joint(double p00, double p01, double p10, double p11,
                                           double tol = default_distribution_tol);

    /// Like from_joint but with the marginals pinned by the caller (used when
    /// they are known exactly, e.g. maximally mixed reduced states).
    static JointDistribution2x2 with_marginals(double p00, double p01, double p10, double p11,
                                               double ma0, double mb0,
                                               double tol = default_distribution_tol);

    /// Empty string if the invariants hold within tol, else a description.
    std::string violation(double tol = default_distribution_tol) const;
};

/// Shannon entropy in bits, with 0 log 0 = 0.
double shannon_entropy(std::span<const double> probs);

/// Mutual information of the joint table in bits:
///   sum_ij p[i][j] log2(p[i][j] / (marginal_a[i] marginal_b[j])),
/// zero-probability cells contributing 0. Throws std::invalid_argument if the
/// distribution invariants are violated beyond tolerance. The result can be
/// as low as -1e-12 from rounding; it is returned unclamped.
double mutual_information(const JointDistribution2x2& dist);

/// h(c) = (1+c)/2 log2(1+c) + (1-c)/2 log2(1-c) for |c| <= 1, with the
/// 0 log 0 = 0 convention so h(+-1) = 1 exactly. Even in c, increasing in |c|.
/// Throws std::invalid_argument for |c| > 1.
double binary_correlation_entropy(double c);

/// Von Neumann entropy -sum lambda log2 lambda in bits. The input must be a
/// valid density matrix within tol (throws std::invalid_argument otherwise);
/// eigenvalues <= 0 contribute 0.
double von_neumann_entropy(const DensityMatrix4& rho, double tol = 1e-9);

/// Relative entropy S(rho || chi) = -Tr(rho log2 chi) - S(rho) in bits.
/// Eigenvalues of chi below 1e-14 are treated as zero for support purposes;
/// if rho has weight beyond the support of chi the divergence is infinite and
/// +infinity is returned. Inputs must be valid density matrices within tol.
double relative_entropy(const DensityMatrix4& rho, const DensityMatrix4& chi, double tol = 1e-9);

}  // namespace laqc
