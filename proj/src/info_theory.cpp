#include "laqc/info_theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace laqc {

namespace {

// p log2 p with the 0 log 0 = 0 convention
double plog2p(double p) {
    return p > 0.0 ? p * std::log2(p) : 0.0;
}

double clamp_probability(double p, double tol, const char* who) {
    if (p < -tol || p > 1.0 + tol)
        throw std::invalid_argument(std::string(who) + ": probability out of range: " +
                                    std::to_string(p));
    if (p < 0.0) return 0.0;
    if (p > 1.0) return 1.0;
    return p;
}

}  // namespace

JointDistribution2x2 JointDistribution2x2::from_joint(double p00, double p01, double p10,
                                                      double p11, double tol) {
    JointDistribution2x2 d;
    d.p[0][0] = clamp_probability(p00, tol, "JointDistribution2x2");
    d.p[0][1] = clamp_probability(p01, tol, "JointDistribution2x2");
    d.p[1][0] = clamp_probability(p10, tol, "JointDistribution2x2");
    d.p[1][1] = clamp_probability(p11, tol, "JointDistribution2x2");
    d.marginal_a = {d.p[0][0] + d.p[0][1], d.p[1][0] + d.p[1][1]};
    d.marginal_b = {d.p[0][0] + d.p[1][0], d.p[0][1] + d.p[1][1]};
    const std::string v = d.violation(tol);
    if (!v.empty()) throw std::invalid_argument("JointDistribution2x2: " + v);
    return d;
}

JointDistribution2x2 JointDistribution2x2::with_marginals(double p00, double p01, double p10,
                                                          double p11, double ma0, double mb0,
                                                          double tol) {
    JointDistribution2x2 d;
    d.p[0][0] = clamp_probability(p00, tol, "JointDistribution2x2");
    d.p[0][1] = clamp_probability(p01, tol, "JointDistribution2x2");
    d.p[1][0] = clamp_probability(p10, tol, "JointDistribution2x2");
    d.p[1][1] = clamp_probability(p11, tol, "JointDistribution2x2");
    d.marginal_a = {ma0, 1.0 - ma0};
    d.marginal_b = {mb0, 1.0 - mb0};
    const std::string v = d.violation(tol);
    if (!v.empty()) throw std::invalid_argument("JointDistribution2x2: " + v);
    return d;
}

std::string JointDistribution2x2::violation(double tol) const {
    double sum = 0.0;
    for (const auto& row : p)
        for (double q : row) {
            if (q < 0.0 || q > 1.0) return "entry out of [0, 1]: " + std::to_string(q);
            sum += q;
        }
    if (std::abs(sum - 1.0) > tol)
        return "normalization violated: sum = " + std::to_string(sum);
    for (int i = 0; i < 2; ++i) {
        if (std::abs(marginal_a[static_cast<std::size_t>(i)] - (p[static_cast<std::size_t>(i)][0] + p[static_cast<std::size_t>(i)][1])) > tol)
            return "marginal_a inconsistent with row sums";
        if (std::abs(marginal_b[static_cast<std::size_t>(i)] - (p[0][static_cast<std::size_t>(i)] + p[1][static_cast<std::size_t>(i)])) > tol)
            return "marginal_b inconsistent with column sums";
    }
    return {};
}

double shannon_entropy(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs) h -= plog2p(p);
    return h;
}

double mutual_information(const JointDistribution2x2& dist) {
    const std::string v = dist.violation();
    if (!v.empty()) throw std::invalid_argument("mutual_information: " + v);

    double info = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double pij = dist.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (pij <= 0.0) continue;
            info += pij * std::log2(pij / (dist.marginal_a[static_cast<std::size_t>(i)] *
                                           dist.marginal_b[static_cast<std::size_t>(j)]));
        }
    }
    return info;
}

double binary_correlation_entropy(double c) {
    if (std::abs(c) > 1.0 + 1e-12)
        throw std::invalid_argument("binary_correlation_entropy: |c| > 1: " + std::to_string(c));
    const double cc = std::clamp(c, -1.0, 1.0);
    return plog2p(0.5 * (1.0 + cc)) + plog2p(0.5 * (1.0 - cc)) + 1.0;
}

double von_neumann_entropy(const DensityMatrix4& rho, double tol) {
    require_density(rho, tol, "von_neumann_entropy");
    const auto eig = jacobi_eigenvalues(rho);
    double s = 0.0;
    for (double lambda : eig) s -= plog2p(lambda);
    return s;
}

double relative_entropy(const DensityMatrix4& rho, const DensityMatrix4& chi, double tol) {
    require_density(rho, tol, "relative_entropy(rho)");
    require_density(chi, tol, "relative_entropy(chi)");

    constexpr double support_cutoff = 1e-14;  // chi eigenvalues below this are zero
    constexpr double support_weight_tol = 1e-12;

    const EigenSystem4 es = jacobi_eigensystem(chi);
    double cross = 0.0;  // -Tr(rho log2 chi) over the support of chi
    for (int k = 0; k < 4; ++k) {
        Ket4 v;
        for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = es.vectors(i, k);
        const double weight = expectation(rho, v).real();
        if (es.values[static_cast<std::size_t>(k)] < support_cutoff) {
            if (weight > support_weight_tol)
                return std::numeric_limits<double>::infinity();
            continue;
        }
        cross -= weight * std::log2(es.values[static_cast<std::size_t>(k)]);
    }
    return cross - von_neumann_entropy(rho, tol);
}

}  // namespace laqc
