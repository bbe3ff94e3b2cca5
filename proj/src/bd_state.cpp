#include "laqc/bd_state.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace laqc {

std::array<double, 4> bd_eigenvalues(const BDTriple& s) {
    return {
        0.25 * (1.0 - s.c1 - s.c2 - s.c3),
        0.25 * (1.0 - s.c1 + s.c2 + s.c3),
        0.25 * (1.0 + s.c1 - s.c2 + s.c3),
        0.25 * (1.0 + s.c1 + s.c2 - s.c3),
    };
}

DensityMatrix4 bd_to_density(const BDTriple& s) {
    // X(x)X and Y(x)Y fill the anti-diagonal, Z(x)Z the diagonal
    const double dp = 0.25 * (1.0 + s.c3);
    const double dm = 0.25 * (1.0 - s.c3);
    const double corner = 0.25 * (s.c1 - s.c2);
    const double middle = 0.25 * (s.c1 + s.c2);

    DensityMatrix4 rho;
    rho(0, 0) = dp;
    rho(1, 1) = dm;
    rho(2, 2) = dm;
    rho(3, 3) = dp;
    rho(0, 3) = corner;
    rho(3, 0) = corner;
    rho(1, 2) = middle;
    rho(2, 1) = middle;
    return rho;
}

bool is_physical(const BDTriple& s, double tol) {
    const auto eig = bd_eigenvalues(s);
    return *std::min_element(eig.begin(), eig.end()) >= -tol;
}

namespace {

constexpr const char* inequality_names[4] = {
    "(1 - c1 - c2 - c3)/4",
    "(1 - c1 + c2 + c3)/4",
    "(1 + c1 - c2 + c3)/4",
    "(1 + c1 + c2 - c3)/4",
};

}  // namespace

std::string physicality_violation(const BDTriple& s, double tol) {
    const auto eig = bd_eigenvalues(s);
    int worst = 0;
    for (int i = 1; i < 4; ++i)
        if (eig[static_cast<std::size_t>(i)] < eig[static_cast<std::size_t>(worst)]) worst = i;
    if (eig[static_cast<std::size_t>(worst)] >= -tol) return {};

    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s = %.6g < 0", inequality_names[worst],
                  eig[static_cast<std::size_t>(worst)]);
    return buf;
}

BDTriple make_physical(double c1, double c2, double c3, double tol) {
    const BDTriple s{c1, c2, c3};
    const std::string violation = physicality_violation(s, tol);
    if (!violation.empty())
        throw std::invalid_argument("unphysical Bell-diagonal state: " + violation);
    return s;
}

BDTriple werner(double z) {
    if (!(z >= 0.0 && z <= 1.0))
        throw std::invalid_argument("werner: z must lie in [0, 1], got " + std::to_string(z));
    const double c = 0.0 - z;  // keeps +0 at z = 0
    return {c, c, c};
}

}  // namespace laqc
