#include "laqc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace laqc {

Matrix2c Matrix2c::identity() {
    Matrix2c m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

Matrix4c Matrix4c::identity() {
    Matrix4c m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Matrix4c operator+(const Matrix4c& a, const Matrix4c& b) {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Matrix4c operator-(const Matrix4c& a, const Matrix4c& b) {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Matrix4c operator*(const Matrix4c& a, const Matrix4c& b) {
    Matrix4c r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const complexd aik = a(i, k);
            if (aik == complexd{}) continue;
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

Matrix4c operator*(complexd s, const Matrix4c& a) {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
    return r;
}

Matrix4c adjoint(const Matrix4c& m) {
    Matrix4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

complexd trace(const Matrix4c& m) {
    return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
    Matrix4c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

Ket4 kron(const Ket2& a, const Ket2& b) {
    return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

complexd expectation(const Matrix4c& m, const Ket4& v) {
    complexd acc{};
    for (int i = 0; i < 4; ++i) {
        complexd row{};
        for (int j = 0; j < 4; ++j) row += m(i, j) * v[static_cast<std::size_t>(j)];
        acc += std::conj(v[static_cast<std::size_t>(i)]) * row;
    }
    return acc;
}

Matrix4c outer(const Ket4& v) {
    Matrix4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = v[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]);
    return r;
}

Matrix2c partial_trace_a(const Matrix4c& m) {
    // index (a, b): row = 2a + b; summing over the A index leaves B
    Matrix2c r;
    for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp) r(b, bp) = m(b, bp) + m(2 + b, 2 + bp);
    return r;
}

Matrix2c partial_trace_b(const Matrix4c& m) {
    Matrix2c r;
    for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap) r(a, ap) = m(2 * a, 2 * ap) + m(2 * a + 1, 2 * ap + 1);
    return r;
}

double max_abs_diff(const Matrix4c& a, const Matrix4c& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(a.e[i] - b.e[i]));
    return d;
}

double hermiticity_defect(const Matrix4c& m) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

namespace {

double off_diagonal_norm(const Matrix4c& m) {
    double s = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q) s += std::norm(m(p, q));
    return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem4 jacobi_eigensystem(Matrix4c m) {
    constexpr double off_threshold = 1e-13;
    constexpr int max_sweeps = 100;

    Matrix4c v = Matrix4c::identity();

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(m) < off_threshold) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double r = std::abs(m(p, q));
                if (r < 1e-290) continue;

                // unitary 2x2 rotation annihilating m(p,q): a phase absorbing
                // arg(m(p,q)) followed by a real Givens rotation
                const complexd phase = m(p, q) / r;  // e^{i arg}
                const double theta = (m(q, q).real() - m(p, p).real()) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                m(p, p) = c * c * app - 2.0 * c * s * r + s * s * aqq;
                m(q, q) = s * s * app + 2.0 * c * s * r + c * c * aqq;
                m(p, q) = 0.0;
                m(q, p) = 0.0;

                for (int k = 0; k < 4; ++k) {
                    if (k == p || k == q) continue;
                    const complexd mkp = m(k, p);
                    const complexd mkq = m(k, q);
                    m(k, p) = c * mkp - s * std::conj(phase) * mkq;
                    m(k, q) = s * phase * mkp + c * mkq;
                    m(p, k) = std::conj(m(k, p));
                    m(q, k) = std::conj(m(k, q));
                }
                for (int k = 0; k < 4; ++k) {
                    const complexd vkp = v(k, p);
                    const complexd vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
            }
        }
    }

    EigenSystem4 out;
    std::array<int, 4> order = {0, 1, 2, 3};
    std::array<double, 4> diag;
    for (int i = 0; i < 4; ++i) diag[static_cast<std::size_t>(i)] = m(i, i).real();
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return diag[static_cast<std::size_t>(a)] < diag[static_cast<std::size_t>(b)]; });
    for (int i = 0; i < 4; ++i) {
        out.values[static_cast<std::size_t>(i)] = diag[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        for (int k = 0; k < 4; ++k) out.vectors(k, i) = v(k, order[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::array<double, 4> jacobi_eigenvalues(const Matrix4c& m) {
    return jacobi_eigensystem(m).values;
}

bool is_density_matrix(const Matrix4c& m, double tol) {
    if (hermiticity_defect(m) > tol) return false;
    if (std::abs(trace(m) - complexd{1.0}) > tol) return false;
    return jacobi_eigenvalues(m)[0] >= -tol;
}

void require_density(const Matrix4c& m, double tol, const char* who) {
    const double herm = hermiticity_defect(m);
    if (herm > tol)
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian (defect " +
                                    std::to_string(herm) + ")");
    const double tr_defect = std::abs(trace(m) - complexd{1.0});
    if (tr_defect > tol)
        throw std::invalid_argument(std::string(who) + ": trace differs from 1 by " +
                                    std::to_string(tr_defect));
    const double min_eig = jacobi_eigenvalues(m)[0];
    if (min_eig < -tol)
        throw std::invalid_argument(std::string(who) + ": matrix is not positive semidefinite (min eigenvalue " +
                                    std::to_string(min_eig) + ")");
}

}  // namespace laqc
