#include <doctest.h>

#include <cmath>

#include "laqc/matrix.hpp"
#include "test_support.hpp"

using namespace laqc;
using test_support::Rng;

namespace {

Matrix2c random_matrix2(Rng& rng) {
    Matrix2c m;
    for (auto& entry : m.e) entry = complexd{rng.uniform_pm1(), rng.uniform_pm1()};
    return m;
}

Matrix4c random_hermitian(Rng& rng) {
    Matrix4c m;
    for (auto& entry : m.e) entry = complexd{rng.uniform_pm1(), rng.uniform_pm1()};
    Matrix4c h;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

}  // namespace

TEST_CASE("kron of identities is the 4x4 identity") {
    CHECK(max_abs_diff(kron(Matrix2c::identity(), Matrix2c::identity()), Matrix4c::identity()) ==
          0.0);
}

TEST_CASE("partial traces of a product operator factorize") {
    Rng rng(101);
    for (int iter = 0; iter < 50; ++iter) {
        const Matrix2c a = random_matrix2(rng);
        const Matrix2c b = random_matrix2(rng);
        const Matrix4c prod = kron(a, b);
        const complexd tra = a(0, 0) + a(1, 1);
        const complexd trb = b(0, 0) + b(1, 1);

        const Matrix2c over_b = partial_trace_b(prod);  // leaves the A factor
        const Matrix2c over_a = partial_trace_a(prod);  // leaves the B factor
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                CHECK(std::abs(over_b(i, j) - a(i, j) * trb) < 1e-13);
                CHECK(std::abs(over_a(i, j) - b(i, j) * tra) < 1e-13);
            }
        }
    }
}

TEST_CASE("expectation against an outer product is the squared overlap") {
    Rng rng(102);
    for (int iter = 0; iter < 20; ++iter) {
        Ket4 v, w;
        for (int i = 0; i < 4; ++i) {
            v[i] = complexd{rng.uniform_pm1(), rng.uniform_pm1()};
            w[i] = complexd{rng.uniform_pm1(), rng.uniform_pm1()};
        }
        complexd overlap{};
        for (int i = 0; i < 4; ++i) overlap += std::conj(v[i]) * w[i];
        CHECK(std::abs(expectation(outer(v), w) - std::norm(overlap)) < 1e-12);
    }
}

TEST_CASE("jacobi diagonalizes an already diagonal matrix") {
    Matrix4c m;
    m(0, 0) = 0.4;
    m(1, 1) = -0.1;
    m(2, 2) = 0.9;
    m(3, 3) = 0.2;
    const auto eig = jacobi_eigenvalues(m);
    CHECK(eig[0] == doctest::Approx(-0.1).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(eig[2] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(eig[3] == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("jacobi eigensystem reconstructs random Hermitian matrices") {
    Rng rng(103);
    for (int iter = 0; iter < 100; ++iter) {
        const Matrix4c h = random_hermitian(rng);
        const EigenSystem4 es = jacobi_eigensystem(h);

        // invariants independent of the solver: trace and Frobenius norm
        double sum = 0.0, sum_sq = 0.0;
        for (double lambda : es.values) {
            sum += lambda;
            sum_sq += lambda * lambda;
        }
        double frob_sq = 0.0;
        for (const complexd& entry : h.e) frob_sq += std::norm(entry);
        CHECK(sum == doctest::Approx(trace(h).real()).epsilon(1e-12));
        CHECK(sum_sq == doctest::Approx(frob_sq).epsilon(1e-12));

        // residuals H v = lambda v and orthonormality of the columns
        for (int k = 0; k < 4; ++k) {
            for (int i = 0; i < 4; ++i) {
                complexd hv{};
                for (int j = 0; j < 4; ++j) hv += h(i, j) * es.vectors(j, k);
                CHECK(std::abs(hv - es.values[k] * es.vectors(i, k)) < 1e-10);
            }
            for (int l = 0; l < 4; ++l) {
                complexd dot{};
                for (int i = 0; i < 4; ++i) dot += std::conj(es.vectors(i, k)) * es.vectors(i, l);
                CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-12);
            }
        }
        CHECK(std::is_sorted(es.values.begin(), es.values.end()));
    }
}

TEST_CASE("density checks accept valid states and reject invalid ones") {
    Matrix4c quarter = complexd{0.25} * Matrix4c::identity();
    CHECK(is_density_matrix(quarter, 1e-12));
    CHECK_NOTHROW(require_density(quarter, 1e-12, "test"));

    Matrix4c not_unit = complexd{0.5} * Matrix4c::identity();
    CHECK_FALSE(is_density_matrix(not_unit, 1e-9));
    CHECK_THROWS_AS(require_density(not_unit, 1e-9, "test"), std::invalid_argument);

    Matrix4c indefinite = quarter;
    indefinite(0, 0) = 0.75;
    indefinite(1, 1) = -0.25;
    CHECK_FALSE(is_density_matrix(indefinite, 1e-9));
    CHECK_THROWS_AS(require_density(indefinite, 1e-9, "test"), std::invalid_argument);

    Matrix4c skew = quarter;
    skew(0, 1) = complexd{0.0, 0.1};
    skew(1, 0) = complexd{0.0, 0.1};  // equal, not conjugate: not Hermitian
    CHECK_FALSE(is_density_matrix(skew, 1e-9));
}
