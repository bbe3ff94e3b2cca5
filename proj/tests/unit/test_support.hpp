#pragma once

#include <cstdint>
#include <random>

#include "laqc/bd_state.hpp"
#include "laqc/matrix.hpp"

namespace test_support {

// Seeded generator with a platform-independent 53-bit uniform mapping.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }  // [0, 1)
    double uniform_pm1() { return 2.0 * uniform() - 1.0; }
    double angle(double range) { return range * uniform(); }

    laqc::BDTriple triple_any() { return {uniform_pm1(), uniform_pm1(), uniform_pm1()}; }

    laqc::BDTriple triple_physical() {
        while (true) {
            const laqc::BDTriple s = triple_any();
            if (laqc::is_physical(s)) return s;
        }
    }
};

// Independent density-matrix oracle: expands the Bloch form through generic
// Kronecker products of the Pauli constants.
inline laqc::DensityMatrix4 density_oracle(const laqc::BDTriple& s) {
    using namespace laqc;
    const Matrix4c sum = Matrix4c::identity() + complexd{s.c1} * kron(pauli_x, pauli_x) +
                         complexd{s.c2} * kron(pauli_y, pauli_y) +
                         complexd{s.c3} * kron(pauli_z, pauli_z);
    return complexd{0.25} * sum;
}

// Random density matrix: normalized M M^dagger of a random complex matrix.
inline laqc::DensityMatrix4 random_density(Rng& rng) {
    using namespace laqc;
    Matrix4c m;
    for (auto& entry : m.e) entry = complexd{rng.uniform_pm1(), rng.uniform_pm1()};
    Matrix4c rho = m * adjoint(m);
    const double tr = trace(rho).real();
    return complexd{1.0 / tr} * rho;
}

}  // namespace test_support
