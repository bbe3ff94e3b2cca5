#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laqc/basis_probe.hpp"
#include "laqc/bd_state.hpp"

namespace laqc {

/// Controls of the grid-plus-refinement optimizer: a coarse uniform scan,
/// then refine_rounds passes that shrink the window around the incumbent by
/// refine_shrink each round. phase_steps sizes the complementary-phase grid
/// per phase. Incumbent selection is deterministic: among equal values the
/// lowest lexicographic grid index wins, so results do not depend on
/// evaluation order.
struct GridSpec {
    int theta_steps = 256;
    int phi_steps = 256;
    int refine_rounds = 3;
    double refine_shrink = 0.1;
    int phase_steps = 512;

    /// Throws std::invalid_argument unless steps >= 8, refine_rounds >= 0 and
    /// refine_shrink in (0, 1).
    void validate() const;
};

struct NamedAngle {
    std::string name;
    double value;
};

struct QuantifierResult {
    double value{};                       // bits, >= 0
    std::vector<NamedAngle> arg_angles;   // angles realizing the optimum
    std::optional<BasisCase> case_label;  // nullopt = purely numeric argmin
    double extremal_coefficient{};        // the |c| selected by the optimum, in [0, 1]
    bool tie{};                           // the extremal selection was degenerate
};

enum class ExtremalMode { minimum, maximum };

struct ExtremalPick {
    double value;  // min or max of (|c1|, |c2|, |c3|)
    int index;     // 1-based, first attaining index in the order c1, c2, c3
    bool tie;
};

ExtremalPick select_extremal(const BDTriple& state, ExtremalMode mode);

/// (-|c1|, -|c2|, -|c3|). Physical whenever the input is, with the same
/// quantifier values: over the computational bases that keep the state
/// Bell-diagonal the statistics depend on the coefficients only through
/// their magnitudes. The numeric searches run on this representative, whose
/// unrestricted basis landscape attains its optimum exactly on those bases.
BDTriple canonical_representative(const BDTriple& state);

/// Classical correlations, closed form: h(c_m) with c_m = min |c_i|. The case
/// label is the basis realizing the minimum (I for c3, II for c1, III for
/// c2), the lowest-numbered one on ties. Throws std::invalid_argument for
/// unphysical states.
QuantifierResult classical_correlations_bd(const BDTriple& state);

/// Classical correlations by brute force: minimizes the mutual information of
/// the symmetric probe-basis statistics over the (theta, phi) grid with
/// refinement, and also over the general four-angle route evaluated on the
/// axis bases with independent per-side orientations; returns the smaller.
/// Agrees with the closed form to ~1e-8 at default grid settings.
QuantifierResult classical_correlations_numeric(const BDTriple& state, const GridSpec& grid = {});

/// Minimum mutual information over the admissible four-angle bases, evaluated
/// exactly on the correlation axes through the general measurement route
/// (each axis, independent per-side orientations). Allowing the two sides to
/// differ never improves on the symmetric two-angle optimum: this coincides
/// with h(c_m) for every physical state.
double axis_pair_minimum(const BDTriple& state);

/// Local available quantum correlations, closed form: h(c_M) with
/// c_M = max |c_i|, realized in the complementary-phase family of the optimal
/// computational basis (the classical case). Throws for unphysical states.
QuantifierResult laqc_bd(const BDTriple& state);

/// LAQC by brute force: determines the optimal computational basis from the
/// classical minimization (all tied case bases are explored; a numeric argmin
/// away from every case basis is handled by unitary conjugation), then
/// maximizes the mutual information of the complementary-basis statistics
/// over the (Phi1, Phi2) grid with refinement and returns the largest.
QuantifierResult laqc_numeric(const BDTriple& state, const GridSpec& grid = {});

/// Maximum mutual information over the two complementary phases for a state
/// already written in its computational basis, with the realizing phases.
struct PhaseMaximum {
    double value;
    double phi1;
    double phi2;
};

PhaseMaximum max_phase_information(const DensityMatrix4& rho_tilde, const GridSpec& grid = {});

/// Deterministic rejection sampling of physical triples: coefficients uniform
/// in [-1, 1]^3 from a seeded 64-bit generator, keeping physical states.
std::vector<BDTriple> sample_physical_triples(std::size_t count, std::uint64_t seed);

/// Both quantifiers through both routes for one state.
struct PathComparison {
    BDTriple state{};
    double classical_analytic{};
    double classical_numeric{};
    double laqc_analytic{};
    double laqc_numeric_value{};

    double delta_classical() const;
    double delta_laqc() const;
};

PathComparison compare_paths(const BDTriple& state, const GridSpec& grid = {});

/// Worst-case analytic-vs-numeric deviations over a batch of states.
struct OracleComparison {
    std::size_t count{};
    double max_delta_classical{};
    double max_delta_laqc{};
    BDTriple worst_classical{};
    BDTriple worst_laqc{};

    double max_delta() const;
};

OracleComparison compare_quantifier_paths(std::span<const BDTriple> states,
                                          const GridSpec& grid = {});

}  // namespace laqc
