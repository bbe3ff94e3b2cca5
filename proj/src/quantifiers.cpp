#include "laqc/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "laqc/info_theory.hpp"

namespace laqc {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

void require_physical(const BDTriple& state, const char* who) {
    const std::string violation = physicality_violation(state);
    if (!violation.empty())
        throw std::invalid_argument(std::string(who) + ": unphysical state: " + violation);
}

struct Grid1D {
    double lo;
    double step;
    int n;

    double at(int k) const { return lo + k * step; }
};

Grid1D inclusive_grid(double lo, double hi, int n) {
    return {lo, n > 1 ? (hi - lo) / (n - 1) : 0.0, n};
}

Grid1D halfopen_grid(double lo, double hi, int n) {
    return {lo, (hi - lo) / n, n};
}

Grid1D window_grid(double center, double width, int n, double lo_bound, double hi_bound) {
    const double lo = std::max(lo_bound, center - 0.5 * width);
    const double hi = std::min(hi_bound, center + 0.5 * width);
    return inclusive_grid(lo, hi, n);
}

struct GridPoint {
    double value;
    double x;
    double y;
};

// Full deterministic scan of one grid. make_row(x) returns the y-evaluator,
// so per-row precomputation happens once per row. Ties resolve to the lowest
// (row, column) index; with OpenMP the per-thread bests merge under the same
// total order, so the result is independent of scheduling.
template <class RowFactory>
GridPoint scan_grid(const Grid1D& gx, const Grid1D& gy, RowFactory&& make_row, bool maximize) {
    struct Best {
        double v;
        int ix;
        int iy;
    };
    const auto better = [maximize](const Best& a, const Best& b) {
        if (a.v != b.v) return maximize ? (a.v > b.v) : (a.v < b.v);
        if (a.ix != b.ix) return a.ix < b.ix;
        return a.iy < b.iy;
    };
    const double worst = maximize ? -std::numeric_limits<double>::infinity()
                                  : std::numeric_limits<double>::infinity();
    Best global{worst, std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};

#pragma omp parallel
    {
        Best local = global;
#pragma omp for schedule(static) nowait
        for (int ix = 0; ix < gx.n; ++ix) {
            auto row = make_row(gx.at(ix));
            for (int iy = 0; iy < gy.n; ++iy) {
                const Best cand{row(gy.at(iy)), ix, iy};
                if (better(cand, local)) local = cand;
            }
        }
#pragma omp critical(laqc_scan_grid_merge)
        {
            if (better(local, global)) global = local;
        }
    }
    return {global.v, gx.at(global.ix), gy.at(global.iy)};
}

// Coarse scan plus shrinking refinement windows clamped to the domain. The
// incumbent survives unless a later round finds a strictly better value.
template <class RowFactory>
GridPoint grid_optimize(double x_lo, double x_hi, int nx, bool x_halfopen, double y_lo,
                        double y_hi, int ny, bool y_halfopen, int rounds, double shrink,
                        bool maximize, RowFactory&& make_row) {
    const Grid1D gx0 = x_halfopen ? halfopen_grid(x_lo, x_hi, nx) : inclusive_grid(x_lo, x_hi, nx);
    const Grid1D gy0 = y_halfopen ? halfopen_grid(y_lo, y_hi, ny) : inclusive_grid(y_lo, y_hi, ny);
    GridPoint best = scan_grid(gx0, gy0, make_row, maximize);

    double wx = x_hi - x_lo;
    double wy = y_hi - y_lo;
    for (int r = 0; r < rounds; ++r) {
        wx *= shrink;
        wy *= shrink;
        const GridPoint cand = scan_grid(window_grid(best.x, wx, nx, x_lo, x_hi),
                                         window_grid(best.y, wy, ny, y_lo, y_hi),
                                         make_row, maximize);
        const bool improved = maximize ? cand.value > best.value : cand.value < best.value;
        if (improved) best = cand;
    }
    return best;
}

double axis_coefficient(const BDTriple& s, BasisCase c) {
    switch (c) {
        case BasisCase::I: return std::abs(s.c3);
        case BasisCase::II: return std::abs(s.c1);
        case BasisCase::III: return std::abs(s.c2);
    }
    return 0.0;
}

// lowest-numbered case whose axis coefficient attains c_m
BasisCase classical_case(const BDTriple& s, double c_m) {
    if (std::abs(s.c3) == c_m) return BasisCase::I;
    if (std::abs(s.c1) == c_m) return BasisCase::II;
    return BasisCase::III;
}

double correlation_of(const JointDistribution2x2& d) {
    return std::abs(4.0 * d.p[0][0] - 1.0);
}

double snap_to_grid(double x, const Grid1D& g) {
    if (g.n <= 1 || g.step == 0.0) return g.lo;
    const double k = std::clamp(std::round((x - g.lo) / g.step), 0.0, static_cast<double>(g.n - 1));
    return g.at(static_cast<int>(k));
}

// The twelve admissible four-angle bases: each correlation axis with
// independent per-side orientation, snapped to the given grids so this leg
// carries the same resolution as the symmetric scan. The reversed
// orientation (theta -> pi - theta, phi -> phi + pi) is mirrored from the
// snapped point so the two sides stay exactly (anti-)aligned. Aligned,
// unflipped configurations come first so ties resolve to them.
std::vector<ProbeBasis> admissible_axis_bases(const Grid1D& gt, const Grid1D& gp) {
    std::vector<ProbeBasis> bases;
    bases.reserve(12);
    for (BasisCase c : {BasisCase::I, BasisCase::II, BasisCase::III}) {
        const CaseAngles ca = case_angles(c);
        const double thetas[2] = {snap_to_grid(ca.theta, gt),
                                  snap_to_grid(pi - snap_to_grid(ca.theta, gt), gt)};
        const double phis[2] = {snap_to_grid(ca.phi, gp),
                                snap_to_grid(std::fmod(snap_to_grid(ca.phi, gp) + pi, two_pi), gp)};
        for (int flip_a = 0; flip_a < 2; ++flip_a)
            for (int flip_b = 0; flip_b < 2; ++flip_b)
                bases.push_back({thetas[flip_a], phis[flip_a], thetas[flip_b], phis[flip_b]});
    }
    return bases;
}

}  // namespace

void GridSpec::validate() const {
    if (theta_steps < 8 || phi_steps < 8 || phase_steps < 8)
        throw std::invalid_argument("GridSpec: all step counts must be >= 8");
    if (refine_rounds < 0)
        throw std::invalid_argument("GridSpec: refine_rounds must be >= 0");
    if (!(refine_shrink > 0.0 && refine_shrink < 1.0))
        throw std::invalid_argument("GridSpec: refine_shrink must lie in (0, 1)");
}

ExtremalPick select_extremal(const BDTriple& s, ExtremalMode mode) {
    const double a[3] = {std::abs(s.c1), std::abs(s.c2), std::abs(s.c3)};
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        const bool better = mode == ExtremalMode::minimum ? a[i] < a[best] : a[i] > a[best];
        if (better) best = i;
    }
    bool tie = false;
    for (int i = 0; i < 3; ++i)
        if (i != best && a[i] == a[best]) tie = true;
    return {a[best], best + 1, tie};
}

BDTriple canonical_representative(const BDTriple& s) {
    return {-std::abs(s.c1), -std::abs(s.c2), -std::abs(s.c3)};
}

QuantifierResult classical_correlations_bd(const BDTriple& state) {
    require_physical(state, "classical_correlations_bd");
    const ExtremalPick m = select_extremal(state, ExtremalMode::minimum);
    const BasisCase c = classical_case(state, m.value);
    const CaseAngles angles = case_angles(c);

    QuantifierResult res;
    res.value = binary_correlation_entropy(m.value);
    res.arg_angles = {{"theta", angles.theta}, {"phi", angles.phi}};
    res.case_label = c;
    res.extremal_coefficient = m.value;
    res.tie = m.tie;
    return res;
}

QuantifierResult classical_correlations_numeric(const BDTriple& state, const GridSpec& grid) {
    grid.validate();
    require_physical(state, "classical_correlations_numeric");
    const BDTriple canon = canonical_representative(state);

    // symmetric two-angle search on the canonical representative
    const auto row_factory = [&canon](double theta) {
        return [&canon, theta](double phi) {
            return mutual_information(r_coefficients_bd(canon, theta, phi));
        };
    };
    const GridPoint sym = grid_optimize(0.0, pi, grid.theta_steps, false,
                                        0.0, two_pi, grid.phi_steps, true,
                                        grid.refine_rounds, grid.refine_shrink, false,
                                        row_factory);

    // general-route minimization over the admissible four-angle bases,
    // evaluated on the canonical representative like the symmetric scan
    const Grid1D gt = inclusive_grid(0.0, pi, grid.theta_steps);
    const Grid1D gp = halfopen_grid(0.0, two_pi, grid.phi_steps);
    const DensityMatrix4 rho = bd_to_density(canon);
    double general_value = std::numeric_limits<double>::infinity();
    ProbeBasis general_basis{};
    for (const ProbeBasis& b : admissible_axis_bases(gt, gp)) {
        const double v = mutual_information(r_coefficients(rho, b));
        if (v < general_value) {
            general_value = v;
            general_basis = b;
        }
    }

    QuantifierResult res;
    res.case_label = std::nullopt;
    res.tie = select_extremal(state, ExtremalMode::minimum).tie;
    if (general_value < sym.value) {
        res.value = std::max(0.0, general_value);
        res.arg_angles = {{"theta", general_basis.theta_a},
                          {"phi", general_basis.phi_a},
                          {"theta_b", general_basis.theta_b},
                          {"phi_b", general_basis.phi_b}};
        res.extremal_coefficient = correlation_of(r_coefficients(rho, general_basis));
    } else {
        res.value = std::max(0.0, sym.value);
        res.arg_angles = {{"theta", sym.x}, {"phi", sym.y}};
        res.extremal_coefficient = correlation_of(r_coefficients_bd(canon, sym.x, sym.y));
    }
    return res;
}

double axis_pair_minimum(const BDTriple& state) {
    require_physical(state, "axis_pair_minimum");
    const DensityMatrix4 rho = bd_to_density(state);
    double best = std::numeric_limits<double>::infinity();
    for (BasisCase c : {BasisCase::I, BasisCase::II, BasisCase::III}) {
        const CaseAngles ca = case_angles(c);
        const double thetas[2] = {ca.theta, pi - ca.theta};
        const double phis[2] = {ca.phi, std::fmod(ca.phi + pi, two_pi)};
        for (int flip_a = 0; flip_a < 2; ++flip_a)
            for (int flip_b = 0; flip_b < 2; ++flip_b)
                best = std::min(best, mutual_information(r_coefficients(
                                          rho, {thetas[flip_a], phis[flip_a], thetas[flip_b],
                                                phis[flip_b]})));
    }
    return std::max(0.0, best);
}

QuantifierResult laqc_bd(const BDTriple& state) {
    require_physical(state, "laqc_bd");
    const ExtremalPick m = select_extremal(state, ExtremalMode::minimum);
    const ExtremalPick big = select_extremal(state, ExtremalMode::maximum);
    const BasisCase c = classical_case(state, m.value);
    const CaseAngles angles = case_angles(c);

    // In the complementary family of the case basis, Phi = 0 picks up the
    // coefficient paired with cos(+) (c1 for case I, c3 otherwise) and
    // Phi = pi/2 the other one.
    const double phi_zero_coeff =
        c == BasisCase::I ? std::abs(state.c1) : std::abs(state.c3);
    const double realizing_phase = big.value == phi_zero_coeff ? 0.0 : 0.5 * pi;

    QuantifierResult res;
    res.value = binary_correlation_entropy(big.value);
    res.arg_angles = {{"theta", angles.theta}, {"phi", angles.phi}, {"Phi", realizing_phase}};
    res.case_label = c;
    res.extremal_coefficient = big.value;
    res.tie = m.tie || big.tie;
    return res;
}

QuantifierResult laqc_numeric(const BDTriple& state, const GridSpec& grid) {
    grid.validate();
    require_physical(state, "laqc_numeric");

    const QuantifierResult classical = classical_correlations_numeric(state, grid);
    const ExtremalPick m = select_extremal(state, ExtremalMode::minimum);
    const ExtremalPick big = select_extremal(state, ExtremalMode::maximum);

    struct Candidate {
        std::optional<BasisCase> label;
        double theta;
        double phi;
        DensityMatrix4 rho_tilde;
    };
    std::vector<Candidate> candidates;
    for (BasisCase c : {BasisCase::I, BasisCase::II, BasisCase::III}) {
        if (std::abs(axis_coefficient(state, c) - m.value) <= 1e-12) {
            const CaseAngles angles = case_angles(c);
            candidates.push_back({c, angles.theta, angles.phi,
                                  transform_to_optimal_basis(state, c)});
        }
    }

    // A numeric argmin farther than one coarse grid cell from every tied case
    // basis is explored through unitary conjugation.
    double argmin_theta = 0.0, argmin_phi = 0.0;
    for (const NamedAngle& a : classical.arg_angles) {
        if (a.name == "theta") argmin_theta = a.value;
        if (a.name == "phi") argmin_phi = a.value;
    }
    const double cell_theta = pi / (grid.theta_steps - 1);
    const double cell_phi = two_pi / grid.phi_steps;
    bool near_case = false;
    for (const Candidate& cand : candidates) {
        const double dt = std::abs(argmin_theta - cand.theta);
        double dp = std::abs(argmin_phi - cand.phi);
        dp = std::min({dp, std::abs(dp - pi), std::abs(dp - two_pi)});  // cos(2 phi) period
        if (dt <= cell_theta && dp <= cell_phi) near_case = true;
        // the theta -> pi - theta mirror of a case is the same axis
        const double dt_mirror = std::abs((pi - argmin_theta) - cand.theta);
        if (dt_mirror <= cell_theta && dp <= cell_phi) near_case = true;
    }
    if (!near_case) {
        candidates.push_back({std::nullopt, argmin_theta, argmin_phi,
                              to_probe_basis(bd_to_density(state),
                                             ProbeBasis::symmetric(argmin_theta, argmin_phi))});
    }

    QuantifierResult res;
    res.value = -1.0;
    for (const Candidate& cand : candidates) {
        const PhaseMaximum best = max_phase_information(cand.rho_tilde, grid);
        if (best.value > res.value) {
            res.value = best.value;
            res.arg_angles = {{"theta", cand.theta},
                              {"phi", cand.phi},
                              {"Phi1", best.phi1},
                              {"Phi2", best.phi2}};
            res.case_label = cand.label;
            res.extremal_coefficient =
                correlation_of(u_basis_probabilities(cand.rho_tilde, {best.phi1, best.phi2}));
        }
    }
    res.value = std::max(0.0, res.value);
    res.tie = candidates.size() > 1 || big.tie;
    return res;
}

PhaseMaximum max_phase_information(const DensityMatrix4& rho_tilde, const GridSpec& grid) {
    grid.validate();
    const auto row_factory = [&rho_tilde](double phi1) {
        return [&rho_tilde, phi1](double phi2) {
            return mutual_information(u_basis_probabilities(rho_tilde, {phi1, phi2}));
        };
    };
    const GridPoint best = grid_optimize(0.0, two_pi, grid.phase_steps, true,
                                         0.0, two_pi, grid.phase_steps, true,
                                         grid.refine_rounds, grid.refine_shrink, true,
                                         row_factory);
    return {best.value, best.x, best.y};
}

std::vector<BDTriple> sample_physical_triples(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto uniform_pm1 = [&rng]() {
        // top 53 bits -> [0, 1), identical on every platform
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return 2.0 * u - 1.0;
    };
    std::vector<BDTriple> out;
    out.reserve(count);
    while (out.size() < count) {
        const BDTriple s{uniform_pm1(), uniform_pm1(), uniform_pm1()};
        if (is_physical(s)) out.push_back(s);
    }
    return out;
}

double PathComparison::delta_classical() const {
    return std::abs(classical_analytic - classical_numeric);
}

double PathComparison::delta_laqc() const {
    return std::abs(laqc_analytic - laqc_numeric_value);
}

PathComparison compare_paths(const BDTriple& state, const GridSpec& grid) {
    PathComparison c;
    c.state = state;
    c.classical_analytic = classical_correlations_bd(state).value;
    c.classical_numeric = classical_correlations_numeric(state, grid).value;
    c.laqc_analytic = laqc_bd(state).value;
    c.laqc_numeric_value = laqc_numeric(state, grid).value;
    return c;
}

double OracleComparison::max_delta() const {
    return std::max(max_delta_classical, max_delta_laqc);
}

OracleComparison compare_quantifier_paths(std::span<const BDTriple> states, const GridSpec& grid) {
    OracleComparison out;
    out.count = states.size();
    for (const BDTriple& s : states) {
        const PathComparison c = compare_paths(s, grid);
        if (c.delta_classical() > out.max_delta_classical) {
            out.max_delta_classical = c.delta_classical();
            out.worst_classical = s;
        }
        if (c.delta_laqc() > out.max_delta_laqc) {
            out.max_delta_laqc = c.delta_laqc();
            out.worst_laqc = s;
        }
    }
    return out;
}

}  // namespace laqc
