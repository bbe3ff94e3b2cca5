// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "laqc/cli.hpp"
#include "laqc/info_theory.hpp"
#include "laqc/quantifiers.hpp"

using namespace laqc;

namespace {

constexpr double pi = std::numbers::pi;

// independently computed reference values of h
constexpr double h_01 = 0.0072255460121917063;
constexpr double h_06 = 0.27807190511263765;

struct Sampler {
    std::mt19937_64 gen;

    explicit Sampler(std::uint64_t seed) : gen(seed) {}

    double uniform_pm1() { return 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0; }

    BDTriple physical() {
        while (true) {
            const BDTriple s{uniform_pm1(), uniform_pm1(), uniform_pm1()};
            if (is_physical(s)) return s;
        }
    }

    // physical state with |c1| strictly the minimum by at least `margin`
    BDTriple physical_c1_min(double margin) {
        while (true) {
            const BDTriple s = physical();
            if (std::abs(s.c1) + margin < std::min(std::abs(s.c2), std::abs(s.c3))) return s;
        }
    }

    // physical state with |c3| strictly the maximum by at least `margin`
    BDTriple physical_c3_max(double margin) {
        while (true) {
            const BDTriple s = physical();
            if (std::abs(s.c3) > std::max(std::abs(s.c1), std::abs(s.c2)) + margin) return s;
        }
    }
};

double angle_of(const QuantifierResult& r, const std::string& name, double fallback) {
    for (const NamedAngle& a : r.arg_angles)
        if (a.name == name) return a.value;
    return fallback;
}

double refined_cell(double range, int steps, int rounds, double shrink) {
    return range * std::pow(shrink, rounds) / (steps - 1);
}

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    const GridSpec grid;  // 256 x 256, 3 refinement rounds, shrink 0.1, 512 phase steps

    criterion(1, "closed-form reproduction on (0.1, 0.2, 0.6)", [&](std::string& detail) {
        const QuantifierResult classical = classical_correlations_bd({0.1, 0.2, 0.6});
        const QuantifierResult quantum = laqc_bd({0.1, 0.2, 0.6});
        char buf[160];
        std::snprintf(buf, sizeof(buf), "C = %.12g (case %s), L = %.12g", classical.value,
                      to_string(*classical.case_label).c_str(), quantum.value);
        detail = buf;
        return std::abs(classical.value - h_01) <= 1e-12 &&
               std::abs(quantum.value - h_06) <= 1e-12 &&
               classical.case_label == BasisCase::II && classical.extremal_coefficient == 0.1 &&
               quantum.extremal_coefficient == 0.6;
    });

    criterion(2, "correction regression: argmin at (pi/2, 0) for |c1|-minimal states and "
                 "theta = pi/2 LAQC basis for |c3|-maximal states",
              [&](std::string& detail) {
        const double cell_theta = refined_cell(pi, grid.theta_steps, grid.refine_rounds,
                                               grid.refine_shrink);
        const double cell_phi = refined_cell(2.0 * pi, grid.phi_steps, grid.refine_rounds,
                                             grid.refine_shrink);
        Sampler sampler(9002);
        double worst_theta = 0.0, worst_phi = 0.0;
        for (int k = 0; k < 50; ++k) {
            const BDTriple s = sampler.physical_c1_min(0.02);
            const QuantifierResult res = classical_correlations_numeric(s, grid);
            const double theta = angle_of(res, "theta", -1.0);
            const double phi = angle_of(res, "phi", -1.0);
            const double dt = std::abs(theta - 0.5 * pi);  // theta -> pi - theta symmetric
            const double dp = std::min({phi, std::abs(phi - pi), std::abs(phi - 2.0 * pi)});
            worst_theta = std::max(worst_theta, dt);
            worst_phi = std::max(worst_phi, dp);
            if (dt > cell_theta || dp > cell_phi) {
                char buf[200];
                std::snprintf(buf, sizeof(buf),
                              "argmin (%.6g, %.6g) off the x axis for (%.4g, %.4g, %.4g)", theta,
                              phi, s.c1, s.c2, s.c3);
                detail = buf;
                return false;
            }
        }
        double worst_value = 0.0;
        for (int k = 0; k < 50; ++k) {
            const BDTriple s = sampler.physical_c3_max(0.02);
            const QuantifierResult res = laqc_numeric(s, grid);
            const double theta = angle_of(res, "theta", -1.0);
            const double delta = std::abs(res.value - binary_correlation_entropy(std::abs(s.c3)));
            worst_value = std::max(worst_value, delta);
            if (std::abs(theta - 0.5 * pi) > 1e-9 || delta > 1e-6) {
                char buf[200];
                std::snprintf(buf, sizeof(buf),
                              "basis theta %.6g, |L - h(|c3|)| = %.3g for (%.4g, %.4g, %.4g)",
                              theta, delta, s.c1, s.c2, s.c3);
                detail = buf;
                return false;
            }
        }
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "max |theta - pi/2| = %.3g (cell %.3g), max |L - h(|c3|)| = %.3g",
                      worst_theta, cell_theta, worst_value);
        detail = buf;
        return true;
    });

    criterion(3, "case-II rewrite changes every non-Werner state and fixes Werner states",
              [&](std::string& detail) {
        Sampler sampler(9003);
        int checked = 0;
        while (checked < 20) {
            const BDTriple s = sampler.physical();
            if (std::abs(s.c1 - s.c3) < 1e-3) continue;
            ++checked;
            const double diff =
                max_abs_diff(transform_to_optimal_basis(s, BasisCase::II), bd_to_density(s));
            if (diff <= 1e-6) {
                detail = "case-II rewrite left a non-Werner state invariant";
                return false;
            }
        }
        for (int k = 0; k <= 10; ++k) {
            const BDTriple w = werner(k / 10.0);
            const double diff =
                max_abs_diff(transform_to_optimal_basis(w, BasisCase::II), bd_to_density(w));
            if (diff > 1e-12) {
                detail = "case-II rewrite moved a Werner state";
                return false;
            }
        }
        return true;
    });

    criterion(4, "oracle equivalence: oracle-compare --count 500 within 1e-6", [&](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        std::ostringstream out, err;
        const int code = laqc::cli::run({"oracle-compare", "--count", "500", "--seed", "1",
                                         "--tol", "1e-6", "--format", "json"},
                                        out, err);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const auto doc = nlohmann::json::parse(out.str());
        const double max_delta = doc.at("rows").at(0).at("max_delta").get<double>();
        char buf[120];
        std::snprintf(buf, sizeof(buf), "max delta %.3g in %.1f s", max_delta, seconds);
        detail = buf;
        return code == 0 && max_delta <= 1e-6;
    });

    criterion(5, "relative-entropy and mutual-information routes agree at the optimal basis",
              [&](std::string& detail) {
        Sampler sampler(9005);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const BDTriple s = sampler.physical();
            const QuantifierResult classical = classical_correlations_bd(s);
            const CaseAngles angles = case_angles(*classical.case_label);
            const ProbeBasis basis = ProbeBasis::symmetric(angles.theta, angles.phi);
            const DensityMatrix4 rho = bd_to_density(s);
            const DensityMatrix4 chi = chi_of_rho(rho, basis);
            const DensityMatrix4 nearest_product =
                kron(partial_trace_b(chi), partial_trace_a(chi));
            const double via_relative_entropy = relative_entropy(chi, nearest_product);
            const double via_mutual_information = mutual_information(r_coefficients(rho, basis));
            worst = std::max(worst, std::abs(via_relative_entropy - via_mutual_information));
        }
        char buf[80];
        std::snprintf(buf, sizeof(buf), "max |S(X||Pi) - I| = %.3g", worst);
        detail = buf;
        return worst <= 1e-8;
    });

    criterion(6, "two-phase maximization equals the single-phase closed-form maximum",
              [&](std::string& detail) {
        Sampler sampler(9006);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const BDTriple s = sampler.physical();
            const QuantifierResult quantum = laqc_bd(s);
            const BasisCase c = *classical_correlations_bd(s).case_label;
            const PhaseMaximum two_phase =
                max_phase_information(transform_to_optimal_basis(s, c), grid);
            worst = std::max(worst, std::abs(two_phase.value - quantum.value));
        }
        char buf[80];
        std::snprintf(buf, sizeof(buf), "max |max_(Phi1,Phi2) I - h(c_M)| = %.3g", worst);
        detail = buf;
        return worst <= 1e-8;
    });

    criterion(7, "invariant suite over 500 random states", [&](std::string& detail) {
        Sampler sampler(9007);
        std::mt19937_64 angle_gen(9107);
        const auto angle = [&angle_gen](double range) {
            return range * (static_cast<double>(angle_gen() >> 11) * 0x1.0p-53);
        };
        for (int k = 0; k < 500; ++k) {
            const BDTriple s = sampler.physical();
            const double classical = classical_correlations_bd(s).value;
            const double quantum = laqc_bd(s).value;

            if (quantum < classical - 1e-12) {
                detail = "L < C";
                return false;
            }

            // independent per-side orientations never beat the symmetric optimum
            if (axis_pair_minimum(s) < classical - 1e-8) {
                detail = "four-angle axis bases improved on the symmetric optimum";
                return false;
            }

            const double perms[6][3] = {{s.c1, s.c2, s.c3}, {s.c1, s.c3, s.c2},
                                        {s.c2, s.c1, s.c3}, {s.c2, s.c3, s.c1},
                                        {s.c3, s.c1, s.c2}, {s.c3, s.c2, s.c1}};
            for (const auto& p : perms) {
                for (int signs = 0; signs < 8; ++signs) {
                    const BDTriple v{(signs & 1) ? -p[0] : p[0], (signs & 2) ? -p[1] : p[1],
                                     (signs & 4) ? -p[2] : p[2]};
                    if (!is_physical(v)) continue;
                    if (classical_correlations_bd(v).value != classical ||
                        laqc_bd(v).value != quantum) {
                        detail = "permutation/sign-flip invariance violated";
                        return false;
                    }
                }
            }

            // marginals are 1/2 through both measurement routes
            const double theta = angle(pi), phi = angle(2.0 * pi);
            const auto fast = r_coefficients_bd(s, theta, phi);
            if (fast.marginal_a[0] != 0.5 || fast.marginal_b[0] != 0.5) {
                detail = "closed-form marginals differ from 1/2";
                return false;
            }
            const auto general = r_coefficients(
                bd_to_density(s), {angle(pi), angle(2.0 * pi), angle(pi), angle(2.0 * pi)});
            for (double m : {general.marginal_a[0], general.marginal_a[1],
                             general.marginal_b[0], general.marginal_b[1]}) {
                if (std::abs(m - 0.5) > 1e-12) {
                    detail = "general-route marginals differ from 1/2";
                    return false;
                }
            }
        }

        for (int k = 0; k <= 10; ++k) {
            const BDTriple w = werner(k / 10.0);
            if (classical_correlations_bd(w).value != laqc_bd(w).value) {
                detail = "C != L on the Werner line";
                return false;
            }
        }
        if (classical_correlations_bd({0.0, 0.0, 0.0}).value != 0.0 ||
            laqc_bd({0.0, 0.0, 0.0}).value != 0.0) {
            detail = "nonzero quantifier on the maximally mixed state";
            return false;
        }
        return true;
    });

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
