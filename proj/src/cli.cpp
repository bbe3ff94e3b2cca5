#include "laqc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "laqc/bd_state.hpp"
#include "laqc/info_theory.hpp"
#include "laqc/quantifiers.hpp"
#include "laqc/version.hpp"

namespace laqc::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;  // physicality or tolerance failure
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

struct Document {
    std::vector<std::string> columns;
    std::vector<ordered_json> rows;
    ordered_json meta;
};

std::string cell_to_csv(const ordered_json& row, const std::string& column) {
    if (!row.contains(column)) return {};
    const ordered_json& cell = row.at(column);
    if (cell.is_null()) return {};
    if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
    if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
    if (cell.is_number()) return format_number(cell.get<double>());
    return csv_escape(cell.get<std::string>());
}

void write_csv(const Document& doc, std::ostream& out) {
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        if (i) out << ',';
        out << doc.columns[i];
    }
    out << '\n';
    for (const ordered_json& row : doc.rows) {
        for (std::size_t i = 0; i < doc.columns.size(); ++i) {
            if (i) out << ',';
            out << cell_to_csv(row, doc.columns[i]);
        }
        out << '\n';
    }
}

void write_json(const Document& doc, std::ostream& out) {
    ordered_json root;
    root["meta"] = doc.meta;
    root["rows"] = doc.rows;
    out << root.dump(2) << '\n';
}

struct CommonOptions {
    std::string format = "csv";
    std::string output;
    std::string grid_arg;
    int phase_steps = 512;
    double tol = -1.0;  // command-specific default when < 0
    std::uint64_t seed = 1;
    bool numeric = false;
    GridSpec grid;
    bool seeded = false;  // whether this command uses the seed (meta reporting)
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", opt.output, "Write the document to PATH instead of stdout");
    cmd->add_option("--grid", opt.grid_arg,
                    "Grid as T,P,R: theta steps, phi steps, refinement rounds");
    cmd->add_option("--phi-steps", opt.phase_steps,
                    "Complementary-phase grid points per phase")
        ->capture_default_str();
}

void finalize_grid(CommonOptions& opt) {
    if (!opt.grid_arg.empty()) {
        int t = 0, p = 0, r = 0;
        char trailing = '\0';
        if (std::sscanf(opt.grid_arg.c_str(), "%d,%d,%d%c", &t, &p, &r, &trailing) != 3)
            throw UsageError("--grid expects T,P,R (e.g. 256,256,3), got '" + opt.grid_arg + "'");
        opt.grid.theta_steps = t;
        opt.grid.phi_steps = p;
        opt.grid.refine_rounds = r;
    }
    opt.grid.phase_steps = opt.phase_steps;
    try {
        opt.grid.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

ordered_json meta_for(const std::string& command, const CommonOptions& opt) {
    ordered_json meta;
    meta["version"] = std::string(version);
    meta["command"] = command;
    meta["grid"] = {{"theta_steps", opt.grid.theta_steps},
                    {"phi_steps", opt.grid.phi_steps},
                    {"refine_rounds", opt.grid.refine_rounds},
                    {"refine_shrink", opt.grid.refine_shrink},
                    {"phase_steps", opt.grid.phase_steps}};
    if (opt.seeded)
        meta["seed"] = opt.seed;
    else
        meta["seed"] = nullptr;
    return meta;
}

int emit(const Document& doc, const CommonOptions& opt, std::ostream& out, std::ostream& err,
         int code) {
    if (!opt.output.empty()) {
        std::ofstream file(opt.output);
        if (!file) {
            err << "error: cannot open output file '" << opt.output << "'\n";
            return exit_usage;
        }
        opt.format == "json" ? write_json(doc, file) : write_csv(doc, file);
        return code;
    }
    opt.format == "json" ? write_json(doc, out) : write_csv(doc, out);
    return code;
}

std::optional<double> named_angle(const QuantifierResult& r, const std::string& name) {
    for (const NamedAngle& a : r.arg_angles)
        if (a.name == name) return a.value;
    return std::nullopt;
}

void fill_quantifier_cells(ordered_json& row, const BDTriple& state, bool numeric,
                           bool with_angles, const GridSpec& grid) {
    const QuantifierResult classical = classical_correlations_bd(state);
    const QuantifierResult quantum = laqc_bd(state);
    row["c_m"] = classical.extremal_coefficient;
    row["c_M"] = quantum.extremal_coefficient;
    row["case_classical"] = to_string(*classical.case_label);
    row["case_laqc"] = to_string(*quantum.case_label);
    row["classical"] = classical.value;
    row["laqc"] = quantum.value;
    if (!numeric) return;

    const QuantifierResult cn = classical_correlations_numeric(state, grid);
    const QuantifierResult ln = laqc_numeric(state, grid);
    row["classical_numeric"] = cn.value;
    row["laqc_numeric"] = ln.value;
    row["delta_classical"] = std::abs(classical.value - cn.value);
    row["delta_laqc"] = std::abs(quantum.value - ln.value);
    if (!with_angles) return;
    row["theta_opt"] = named_angle(cn, "theta").value_or(0.0);
    row["phi_opt"] = named_angle(cn, "phi").value_or(0.0);
    row["Phi1_opt"] = named_angle(ln, "Phi1").value_or(0.0);
    row["Phi2_opt"] = named_angle(ln, "Phi2").value_or(0.0);
}

std::vector<std::string> compute_columns(bool numeric) {
    std::vector<std::string> cols = {"c1",   "c2",   "c3",   "physical", "reason",
                                     "eig1", "eig2", "eig3", "eig4",     "c_m",
                                     "c_M",  "case_classical", "case_laqc", "classical",
                                     "laqc"};
    if (numeric) {
        for (const char* c : {"classical_numeric", "laqc_numeric", "delta_classical",
                              "delta_laqc", "theta_opt", "phi_opt", "Phi1_opt", "Phi2_opt"})
            cols.emplace_back(c);
    }
    return cols;
}

int run_compute(const std::vector<double>& coeffs, CommonOptions& opt, std::ostream& out,
                std::ostream& err) {
    const double tol = opt.tol < 0.0 ? default_physical_tol : opt.tol;
    const BDTriple state{coeffs[0], coeffs[1], coeffs[2]};
    const std::string violation = physicality_violation(state, tol);
    const auto eig = bd_eigenvalues(state);

    Document doc;
    doc.columns = compute_columns(opt.numeric);
    doc.meta = meta_for("compute", opt);

    ordered_json row;
    row["c1"] = state.c1;
    row["c2"] = state.c2;
    row["c3"] = state.c3;
    row["physical"] = violation.empty();
    row["reason"] = violation;
    row["eig1"] = eig[0];
    row["eig2"] = eig[1];
    row["eig3"] = eig[2];
    row["eig4"] = eig[3];
    if (violation.empty()) {
        fill_quantifier_cells(row, state, opt.numeric, true, opt.grid);
    } else {
        err << "error: unphysical Bell-diagonal state: " << violation << '\n';
    }
    doc.rows.push_back(std::move(row));
    return emit(doc, opt, out, err, violation.empty() ? exit_ok : exit_failure);
}

struct SweepOptions {
    std::string axis;
    double start = 0.0;
    double stop = 0.0;
    int steps = 2;
    double fixed_c1 = 0.0;
    double fixed_c2 = 0.0;
    double fixed_c3 = 0.0;
};

int run_sweep(const SweepOptions& sw, const CLI::App* cmd, CommonOptions& opt, std::ostream& out,
              std::ostream& err) {
    if (sw.start > sw.stop) throw UsageError("sweep: start must be <= stop");
    if (sw.steps < 2) throw UsageError("sweep: steps must be >= 2");
    const bool is_werner = sw.axis == "werner_z";
    if (is_werner) {
        if (cmd->count("--c1") || cmd->count("--c2") || cmd->count("--c3"))
            throw UsageError("sweep: fixed coefficients do not apply to a werner_z sweep");
        if (sw.start < 0.0 || sw.stop > 1.0)
            throw UsageError("sweep: werner_z range must lie within [0, 1]");
    } else if (cmd->count("--" + sw.axis)) {
        throw UsageError("sweep: --" + sw.axis + " conflicts with the sweep axis");
    }

    Document doc;
    doc.columns = {"axis", "axis_value", "c1",  "c2",  "c3",
                   "physical", "reason", "c_m", "c_M", "case_classical",
                   "case_laqc", "classical", "laqc"};
    if (opt.numeric)
        for (const char* c :
             {"classical_numeric", "laqc_numeric", "delta_classical", "delta_laqc"})
            doc.columns.emplace_back(c);
    doc.meta = meta_for("sweep", opt);

    for (int k = 0; k < sw.steps; ++k) {
        const double v = sw.start + k * (sw.stop - sw.start) / (sw.steps - 1);
        BDTriple state{sw.fixed_c1, sw.fixed_c2, sw.fixed_c3};
        if (is_werner)
            state = werner(std::clamp(v, 0.0, 1.0));
        else if (sw.axis == "c1")
            state.c1 = v;
        else if (sw.axis == "c2")
            state.c2 = v;
        else
            state.c3 = v;

        ordered_json row;
        row["axis"] = sw.axis;
        row["axis_value"] = v;
        row["c1"] = state.c1;
        row["c2"] = state.c2;
        row["c3"] = state.c3;
        const std::string violation = physicality_violation(state);
        row["physical"] = violation.empty();
        row["reason"] = violation;
        if (violation.empty()) fill_quantifier_cells(row, state, opt.numeric, false, opt.grid);
        doc.rows.push_back(std::move(row));
    }
    return emit(doc, opt, out, err, exit_ok);
}

int run_validate(const std::string& path, CommonOptions& opt, std::ostream& out,
                 std::ostream& err) {
    const double tol = opt.tol < 0.0 ? default_physical_tol : opt.tol;
    std::ifstream file(path);
    if (!file) {
        err << "error: cannot read input file '" << path << "'\n";
        return exit_usage;
    }

    Document doc;
    doc.columns = {"line", "c1", "c2", "c3", "physical", "reason"};
    doc.meta = meta_for("validate", opt);

    int physical_count = 0, unphysical_count = 0, malformed_count = 0;
    std::string line;
    for (int line_no = 1; std::getline(file, line); ++line_no) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream in(line);
        double c1 = 0.0, c2 = 0.0, c3 = 0.0;
        if (!(in >> c1)) continue;  // blank or comment-only line
        std::string trailing;
        if (!(in >> c2 >> c3) || (in >> trailing)) {
            err << "line " << line_no << ": expected three numbers, got '" << line << "'\n";
            ++malformed_count;
            continue;
        }
        const BDTriple state{c1, c2, c3};
        const std::string violation = physicality_violation(state, tol);
        violation.empty() ? ++physical_count : ++unphysical_count;

        ordered_json row;
        row["line"] = line_no;
        row["c1"] = c1;
        row["c2"] = c2;
        row["c3"] = c3;
        row["physical"] = violation.empty();
        row["reason"] = violation;
        doc.rows.push_back(std::move(row));
    }
    err << "validate: " << physical_count << " physical, " << unphysical_count
        << " unphysical, " << malformed_count << " malformed\n";
    const int code = malformed_count > 0 ? exit_usage
                     : unphysical_count > 0 ? exit_failure
                                            : exit_ok;
    return emit(doc, opt, out, err, code);
}

int run_oracle_compare(int count, CommonOptions& opt, std::ostream& out, std::ostream& err) {
    const double tolerance = opt.tol < 0.0 ? 1e-6 : opt.tol;
    const std::vector<BDTriple> states =
        sample_physical_triples(static_cast<std::size_t>(count), opt.seed);
    const OracleComparison cmp = compare_quantifier_paths(states, opt.grid);
    const bool pass = cmp.max_delta() <= tolerance;

    Document doc;
    doc.columns = {"count",
                   "seed",
                   "tolerance",
                   "theta_steps",
                   "phi_steps",
                   "refine_rounds",
                   "refine_shrink",
                   "phase_steps",
                   "max_delta_classical",
                   "worst_classical_c1",
                   "worst_classical_c2",
                   "worst_classical_c3",
                   "max_delta_laqc",
                   "worst_laqc_c1",
                   "worst_laqc_c2",
                   "worst_laqc_c3",
                   "max_delta",
                   "pass"};
    doc.meta = meta_for("oracle-compare", opt);

    ordered_json row;
    row["count"] = count;
    row["seed"] = opt.seed;
    row["tolerance"] = tolerance;
    row["theta_steps"] = opt.grid.theta_steps;
    row["phi_steps"] = opt.grid.phi_steps;
    row["refine_rounds"] = opt.grid.refine_rounds;
    row["refine_shrink"] = opt.grid.refine_shrink;
    row["phase_steps"] = opt.grid.phase_steps;
    row["max_delta_classical"] = cmp.max_delta_classical;
    row["worst_classical_c1"] = cmp.worst_classical.c1;
    row["worst_classical_c2"] = cmp.worst_classical.c2;
    row["worst_classical_c3"] = cmp.worst_classical.c3;
    row["max_delta_laqc"] = cmp.max_delta_laqc;
    row["worst_laqc_c1"] = cmp.worst_laqc.c1;
    row["worst_laqc_c2"] = cmp.worst_laqc.c2;
    row["worst_laqc_c3"] = cmp.worst_laqc.c3;
    row["max_delta"] = cmp.max_delta();
    row["pass"] = pass;
    doc.rows.push_back(std::move(row));

    err << "oracle-compare: max |analytic - numeric| = " << format_number(cmp.max_delta())
        << " over " << count << " states (tolerance " << format_number(tolerance) << ") -> "
        << (pass ? "pass" : "FAIL") << '\n';
    return emit(doc, opt, out, err, pass ? exit_ok : exit_failure);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classical and local available quantum correlations of two-qubit "
                 "Bell-diagonal states"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* compute = app.add_subcommand(
        "compute", "Quantifiers of one state given its correlation coefficients");
    std::vector<double> coeffs;
    compute->add_option("coefficients", coeffs, "c1 c2 c3")->expected(3)->required();
    compute->add_flag("--numeric", opt.numeric, "Also run the brute-force numeric paths");
    compute->add_option("--tol", opt.tol, "Physicality tolerance (default 1e-9)");
    add_common_flags(compute, opt);

    auto* sweep = app.add_subcommand("sweep", "Quantifiers along one parameter axis");
    SweepOptions sw;
    sweep->add_option("--axis", sw.axis, "Swept parameter")
        ->check(CLI::IsMember({"c1", "c2", "c3", "werner_z"}))
        ->required();
    sweep->add_option("--start", sw.start, "First axis value")->required();
    sweep->add_option("--stop", sw.stop, "Last axis value")->required();
    sweep->add_option("--steps", sw.steps, "Number of samples (>= 2)")->required();
    sweep->add_option("--c1", sw.fixed_c1, "Fixed c1 (default 0)");
    sweep->add_option("--c2", sw.fixed_c2, "Fixed c2 (default 0)");
    sweep->add_option("--c3", sw.fixed_c3, "Fixed c3 (default 0)");
    sweep->add_flag("--numeric", opt.numeric, "Also run the brute-force numeric paths");
    add_common_flags(sweep, opt);

    auto* validate = app.add_subcommand(
        "validate", "Physicality verdicts for a file of coefficient triples");
    std::string validate_path;
    validate->add_option("path", validate_path, "One triple per line; '#' starts a comment")
        ->required();
    validate->add_option("--tol", opt.tol, "Physicality tolerance (default 1e-9)");
    add_common_flags(validate, opt);

    auto* oracle = app.add_subcommand(
        "oracle-compare", "Analytic vs numeric quantifiers on random physical states");
    int count = 100;
    oracle->add_option("--count", count, "Number of sampled states")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle->add_option("--seed", opt.seed, "Sampling seed")->capture_default_str();
    oracle->add_option("--tol", opt.tol, "Maximum allowed |analytic - numeric| (default 1e-6)");
    add_common_flags(oracle, opt);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("laqc");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        finalize_grid(opt);
        if (compute->parsed()) return run_compute(coeffs, opt, out, err);
        if (sweep->parsed()) return run_sweep(sw, sweep, opt, out, err);
        if (validate->parsed()) return run_validate(validate_path, opt, out, err);
        if (oracle->parsed()) {
            opt.seeded = true;
            return run_oracle_compare(count, opt, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace laqc::cli
