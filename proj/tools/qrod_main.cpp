// qrod: tipping time of a quantum rod balanced on its end.
//
// Subcommands:
//   tiptime   closed-form tipping time report (JSON on stdout)
//   evolve    wavepacket evolution -> snapshot CSVs + density-vs-time SVG
//   validate  analytic results vs the grid solver, pass/fail
//   sweep     parameter sweeps -> CSV + JSON fits + SVG
//
// Exit codes: 0 ok, 1 validation-suite failure, 2 config error, 3 domain error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "qrod/analysis.hpp"
#include "qrod/config.hpp"
#include "qrod/output.hpp"
#include "qrod/schrodinger.hpp"
#include "qrod/semiclassical.hpp"

namespace fs = std::filesystem;
using namespace qrod;

namespace {

enum class Engine { Analytic, Numeric, Both };

struct CommonOptions {
    std::string config_path;
    std::string units;
    double mass = 0.0;
    double half_length = 0.0;
    double gravity = 0.0;
    double hbar = 0.0;
    double sigma = 0.0;
    std::string out_dir = ".";

    CLI::Option* units_opt = nullptr;
    CLI::Option* mass_opt = nullptr;
    CLI::Option* half_length_opt = nullptr;
    CLI::Option* gravity_opt = nullptr;
    CLI::Option* hbar_opt = nullptr;
    CLI::Option* sigma_opt = nullptr;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "key = value configuration file")
        ->check(CLI::ExistingFile);
    opts.units_opt = cmd->add_option("--units", opts.units, "unit system: si or natural")
                         ->check(CLI::IsMember({"si", "natural"}));
    opts.mass_opt = cmd->add_option("--mass", opts.mass, "rod mass m [kg]");
    opts.half_length_opt =
        cmd->add_option("--half-length", opts.half_length, "pivot-to-centre distance a [m]");
    opts.gravity_opt = cmd->add_option("--gravity", opts.gravity, "gravity g [m/s^2]");
    opts.hbar_opt = cmd->add_option("--hbar", opts.hbar, "reduced Planck constant [J s]");
    opts.sigma_opt = cmd->add_option("--sigma", opts.sigma, "initial width sigma [rad]");
    cmd->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
}

/// File values first, then CLI overrides, all funneled through the same
/// aggregated validation.
ProblemConfig resolve_problem(const CommonOptions& opts) {
    ConfigMap merged;
    if (!opts.config_path.empty()) merged = parse_key_value_file(opts.config_path);
    if (opts.units_opt->count() > 0) merged["units_mode"] = opts.units;
    if (opts.mass_opt->count() > 0) merged["mass"] = format_full(opts.mass);
    if (opts.half_length_opt->count() > 0) merged["half_length"] = format_full(opts.half_length);
    if (opts.gravity_opt->count() > 0) merged["gravity"] = format_full(opts.gravity);
    if (opts.hbar_opt->count() > 0) merged["hbar"] = format_full(opts.hbar);
    if (opts.sigma_opt->count() > 0) merged["sigma"] = format_full(opts.sigma);
    return problem_from_config(merged);
}

ConfigStamp base_stamp(const std::string& command, const ProblemConfig& problem) {
    return ConfigStamp{
        {"command", command},
        {"units_mode", to_string(problem.units)},
        {"mass", format_full(problem.params.mass)},
        {"half_length", format_full(problem.params.half_length)},
        {"gravity", format_full(problem.params.gravity)},
        {"hbar", format_full(problem.params.hbar)},
        {"sigma", format_full(problem.sigma)},
    };
}

void print_warnings(const WarningLog& log) {
    for (const auto& message : log.messages()) {
        std::cerr << "warning: " << message << "\n";
    }
}

void stamp_json(JsonWriter& json, const ConfigStamp& stamp) {
    json.begin_object("config");
    for (const auto& [key, value] : stamp) json.field(key, value);
    json.end_object();
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

// ---------------------------------------------------------------- tiptime

int cmd_tiptime(const CommonOptions& opts) {
    const ProblemConfig problem = resolve_problem(opts);
    WarningLog warnings;
    const TippingReport report = tipping_report(problem.params, problem.sigma, &warnings);
    const UncertaintyProduct uncertainty =
        uncertainty_product(problem.params, problem.sigma, nullptr);
    const DerivedParameters d = derive(problem.params);
    print_warnings(warnings);

    JsonWriter json;
    json.begin_object();
    stamp_json(json, base_stamp("tiptime", problem));
    json.begin_object("derived");
    json.field("moment_of_inertia", d.moment_of_inertia);
    json.field("omega", d.omega);
    json.field("effective_mass", d.effective_mass);
    json.field("growth_rate", d.growth_rate);
    json.field("de_broglie_ratio", d.de_broglie_ratio);
    json.end_object();
    json.field("t_tip_exact", report.t_tip_exact);
    json.field("t_tip_quantum_approx", report.t_tip_quantum_approx);
    json.field("t_tip_linearized", report.t_tip_linearized);
    json.begin_object("validity");
    json.field("time", report.validity.time);
    json.field("ratio", report.validity.ratio);
    json.field("is_valid", report.validity.is_valid);
    json.end_object();
    json.field("regime", std::string(to_string(report.regime)));
    json.begin_object("uncertainty");
    json.field("product_exact", uncertainty.product_exact);
    json.field("product_linearized", uncertainty.product_linearized);
    json.field("ratio_to_hbar", uncertainty.ratio_to_hbar);
    json.field("linearized_regime", uncertainty.linearized_regime);
    json.end_object();
    json.end_object();

    std::cout << json.str() << "\n";
    if (opts.out_dir != ".") {
        fs::create_directories(opts.out_dir);
        write_text_file(fs::path(opts.out_dir) / "tiptime.json", json.str() + "\n");
    }
    return 0;
}

// ----------------------------------------------------------------- evolve

struct EvolveOptions {
    double t = -1.0;  // < 0: default to the exact tipping time
    std::vector<Engine> engines;  // repeated flags accumulate; empty means analytic
    Engine engine = Engine::Analytic;
    PotentialKind potential = PotentialKind::FullCosine;
    int grid_points = 1024;
    double dt = 0.0;
    int snapshots = 5;
    std::vector<double> theta_points;
    int t_samples = 400;
};

Engine merge_engines(const std::vector<Engine>& engines) {
    bool analytic = engines.empty();
    bool numeric = false;
    for (const Engine e : engines) {
        if (e == Engine::Both) return Engine::Both;
        analytic = analytic || e == Engine::Analytic;
        numeric = numeric || e == Engine::Numeric;
    }
    if (analytic && numeric) return Engine::Both;
    return numeric ? Engine::Numeric : Engine::Analytic;
}

int cmd_evolve(const CommonOptions& opts, EvolveOptions evolve) {
    evolve.engine = merge_engines(evolve.engines);
    const ProblemConfig problem = resolve_problem(opts);
    WarningLog warnings;
    const GaussianState state = make_gaussian(problem.sigma, &warnings);

    const double t_final = evolve.t >= 0.0 ? evolve.t
                                           : tipping_time_exact(problem.params, problem.sigma);
    const AngularGrid grid = AngularGrid::uniform(evolve.grid_points);
    const double dt =
        evolve.dt > 0.0 ? evolve.dt : default_time_step(problem.params, grid);
    const PotentialSpec potential = evolve.potential == PotentialKind::FullCosine
                                        ? PotentialSpec::full_cosine(problem.params)
                                        : PotentialSpec::quadratic(problem.params);

    ConfigStamp stamp = base_stamp("evolve", problem);
    stamp.emplace_back("t", format_full(t_final));
    stamp.emplace_back("engine", evolve.engine == Engine::Analytic
                                     ? "analytic"
                                     : (evolve.engine == Engine::Numeric ? "numeric" : "both"));
    stamp.emplace_back("potential", to_string(evolve.potential));
    stamp.emplace_back("grid", std::to_string(evolve.grid_points));
    stamp.emplace_back("dt", format_full(dt));
    stamp.emplace_back("snapshots", std::to_string(evolve.snapshots));

    fs::create_directories(opts.out_dir);
    const bool run_analytic = evolve.engine != Engine::Numeric;
    const bool run_numeric = evolve.engine != Engine::Analytic;

    JsonWriter summary;
    summary.begin_object();
    stamp_json(summary, stamp);
    summary.begin_array("snapshots");

    for (int snap = 0; snap < evolve.snapshots; ++snap) {
        const double t_snap =
            evolve.snapshots > 1 ? t_final * snap / (evolve.snapshots - 1) : t_final;

        WaveFunction analytic, numeric;
        if (run_analytic) analytic = evolve_analytic(problem.params, state, t_snap, grid, &warnings);
        if (run_numeric)
            numeric = evolve_numeric(problem.params, state, t_snap, grid, potential, dt);

        char name[64];
        std::snprintf(name, sizeof(name), "snapshot_%02d.csv", snap);
        std::ofstream file(fs::path(opts.out_dir) / name, std::ios::binary);

        ConfigStamp snap_stamp = stamp;
        snap_stamp.emplace_back("snapshot_time", format_full(t_snap));

        std::vector<std::string> columns{"theta"};
        if (run_analytic && run_numeric) {
            columns.insert(columns.end(),
                           {"re_psi_analytic", "im_psi_analytic", "density_analytic",
                            "re_psi_numeric", "im_psi_numeric", "density_numeric",
                            "abs_density_diff"});
        } else {
            columns.insert(columns.end(), {"re_psi", "im_psi", "density"});
        }

        CsvWriter csv(file, snap_stamp, columns);
        double max_diff = 0.0;
        double max_density = 0.0;
        for (int j = 0; j < grid.n_points; ++j) {
            std::vector<double> row{grid.node(j)};
            if (run_analytic) {
                const auto a = analytic.amplitudes[static_cast<std::size_t>(j)];
                row.insert(row.end(), {a.real(), a.imag(), std::norm(a)});
                max_density = std::max(max_density, std::norm(a));
            }
            if (run_numeric) {
                const auto v = numeric.amplitudes[static_cast<std::size_t>(j)];
                row.insert(row.end(), {v.real(), v.imag(), std::norm(v)});
            }
            if (run_analytic && run_numeric) {
                const double diff = std::abs(analytic.density(j) - numeric.density(j));
                row.push_back(diff);
                max_diff = std::max(max_diff, diff);
            }
            csv.row(row);
        }

        summary.begin_object();
        summary.field("file", std::string(name));
        summary.field("time", t_snap);
        if (run_analytic) summary.field("norm_analytic", analytic.norm());
        if (run_numeric) summary.field("norm_numeric", numeric.norm());
        if (run_analytic && run_numeric) {
            summary.field("density_diff_linf", max_diff);
            summary.field("density_diff_linf_relative",
                          max_density > 0.0 ? max_diff / max_density : 0.0);
        }
        summary.end_object();
    }
    summary.end_array();

    // density-vs-time curves at selected angles (closed form)
    std::vector<double> thetas = evolve.theta_points;
    if (thetas.empty()) {
        thetas = {0.0, problem.sigma, 2.0 * problem.sigma, 3.0 * problem.sigma};
    }
    std::vector<double> times(static_cast<std::size_t>(evolve.t_samples));
    for (int i = 0; i < evolve.t_samples; ++i) {
        times[static_cast<std::size_t>(i)] = t_final * i / (evolve.t_samples - 1);
    }
    const DensitySurface surface = figure_curves(problem.params, state, thetas, times);

    {
        std::ofstream file(fs::path(opts.out_dir) / "density_curves.csv", std::ios::binary);
        std::vector<std::string> columns{"t"};
        for (const auto& curve : surface.curves) {
            columns.push_back("P_theta_" + format_full(curve.theta));
        }
        CsvWriter csv(file, stamp, columns);
        for (std::size_t i = 0; i < surface.times.size(); ++i) {
            std::vector<double> row{surface.times[i]};
            for (const auto& curve : surface.curves) row.push_back(curve.density[i]);
            csv.row(row);
        }
    }

    std::vector<SvgSeries> series;
    for (const auto& curve : surface.curves) {
        SvgSeries s;
        s.label = "theta = " + format_full(curve.theta).substr(0, 8);
        s.x = surface.times;
        s.y = curve.density;
        series.push_back(std::move(s));
    }
    SvgPlotOptions plot;
    plot.title = "P(theta, t) against t";
    plot.x_label = "t";
    plot.y_label = "P";
    write_svg_line_plot(fs::path(opts.out_dir) / "density_curves.svg", plot, series, stamp);

    summary.begin_array("curve_peaks");
    for (const auto& curve : surface.curves) {
        summary.begin_object();
        summary.field("theta", curve.theta);
        summary.field("monotone_decreasing", curve.monotone_decreasing);
        summary.field("unimodal", curve.unimodal);
        summary.field("peak_time", curve.peak_time);
        summary.end_object();
    }
    summary.end_array();
    summary.end_object();
    write_text_file(fs::path(opts.out_dir) / "evolve_summary.json", summary.str() + "\n");

    print_warnings(warnings);
    std::cout << "wrote " << evolve.snapshots << " snapshots, density_curves.{csv,svg} and "
              << "evolve_summary.json to " << opts.out_dir << "\n";
    return 0;
}

// --------------------------------------------------------------- validate

struct ValidateOptions {
    int grid_points = 1024;
    double dt = 0.0;
    double tolerance_cosine = 0.05;
    double tolerance_quadratic = 0.01;
};

int cmd_validate(const CommonOptions& opts, const ValidateOptions& validate) {
    const ProblemConfig problem = resolve_problem(opts);
    GridOptions grid_options;
    grid_options.n_points = validate.grid_points;
    grid_options.dt = validate.dt;
    const CrossValidationReport report =
        cross_validate(problem.params, problem.sigma, grid_options, validate.tolerance_cosine,
                       validate.tolerance_quadratic);

    JsonWriter json;
    json.begin_object();
    stamp_json(json, base_stamp("validate", problem));
    json.field("t_tip_exact", report.t_tip_exact);
    json.field("t_tip_numeric_cosine", report.t_tip_numeric_cosine);
    json.field("t_tip_numeric_quadratic", report.t_tip_numeric_quadratic);
    json.field("tip_rel_err_cosine", report.tip_rel_err_cosine);
    json.field("tip_rel_err_quadratic", report.tip_rel_err_quadratic);
    json.field("density_err_half_cosine", report.density_err_half_cosine);
    json.field("density_err_tip_cosine", report.density_err_tip_cosine);
    json.field("density_err_half_quadratic", report.density_err_half_quadratic);
    json.field("density_err_tip_quadratic", report.density_err_tip_quadratic);
    json.field("validity_ratio_at_tip", report.validity_ratio_at_tip);
    json.field("tolerance_cosine", report.tolerance_cosine);
    json.field("tolerance_quadratic", report.tolerance_quadratic);
    json.field("pass", report.pass);
    json.begin_array("failures");
    for (const auto& failure : report.failures) json.element(failure);
    json.end_array();
    json.end_object();

    std::cout << json.str() << "\n";
    std::cout << (report.pass ? "VALIDATION PASS" : "VALIDATION FAIL") << "\n";
    if (opts.out_dir != ".") {
        fs::create_directories(opts.out_dir);
        write_text_file(fs::path(opts.out_dir) / "validate.json", json.str() + "\n");
    }
    return report.pass ? 0 : 1;
}

// ------------------------------------------------------------------ sweep

struct SweepOptions {
    std::string variable = "sigma";
    double from = 0.01;
    double to = 0.1;
    int points = 25;
    std::string scale = "log";
    bool with_numeric = false;
    PotentialKind potential = PotentialKind::FullCosine;
    int grid_points = 1024;
    int jobs = 1;
};

int cmd_sweep(const CommonOptions& opts, const SweepOptions& sweep) {
    const ProblemConfig problem = resolve_problem(opts);

    SweepSpec spec;
    spec.base = problem.params;
    spec.sigma = problem.sigma;
    spec.with_numeric = sweep.with_numeric;
    spec.potential = sweep.potential;
    spec.grid_points = sweep.grid_points;
    if (sweep.variable == "sigma") {
        spec.variable = SweepVariable::Sigma;
    } else if (sweep.variable == "omega") {
        spec.variable = SweepVariable::Omega;
    } else {
        spec.variable = SweepVariable::Hbar;
    }
    if (sweep.points < 2) throw ConfigError("sweep needs at least two points");
    if (sweep.scale == "log" && !(sweep.from > 0.0 && sweep.to > 0.0)) {
        throw ConfigError("log-scale sweeps need positive endpoints");
    }
    spec.values.resize(static_cast<std::size_t>(sweep.points));
    for (int i = 0; i < sweep.points; ++i) {
        const double frac = static_cast<double>(i) / (sweep.points - 1);
        spec.values[static_cast<std::size_t>(i)] =
            sweep.scale == "log" ? sweep.from * std::pow(sweep.to / sweep.from, frac)
                                 : sweep.from + (sweep.to - sweep.from) * frac;
    }

    const auto records = run_sweep(spec, sweep.jobs);

    ConfigStamp stamp = base_stamp("sweep", problem);
    stamp.emplace_back("variable", sweep.variable);
    stamp.emplace_back("from", format_full(sweep.from));
    stamp.emplace_back("to", format_full(sweep.to));
    stamp.emplace_back("points", std::to_string(sweep.points));
    stamp.emplace_back("scale", sweep.scale);
    stamp.emplace_back("with_numeric", sweep.with_numeric ? "true" : "false");

    fs::create_directories(opts.out_dir);
    {
        std::ofstream file(fs::path(opts.out_dir) / "sweep.csv", std::ios::binary);
        CsvWriter csv(file, stamp,
                      {"value", "t_tip_exact", "t_tip_quantum_approx", "t_tip_linearized",
                       "validity_ratio", "uncertainty_ratio", "t_tip_numeric", "regime",
                       "error"});
        for (const auto& r : records) {
            csv.row_mixed({format_full(r.value), format_full(r.t_tip_exact),
                           format_full(r.t_tip_quantum_approx), format_full(r.t_tip_linearized),
                           format_full(r.validity_ratio), format_full(r.uncertainty_ratio),
                           format_full(r.t_tip_numeric), to_string(r.regime),
                           r.error.empty() ? "" : "\"" + r.error + "\""});
        }
    }

    // power-law fit of t_tip against the swept value over the clean points
    std::vector<double> xs, ys;
    for (const auto& r : records) {
        if (r.error.empty() && r.value > 0.0 && r.t_tip_exact > 0.0) {
            xs.push_back(r.value);
            ys.push_back(r.t_tip_exact);
        }
    }

    JsonWriter json;
    json.begin_object();
    stamp_json(json, stamp);
    json.field("points_total", static_cast<long long>(records.size()));
    json.field("points_failed",
               static_cast<long long>(records.size() - xs.size()));
    if (xs.size() >= 2) {
        const ScalingFit fit = fit_power_law(xs, ys);
        json.begin_object("t_tip_exact_power_fit");
        json.field("exponent", fit.exponent);
        json.field("intercept", fit.intercept);
        json.field("r_squared", fit.r_squared);
        json.field("window_min", fit.window_min);
        json.field("window_max", fit.window_max);
        json.end_object();
    }
    json.end_object();
    write_text_file(fs::path(opts.out_dir) / "sweep.json", json.str() + "\n");

    SvgSeries exact_series;
    exact_series.label = "t_tip_exact";
    exact_series.x = xs;
    exact_series.y = ys;
    std::vector<SvgSeries> series{exact_series};
    if (sweep.with_numeric) {
        SvgSeries numeric_series;
        numeric_series.label = "t_tip_numeric";
        for (const auto& r : records) {
            if (r.error.empty() && !std::isnan(r.t_tip_numeric)) {
                numeric_series.x.push_back(r.value);
                numeric_series.y.push_back(r.t_tip_numeric);
            }
        }
        series.push_back(std::move(numeric_series));
    }
    SvgPlotOptions plot;
    plot.title = "tipping time against " + sweep.variable;
    plot.x_label = sweep.variable;
    plot.y_label = "t_tip";
    plot.log_x = sweep.scale == "log";
    plot.log_y = sweep.scale == "log";
    write_svg_line_plot(fs::path(opts.out_dir) / "sweep.svg", plot, series, stamp);

    std::cout << "wrote sweep.{csv,json,svg} to " << opts.out_dir << " (" << records.size()
              << " points, " << records.size() - xs.size() << " failed)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tipping time of a quantum rod: closed-form semiclassical results "
                 "cross-checked against a grid Schrodinger solver"};
    app.require_subcommand(1);

    CommonOptions tiptime_common;
    auto* tiptime = app.add_subcommand("tiptime", "closed-form tipping-time report");
    add_common_options(tiptime, tiptime_common);

    CommonOptions evolve_common;
    EvolveOptions evolve_options;
    auto* evolve = app.add_subcommand("evolve", "evolve the wavepacket and export artifacts");
    add_common_options(evolve, evolve_common);
    evolve->add_option("--t", evolve_options.t, "final time [s]; defaults to t_tip");
    const std::map<std::string, Engine> engine_names{
        {"analytic", Engine::Analytic}, {"numeric", Engine::Numeric}, {"both", Engine::Both}};
    evolve->add_option("--engine", evolve_options.engines,
                       "evolution engine (repeatable): analytic, numeric or both")
        ->transform(CLI::CheckedTransformer(engine_names));
    const std::map<std::string, PotentialKind> potential_names{
        {"cosine", PotentialKind::FullCosine}, {"quadratic", PotentialKind::Quadratic}};
    evolve->add_option("--potential", evolve_options.potential, "grid-solver potential")
        ->transform(CLI::CheckedTransformer(potential_names));
    evolve->add_option("--grid", evolve_options.grid_points, "interior grid points")
        ->check(CLI::Range(64, 1 << 20))
        ->capture_default_str();
    evolve->add_option("--dt", evolve_options.dt, "time step [s]; defaults to the stable bound");
    evolve->add_option("--snapshots", evolve_options.snapshots, "snapshot count")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    evolve->add_option("--theta-points", evolve_options.theta_points,
                       "angles for density-vs-time curves");
    evolve->add_option("--t-samples", evolve_options.t_samples, "curve time samples")
        ->check(CLI::Range(3, 100000))
        ->capture_default_str();

    CommonOptions validate_common;
    ValidateOptions validate_options;
    auto* validate = app.add_subcommand("validate", "cross-validate against the grid solver");
    add_common_options(validate, validate_common);
    validate->add_option("--grid", validate_options.grid_points, "interior grid points")
        ->check(CLI::Range(64, 1 << 20))
        ->capture_default_str();
    validate->add_option("--dt", validate_options.dt, "time step override [s]");
    validate->add_option("--tol-cosine", validate_options.tolerance_cosine,
                         "tolerance for the full cosine potential")
        ->capture_default_str();
    validate->add_option("--tol-quadratic", validate_options.tolerance_quadratic,
                         "tolerance for the quadratic potential")
        ->capture_default_str();

    CommonOptions sweep_common;
    SweepOptions sweep_options;
    auto* sweep = app.add_subcommand("sweep", "sweep sigma, omega or hbar");
    add_common_options(sweep, sweep_common);
    sweep->add_option("--variable", sweep_options.variable, "swept variable")
        ->check(CLI::IsMember({"sigma", "omega", "hbar"}))
        ->capture_default_str();
    sweep->add_option("--from", sweep_options.from, "first value")->capture_default_str();
    sweep->add_option("--to", sweep_options.to, "last value")->capture_default_str();
    sweep->add_option("--points", sweep_options.points, "number of points")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    sweep->add_option("--scale", sweep_options.scale, "spacing of the points")
        ->check(CLI::IsMember({"log", "linear"}))
        ->capture_default_str();
    sweep->add_flag("--with-numeric", sweep_options.with_numeric,
                    "also run the grid solver per point");
    sweep->add_option("--potential", sweep_options.potential, "grid-solver potential")
        ->transform(CLI::CheckedTransformer(potential_names));
    sweep->add_option("--grid", sweep_options.grid_points, "grid points for --with-numeric")
        ->check(CLI::Range(64, 1 << 20))
        ->capture_default_str();
    sweep->add_option("--jobs", sweep_options.jobs, "parallel sweep workers")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(tiptime)) return cmd_tiptime(tiptime_common);
        if (app.got_subcommand(evolve)) return cmd_evolve(evolve_common, evolve_options);
        if (app.got_subcommand(validate)) return cmd_validate(validate_common, validate_options);
        if (app.got_subcommand(sweep)) return cmd_sweep(sweep_common, sweep_options);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const ValidityError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
