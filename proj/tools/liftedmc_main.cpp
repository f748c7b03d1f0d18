#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "liftedmc/bounds.hpp"
#include "liftedmc/errors.hpp"
#include "liftedmc/exact.hpp"
#include "liftedmc/experiments.hpp"
#include "liftedmc/json_io.hpp"
#include "liftedmc/path_oracle.hpp"
#include "liftedmc/sampler.hpp"
#include "liftedmc/verify.hpp"

namespace {

using namespace liftedmc;

struct DistOptions {
    std::string family = "uniform";
    long n = 5;
    std::vector<std::string> params;
    std::string weights;
    std::string spec_file;

    DistributionSpec to_spec() const {
        if (!spec_file.empty()) {
            std::ifstream in(spec_file);
            if (!in) throw InvalidParamError("cannot open " + spec_file);
            json j = json::parse(in);
            return DistributionSpec::from_json(j);
        }
        DistributionSpec spec;
        if (!weights.empty()) {
            std::vector<Real> w;
            std::stringstream ss(weights);
            std::string item;
            while (std::getline(ss, item, ',')) {
                w.push_back(std::stod(item));
            }
            spec.weights = w;
            spec.n = static_cast<Index>(w.size());
            return spec;
        }
        spec.family = family;
        spec.n = n;
        for (const std::string& kv : params) {
            const auto pos = kv.find('=');
            if (pos == std::string::npos) {
                throw InvalidParamError("--param expects key=value, got " + kv);
            }
            spec.params[kv.substr(0, pos)] = std::stod(kv.substr(pos + 1));
        }
        return spec;
    }
};

void add_dist_options(CLI::App* cmd, DistOptions& opts) {
    cmd->add_option("--family", opts.family,
                    "uniform | symmetric-tent | asymmetric-tent | "
                    "geometric-peak | plateau");
    cmd->add_option("--n", opts.n, "number of line states");
    cmd->add_option("--param", opts.params,
                    "family parameter key=value (repeatable)");
    cmd->add_option("--weights", opts.weights, "comma-separated weight list");
    cmd->add_option("--spec", opts.spec_file, "distribution spec JSON file");
}

std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("LIFTEDMC_OUT_DIR")) {
            return std::filesystem::path(dir) / p;
        }
    }
    return p;
}

void write_file(const std::string& path, const std::string& content) {
    const auto full = resolve_out(path);
    if (full.has_parent_path()) {
        std::filesystem::create_directories(full.parent_path());
    }
    std::ofstream out(full);
    if (!out) throw InvalidParamError("cannot write " + full.string());
    out << content;
}

TransitionKernel build_kernel(const std::string& sampler, const Vector& pi,
                              const ThetaSpec& theta) {
    if (sampler == "metropolis") return metropolis_kernel(pi);
    if (sampler == "dhn") return dhn_kernel(pi, theta.resolve(pi.size()));
    throw InvalidParamError("sampler must be 'metropolis' or 'dhn'");
}

int run_cli(int argc, char** argv) {
    CLI::App app{
        "Metropolis and lifted (Diaconis-Holmes-Neal) samplers on path "
        "graphs: exact mixing analysis, simulation, path oracles, and "
        "convergence-bound evaluation"};
    app.require_subcommand(1);

    // kernel dump
    auto* kernel_cmd = app.add_subcommand("kernel", "kernel operations");
    auto* dump_cmd = kernel_cmd->add_subcommand("dump", "emit kernel as JSON");
    DistOptions kernel_dist;
    std::string kernel_theta = "1/n";
    std::string kernel_sampler = "dhn";
    std::string kernel_out;
    add_dist_options(dump_cmd, kernel_dist);
    dump_cmd->add_option("--theta", kernel_theta, "theta value or '1/n'");
    dump_cmd->add_option("--sampler", kernel_sampler, "dhn | metropolis");
    dump_cmd->add_option("--out", kernel_out, "output file (default stdout)");
    kernel_cmd->require_subcommand(1);

    // stationary
    auto* stat_cmd = app.add_subcommand(
        "stationary", "print || pi~ P - pi~ ||_1 for the lifted kernel");
    DistOptions stat_dist;
    std::string stat_theta = "1/n";
    std::string stat_sampler = "dhn";
    add_dist_options(stat_cmd, stat_dist);
    stat_cmd->add_option("--theta", stat_theta, "theta value or '1/n'");
    stat_cmd->add_option("--sampler", stat_sampler, "dhn | metropolis");

    // mix
    auto* mix_cmd =
        app.add_subcommand("mix", "exact mixing time and d(t) curve");
    DistOptions mix_dist;
    std::string mix_theta = "1/n";
    std::string mix_sampler = "dhn";
    double mix_delta = 0.25;
    long mix_cap = 0;
    std::string mix_json_out, mix_csv_out;
    add_dist_options(mix_cmd, mix_dist);
    mix_cmd->add_option("--theta", mix_theta, "theta value or '1/n'");
    mix_cmd->add_option("--sampler", mix_sampler, "dhn | metropolis");
    mix_cmd->add_option("--delta", mix_delta, "TV threshold (default 0.25)");
    mix_cmd->add_option("--t-cap", mix_cap,
                        "step cap (default 200n for dhn, 200n^2 otherwise)");
    mix_cmd->add_option("--out-json", mix_json_out, "report file");
    mix_cmd->add_option("--out-csv", mix_csv_out, "curve file (t,d_t)");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "seeded chain simulation");
    DistOptions sim_dist;
    std::string sim_theta = "1/n";
    std::string sim_sampler = "dhn";
    long sim_steps = 100000;
    std::uint64_t sim_seed = 1;
    long sim_excursions = 0;
    std::string sim_json_out, sim_csv_out;
    add_dist_options(sim_cmd, sim_dist);
    sim_cmd->add_option("--theta", sim_theta, "theta value or '1/n'");
    sim_cmd->add_option("--sampler", sim_sampler, "dhn | metropolis");
    sim_cmd->add_option("--steps", sim_steps, "number of steps");
    sim_cmd->add_option("--seed", sim_seed, "64-bit seed");
    sim_cmd->add_option("--excursions", sim_excursions,
                        "also simulate this many basepoint excursions");
    sim_cmd->add_option("--out-json", sim_json_out, "summary file");
    sim_cmd->add_option("--out-csv", sim_csv_out, "occupancy file");

    // paths verify
    auto* paths_cmd = app.add_subcommand("paths", "path oracle operations");
    auto* pverify_cmd = paths_cmd->add_subcommand(
        "verify", "run the exhaustive path-oracle checks");
    DistOptions paths_dist;
    std::string paths_theta = "1/n";
    long paths_len = 6;
    std::uint64_t paths_budget = 50000000;
    std::string paths_out;
    add_dist_options(pverify_cmd, paths_dist);
    pverify_cmd->add_option("--theta", paths_theta, "theta value or '1/n'");
    pverify_cmd->add_option("--length", paths_len,
                            "enumeration length (default 6)");
    pverify_cmd->add_option("--budget", paths_budget, "node budget");
    pverify_cmd->add_option("--out", paths_out, "report file");
    paths_cmd->require_subcommand(1);

    // bounds
    auto* bounds_cmd = app.add_subcommand(
        "bounds", "evaluate the occurrence/rho/TV bound formulas");
    std::string bounds_in, bounds_out;
    bounds_cmd->add_option("--input", bounds_in,
                           "JSON file {params:{...}, distribution:{...}, j:int}"
                           " (default stdin)");
    bounds_cmd->add_option("--out", bounds_out, "output file (default stdout)");

    // scaling
    auto* scale_cmd =
        app.add_subcommand("scaling", "mixing-time scaling study");
    DistOptions scale_dist;
    std::string scale_theta = "1/n";
    std::string scale_sampler = "dhn";
    double scale_delta = 0.25;
    long scale_min = 11, scale_max = 41;
    std::string scale_json_out, scale_csv_out;
    add_dist_options(scale_cmd, scale_dist);
    scale_cmd->add_option("--theta", scale_theta, "theta value or '1/n'");
    scale_cmd->add_option("--sampler", scale_sampler, "dhn | metropolis");
    scale_cmd->add_option("--delta", scale_delta, "TV threshold");
    scale_cmd->add_option("--n-min", scale_min, "smallest odd n");
    scale_cmd->add_option("--n-max", scale_max, "largest odd n");
    scale_cmd->add_option("--out-json", scale_json_out, "fit summary file");
    scale_cmd->add_option("--out-csv", scale_csv_out,
                          "points file (family,sampler,n,t_mix)");

    // verify-all
    auto* verify_cmd = app.add_subcommand(
        "verify-all", "run every invariant suite, machine-readable JSON");
    DistOptions verify_dist;
    std::string verify_theta = "1/n";
    std::uint64_t verify_seed = 1;
    std::string verify_out;
    add_dist_options(verify_cmd, verify_dist);
    verify_cmd->add_option("--theta", verify_theta, "theta value or '1/n'");
    verify_cmd->add_option("--seed", verify_seed, "64-bit seed");
    verify_cmd->add_option("--out", verify_out, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }

    if (dump_cmd->parsed()) {
        const UnimodalWeights w = kernel_dist.to_spec().build();
        const Vector pi = normalize(w);
        const TransitionKernel k =
            build_kernel(kernel_sampler, pi, ThetaSpec::parse(kernel_theta));
        const std::string text = kernel_to_json(k).dump(2) + "\n";
        if (kernel_out.empty()) {
            std::cout << text;
        } else {
            write_file(kernel_out, text);
        }
        return 0;
    }

    if (stat_cmd->parsed()) {
        const UnimodalWeights w = stat_dist.to_spec().build();
        const Vector pi = normalize(w);
        const TransitionKernel k =
            build_kernel(stat_sampler, pi, ThetaSpec::parse(stat_theta));
        const Vector target =
            k.label() == KernelLabel::Dhn ? lifted_stationary(pi) : pi;
        const Real err = (evolve(k, target, 1) - target).lpNorm<1>();
        std::cout << json(err).dump() << "\n";
        return err < kProbTol ? 0 : 1;
    }

    if (mix_cmd->parsed()) {
        const UnimodalWeights w = mix_dist.to_spec().build();
        const Vector pi = normalize(w);
        const TransitionKernel k =
            build_kernel(mix_sampler, pi, ThetaSpec::parse(mix_theta));
        const Vector target =
            k.label() == KernelLabel::Dhn ? lifted_stationary(pi) : pi;
        const long cap = mix_cap > 0 ? mix_cap
                         : k.label() == KernelLabel::Dhn
                             ? 200 * w.n()
                             : 200 * w.n() * w.n();
        const MixingReport report = mixing_time(k, target, mix_delta, cap);
        const std::string text = mixing_report_to_json(report).dump(2) + "\n";
        if (mix_json_out.empty()) {
            std::cout << text;
        } else {
            write_file(mix_json_out, text);
        }
        if (!mix_csv_out.empty()) write_file(mix_csv_out, curve_to_csv(report));
        return 0;
    }

    if (sim_cmd->parsed()) {
        const DistributionSpec spec = sim_dist.to_spec();
        const UnimodalWeights w = spec.build();
        const Vector pi = normalize(w);
        const ThetaSpec theta_spec = ThetaSpec::parse(sim_theta);
        const TransitionKernel k = build_kernel(sim_sampler, pi, theta_spec);
        const Vector target =
            k.label() == KernelLabel::Dhn ? lifted_stationary(pi) : pi;
        const Index start = k.label() == KernelLabel::Dhn
                                ? lifted_index(basepoint(w), w.n())
                                : w.mode_index() - 1;
        const ChainRun result = run(k, start, sim_steps, sim_seed);
        json summary = chain_run_to_json(result, k);
        summary["empirical_tv"] = empirical_tv(result, target);
        summary["distribution"] = spec.to_json();
        summary["theta"] = theta_spec.str();
        if (sim_excursions > 0 && k.label() == KernelLabel::Dhn) {
            summary["excursions"] = excursion_stats_to_json(
                excursions(k, start, sim_excursions, sim_seed));
        }
        const std::string text = summary.dump(2) + "\n";
        if (sim_json_out.empty()) {
            std::cout << text;
        } else {
            write_file(sim_json_out, text);
        }
        if (!sim_csv_out.empty()) {
            write_file(sim_csv_out, occupancy_to_csv(result, k));
        }
        return 0;
    }

    if (pverify_cmd->parsed()) {
        const UnimodalWeights w = paths_dist.to_spec().build();
        const Index n = w.n();
        const Vector pi = normalize(w);
        const ThetaSpec theta_spec = ThetaSpec::parse(paths_theta);
        const TransitionKernel k = dhn_kernel(pi, theta_spec.resolve(n));
        const Index bp = lifted_index(basepoint(w), n);
        json report;
        bool all = true;

        // Enumeration totals equal dense matrix-power entries.
        {
            const long len = std::min<long>(paths_len, 8);
            Matrix power = Matrix::Identity(2 * n, 2 * n);
            const Matrix dense = k.dense();
            for (long l = 0; l < len; ++l) power = power * dense;
            Real worst = 0;
            for (Index y = 0; y < 2 * n; ++y) {
                for (Index jp = 0; jp < 2 * n; ++jp) {
                    const PathEnumeration e =
                        enumerate_paths(k, y, jp, len, paths_budget);
                    worst = std::max(
                        worst, std::abs(e.total_probability - power(y, jp)));
                }
            }
            const bool pass = worst < kProbTol;
            report["enumeration_matches_power"] =
                json{{"pass", pass}, {"length", len}, {"max_error", worst}};
            all = all && pass;
        }
        // Flip-law bounds and the two zero-flip routes.
        {
            const FlipLaw law = flip_law_exact(k, bp, 50 * n);
            const Real nn = static_cast<Real>(n);
            const Real b0 = std::pow((nn - 1) / nn, 2 * nn);
            const Real b1 = std::pow((nn - 1) / nn,
                                     4 * nn - 2 * w.mode_index() - 2) /
                            nn;
            const Real two_route = no_flip_return_probability(k, bp);
            const bool pass0 = law.p(0) >= b0 * (1 - kProbTol);
            const bool pass1 = law.p(1) >= b1 * (1 - kProbTol);
            const bool agree = std::abs(two_route - law.p(0)) < kProbTol;
            report["zero_flip_bound"] = json{{"pass", pass0},
                                             {"exact", law.p(0)},
                                             {"bound", b0},
                                             {"slack", law.p(0) - b0}};
            report["one_flip_bound"] = json{{"pass", pass1},
                                            {"exact", law.p(1)},
                                            {"bound", b1},
                                            {"slack", law.p(1) - b1}};
            report["zero_flip_two_routes"] =
                json{{"pass", agree},
                     {"difference", two_route - law.p(0)}};
            all = all && pass0 && pass1 && agree;
        }
        // Conditional shortening sweep.
        if (n <= 9) {
            long tested = 0, empty = 0, violations = 0;
            Real min_gap = 2;
            for (long k0 = 2; k0 <= 2 * n; ++k0) {
                for (long kf = 1; kf < k0; ++kf) {
                    for (Index kp = 1;
                         kp <= std::min<Index>(w.mode_index() + 1, n); ++kp) {
                        try {
                            const ShorteningCheck c =
                                conditional_shortening_check(k, bp, kf, k0, kp,
                                                             paths_budget);
                            ++tested;
                            min_gap = std::min(
                                min_gap,
                                std::min(c.p_l2_given_a2_jump,
                                         c.p_l2_given_a2_any) -
                                    c.p_l1_given_a1);
                            if (c.p_l1_given_a1 >
                                    c.p_l2_given_a2_jump + kProbTol ||
                                c.p_l1_given_a1 >
                                    c.p_l2_given_a2_any + kProbTol) {
                                ++violations;
                            }
                        } catch (const EmptyConditioningEventError&) {
                            ++empty;
                        }
                    }
                }
            }
            const bool pass = violations == 0 && tested > 0;
            report["conditional_shortening"] = json{{"pass", pass},
                                                    {"tested", tested},
                                                    {"empty", empty},
                                                    {"violations", violations},
                                                    {"min_gap", min_gap}};
            all = all && pass;
        }
        report["passed"] = all;
        const std::string text = report.dump(2) + "\n";
        if (paths_out.empty()) {
            std::cout << text;
        } else {
            write_file(paths_out, text);
        }
        return all ? 0 : 1;
    }

    if (bounds_cmd->parsed()) {
        json input;
        if (bounds_in.empty()) {
            input = json::parse(std::cin);
        } else {
            std::ifstream in(bounds_in);
            if (!in) throw InvalidParamError("cannot open " + bounds_in);
            input = json::parse(in);
        }
        const DistributionSpec spec =
            DistributionSpec::from_json(input.at("distribution"));
        const UnimodalWeights w = spec.build();
        const json& pj = input.at("params");
        BoundParams p;
        p.c = pj.value("c", 1.0);
        p.c_prime = pj.value("c_prime", p.c);
        p.f1 = pj.value("f1", 0);
        p.f2 = pj.value("f2", 0);
        p.f_tilde = pj.value("f_tilde", 2.0);
        p.c_tilde_tilde = pj.value("c_tilde_tilde", 1.0);
        if (pj.contains("d_double_star")) {
            p.d_double_star = pj.at("d_double_star").get<Index>();
        } else {
            p.d_double_star = shortening_radii(w).d_double_star;
        }
        if (pj.contains("c_hat")) {
            p.c_hat = pj.at("c_hat").get<Real>();
        } else {
            p = BoundParams::with_derived_c_hat(p);
        }
        const Index j = input.value("j", w.mode_index());

        const OccurrenceBreakdown b = occurrence_lower_bound(p, w, j);
        json out;
        out["distribution"] = spec.to_json();
        out["params"] = json{{"c", p.c},
                             {"c_prime", p.c_prime},
                             {"f1", p.f1},
                             {"f2", p.f2},
                             {"f_tilde", p.f_tilde},
                             {"c_tilde_tilde", p.c_tilde_tilde},
                             {"c_hat", p.c_hat},
                             {"d_double_star", p.d_double_star}};
        out["j"] = j;
        out["occurrence"] = json{{"prefactor", b.prefactor},
                                 {"exact_length_scale", b.path_scale},
                                 {"binom_f1", b.binom_f1},
                                 {"binom_f2", b.binom_f2},
                                 {"flip_factor", b.flip_factor},
                                 {"survival_factor", b.survival_factor},
                                 {"survival_exponent", b.exponent},
                                 {"value", b.value}};
        const ComponentBounds comp = component_bounds(w, j, p.c, p.f1);
        out["components"] = json{{"first", comp.first_component},
                                 {"third", comp.third_component},
                                 {"flip_binomial", comp.flip_binomial}};
        try {
            const Real rho = rho_bound(p, w.n());
            out["rho_bound"] = rho;
            out["tv_upper_bound"] = tv_upper_bound(p, w.n());
        } catch (const RhoOutOfRangeError& e) {
            out["rho_bound_error"] = e.what();
        }
        out["limit_rho"] = 1.0 - (p.c_hat > 0 ? p.c_hat : p.derived_c_hat()) *
                                     std::exp(-p.c);
        const std::string text = out.dump(2) + "\n";
        if (bounds_out.empty()) {
            std::cout << text;
        } else {
            write_file(bounds_out, text);
        }
        return 0;
    }

    if (scale_cmd->parsed()) {
        const DistributionSpec spec = scale_dist.to_spec();
        std::vector<Index> grid;
        for (long v = scale_min % 2 == 0 ? scale_min + 1 : scale_min;
             v <= scale_max; v += 2) {
            grid.push_back(v);
        }
        const ScalingResult result = scaling_study(
            spec.family ? *spec.family : "uniform", scale_sampler, grid,
            scale_delta, spec.params, ThetaSpec::parse(scale_theta));
        const std::string text = scaling_result_to_json(result).dump(2) + "\n";
        if (scale_json_out.empty()) {
            std::cout << text;
        } else {
            write_file(scale_json_out, text);
        }
        if (!scale_csv_out.empty()) {
            write_file(scale_csv_out, scaling_points_to_csv({result}));
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        VerifyOptions opts;
        opts.dist = verify_dist.to_spec();
        opts.theta = ThetaSpec::parse(verify_theta);
        opts.seed = verify_seed;
        const json report = verify_all(opts);
        const std::string text = report.dump(2) + "\n";
        if (verify_out.empty()) {
            std::cout << text;
        } else {
            write_file(verify_out, text);
        }
        return report.at("passed").get<bool>() ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const liftedmc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
