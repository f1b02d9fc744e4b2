// Command-line front end. Every subcommand reads a JSON config, calls the
// library, and writes a JSON report (plus CSV curves where relevant) into
// the output directory.
//
// Exit codes: 0 completed, 1 input error, 2 inconclusive verdict,
// 3 verification suite failed.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "syl/axioms.hpp"
#include "syl/report.hpp"
#include "syl/sampling.hpp"
#include "syl/shooting.hpp"
#include "syl/suites.hpp"
#include "syl/symfn.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace syl;
using namespace syl::report;

namespace {

enum Exit { kOk = 0, kInputError = 1, kInconclusive = 2, kVerifyFailed = 3 };

struct Context {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = suites::kDefaultSeed;
    std::optional<double> tol;
    std::string suite;
    json config = json::object();
};

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("malformed JSON in ") + path + ": " + e.what());
    }
}

void write_text(const Context& ctx, const std::string& name, const std::string& text) {
    fs::create_directories(ctx.out_dir);
    std::ofstream out(fs::path(ctx.out_dir) / name);
    if (!out) throw std::runtime_error("cannot write " + name);
    out << text;
}

int emit(const Context& ctx, const std::string& command, json body, int code) {
    json doc = {{"command", command}, {"seed", ctx.seed}, {"config", ctx.config}, {"result", std::move(body)}};
    const std::string text = doc.dump(2) + "\n";
    write_text(ctx, command + ".json", text);
    std::cout << text;
    return code;
}

ShootingOptions shooting_options(const Context& ctx, const json& cfg) {
    ShootingOptions opt;
    opt.root_tol = ctx.tol.value_or(optional(cfg, "tol", opt.root_tol));
    return opt;
}

int cmd_solve_annulus(const Context& ctx) {
    const json& c = ctx.config;
    expect_keys(c, {"n", "k", "R", "c1", "c2", "scan", "tol"}, "solve-annulus");
    const AnnulusProblem p(required<int>(c, "n"), required<int>(c, "k"), required<double>(c, "R"),
                           optional(c, "c1", 0.0), optional(c, "c2", 0.0));
    const auto res = solve_annulus(p, read_scan(c, p.n, p.k), shooting_options(ctx, c));

    std::ostringstream scan;
    scan << "xi0,termination,residual\n" << std::setprecision(17);
    for (const auto& g : res.grid) scan << g.xi0 << ',' << to_string(g.termination) << ',' << g.residual << '\n';
    write_text(ctx, "scan.csv", scan.str());
    json body = to_json(res);
    for (std::size_t i = 0; i < res.solutions.size(); ++i) {
        std::ostringstream csv;
        write_trajectory_csv(csv, reconstruct(res.solutions[i].trajectory));
        const std::string name = "solution_" + std::to_string(i) + ".csv";
        write_text(ctx, name, csv.str());
        body["solutions"][i]["trajectory_csv"] = name;
    }
    return emit(ctx, "solve_annulus", body, res.status == ShootingStatus::inconclusive ? kInconclusive : kOk);
}

int cmd_rstar(const Context& ctx) {
    const json& c = ctx.config;
    expect_keys(c, {"n", "k", "c1", "c2", "R_max", "rel_tol", "scan", "tol"}, "rstar");
    const int n = required<int>(c, "n"), k = required<int>(c, "k");
    ThresholdOptions opt;
    opt.shooting = shooting_options(ctx, c);
    opt.R_max = optional(c, "R_max", opt.R_max);
    opt.rel_tol = optional(c, "rel_tol", opt.rel_tol);
    if (c.contains("scan")) opt.scan = read_scan(c, n, k);
    const auto t = find_r_star(n, k, required<double>(c, "c1"), required<double>(c, "c2"), opt);
    return emit(ctx, "rstar", to_json(t), t.status == ThresholdStatus::resolved ? kOk : kInconclusive);
}

int cmd_counterexample(const Context& ctx) {
    const json& c = ctx.config;
    expect_keys(c, {"n", "k", "c", "eps", "eps_range", "delta"}, "counterexample");
    std::vector<double> eps;
    if (c.contains("eps")) {
        eps = required<std::vector<double>>(c, "eps");
    } else {
        const json r = c.contains("eps_range") ? c.at("eps_range") : json{{"lo", 1e-4}, {"hi", 1e-2}, {"count", 9}};
        expect_keys(r, {"lo", "hi", "count"}, "eps_range");
        eps = log_spaced(required<double>(r, "lo"), required<double>(r, "hi"), required<std::size_t>(r, "count"));
    }
    const auto tab = counterexample_sweep(required<int>(c, "n"), required<int>(c, "k"), required<double>(c, "c"), eps,
                                          optional(c, "delta", 0.05));
    std::ostringstream csv;
    csv << "eps,xi0,xi_t0,xi_tt0,T,stopped_by,sup_u_inv_u_grad_u,hessian_norm_at_1\n" << std::setprecision(17);
    for (const auto& r : tab.rows)
        csv << r.eps << ',' << r.xi0 << ',' << r.xi_t0 << ',' << r.xi_tt0 << ',' << r.T << ',' << r.stopped_by << ','
            << r.c1_norm << ',' << r.hessian_at_1 << '\n';
    write_text(ctx, "counterexample.csv", csv.str());
    return emit(ctx, "counterexample", to_json(tab), kOk);
}

int cmd_cylinder(const Context& ctx) {
    const json& c = ctx.config;
    expect_keys(c, {"n", "k"}, "cylinder");
    const int n = required<int>(c, "n"), k = required<int>(c, "k");
    const auto cyl = cylinder_solution(n, k);
    return emit(ctx, "cylinder",
                {{"n", n},
                 {"k", k},
                 {"xi_cyl", cyl.xi},
                 {"scale", cyl.scale},
                 {"sigma_residual", cyl.sigma_residual},
                 {"bifurcation_threshold", bifurcation_threshold(n, k)}},
                kOk);
}

int cmd_cone_check(const Context& ctx) {
    const json& c = ctx.config;
    expect_keys(c, {"lambda", "k"}, "cone-check");
    const EigenvalueVector lam(required<std::vector<double>>(c, "lambda"));
    const int k = required<int>(c, "k");
    const ConeSpec cone(static_cast<int>(lam.size()), k);
    json sig = json::array();
    for (int l = 1; l <= k; ++l) sig.push_back(sigma_k(lam.values(), l));
    return emit(ctx, "cone_check", {{"k", k}, {"sorted_lambda", lam.values()}, {"sigma", sig},
                                    {"member", in_gamma_k(lam.values(), cone)}},
                kOk);
}

int cmd_build_f(const Context& ctx) {
    const json& c = ctx.config;
    expect_keys(c, {"n", "k", "alpha", "samples"}, "build-f");
    const int n = required<int>(c, "n"), k = required<int>(c, "k");
    const double alpha = optional(c, "alpha", 0.5);
    const auto h = builtin_defining_function(n, k);
    const auto f = build_concave_f(h, alpha);
    Rng rng(ctx.seed);
    const auto samples = sample_gamma_k(rng, n, k, optional<std::size_t>(c, "samples", 1000));
    AxiomTolerances tol;
    if (ctx.tol) tol.concavity = tol.euler = tol.delta = *ctx.tol;
    const auto rep = verify_axioms(f, samples, tol);
    json body = {{"defining_function", h.name},
                 {"n", n},
                 {"alpha", alpha},
                 {"delta", *f.delta},
                 {"quoted_delta", quoted_delta(h, alpha)},
                 {"min_relative_monotonicity", min_relative_monotonicity(f, samples)},
                 {"axioms", to_json(rep)}};
    return emit(ctx, "build_f", body, rep.all_passed() ? kOk : kVerifyFailed);
}

int cmd_verify(const Context& ctx) {
    const json& c = ctx.config;
    expect_keys(c, {"suite"}, "verify");
    std::vector<std::string> wanted;
    if (!ctx.suite.empty()) {
        wanted.push_back(ctx.suite);
    } else if (c.contains("suite")) {
        if (c.at("suite").is_array())
            wanted = required<std::vector<std::string>>(c, "suite");
        else
            wanted.push_back(required<std::string>(c, "suite"));
    } else {
        wanted.push_back("all");
    }
    json suites_out = json::array();
    bool all_ok = true;
    std::size_t matched = 0;
    for (const auto& e : suites::registry()) {
        const bool pick =
            std::any_of(wanted.begin(), wanted.end(), [&](const std::string& w) { return e.matches(w); });
        if (!pick) continue;
        ++matched;
        const auto r = suites::run_timed(e, ctx.seed);
        std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << e.id << " (" << r.seconds << " s)\n";
        all_ok = all_ok && r.passed;
        suites_out.push_back(to_json(r));
    }
    if (matched == 0) throw config_error("no suite matches the selector");
    return emit(ctx, "verify", {{"all_passed", all_ok}, {"suites", suites_out}}, all_ok ? kOk : kVerifyFailed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radial solver and property suites for sigma_k curvature problems"};
    app.require_subcommand(1);
    Context ctx;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", ctx.config_path, "JSON configuration file");
        sub->add_option("--out", ctx.out_dir, "Output directory")->capture_default_str();
        sub->add_option("--seed", ctx.seed, "Seed for randomized sweeps")->capture_default_str();
        sub->add_option("--tol", ctx.tol, "Override the solver or check tolerance");
        return sub;
    };

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Context&);
    };
    const Command commands[] = {
        {"solve-annulus", "All radial solutions of the annulus problem", cmd_solve_annulus},
        {"rstar", "Threshold radius for c1 + c2 < 0", cmd_rstar},
        {"counterexample", "Hessian blow-up family", cmd_counterexample},
        {"cylinder", "Cylinder solution and bifurcation radius", cmd_cylinder},
        {"cone-check", "Garding cone membership", cmd_cone_check},
        {"build-f", "Concave f from the builtin defining function", cmd_build_f},
        {"verify", "Run property suites", cmd_verify},
    };
    int (*selected)(const Context&) = nullptr;
    for (const auto& cmd : commands) {
        auto* sub = add_common(app.add_subcommand(cmd.name, cmd.help));
        if (std::string(cmd.name) == "verify") sub->add_option("--suite", ctx.suite, "Suite id, criterion number or all");
        sub->callback([&selected, run = cmd.run] { selected = run; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        ctx.config = load_config(ctx.config_path);
        return selected(ctx);
    } catch (const config_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
