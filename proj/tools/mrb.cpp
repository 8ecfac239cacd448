#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mrb/checks.hpp"
#include "mrb/session.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

mrb::KernelFamily load_kernels(const std::string& path, const mrb::DecorationSet& omega) {
    if (path.empty())
        return mrb::KernelFamily::ones(omega);
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open kernel file: " + path);
    mrb::json j = mrb::json::parse(in);
    mrb::KernelFamily k;
    for (auto& [name, poly] : j.items())
        k.kernels[name] = mrb::poly_from_json(poly);
    return k;
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("MRB_SEED"))
        return std::stoull(env);
    return cli_seed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for matching Rota-Baxter structures"};
    app.require_subcommand(1);

    std::string omega_csv = "a,b,c";
    std::string mode_name = "free";
    std::string base_name;
    std::string kernel_path;
    std::string expr_text;
    std::string suite_name;
    std::string solve_g;
    bool as_json = false;
    bool corrupt = false;
    int trials = 100;
    int cap = 5;
    std::uint64_t seed = 0;

    auto* eval = app.add_subcommand("eval", "evaluate an expression to canonical form");
    eval->add_option("--mode", mode_name, "free | relative | zinbiel | volterra");
    eval->add_option("--omega", omega_csv, "comma-separated decoration names");
    eval->add_option("--base", base_name, "base algebra name (relative mode)");
    eval->add_option("--kernels", kernel_path, "JSON kernel file (defaults to k == 1)");
    eval->add_flag("--json", as_json, "emit JSON instead of text");
    eval->add_option("expr", expr_text, "expression")->required();

    auto* check = app.add_subcommand("check", "run a randomized identity suite");
    check->add_option("suite", suite_name, "suite name, or 'all'")->required();
    check->add_option("--trials", trials, "number of random instances");
    check->add_option("--seed", seed, "RNG seed (MRB_SEED overrides)");
    check->add_option("--omega", omega_csv, "comma-separated decoration names");
    check->add_flag("--corrupt", corrupt, "negative control: corrupt the product under test");

    auto* solve = app.add_subcommand("solve", "Picard-solve u = g + sum_w I_w(u)");
    solve->add_option("--kernels", kernel_path, "JSON kernel file (defaults to k == 1)");
    solve->add_option("--cap", cap, "truncation degree");
    solve->add_option("--omega", omega_csv, "comma-separated decoration names");
    solve->add_flag("--json", as_json, "emit JSON instead of text");
    solve->add_option("g", solve_g, "inhomogeneity, a polynomial in x")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        mrb::DecorationSet omega(split_csv(omega_csv));

        if (eval->parsed()) {
            mrb::SessionConfig cfg;
            cfg.omega = omega;
            cfg.mode = mrb::parse_mode(mode_name);
            cfg.kernels = load_kernels(kernel_path, omega);
            if (!base_name.empty() && base_name != "volterra")
                throw std::invalid_argument("unknown base algebra: " + base_name);
            auto ast = mrb::parse_expression(expr_text);
            auto value = mrb::evaluate(cfg, *ast);
            if (as_json)
                std::cout << mrb::value_to_json(value).dump() << "\n";
            else
                std::cout << mrb::render_value(value) << "\n";
            return 0;
        }

        if (check->parsed()) {
            mrb::CheckOptions opt;
            opt.omega = omega;
            opt.trials = trials;
            opt.seed = effective_seed(seed);
            opt.corrupt = corrupt;
            std::vector<std::string> names =
                suite_name == "all" ? mrb::suite_names() : std::vector<std::string>{suite_name};
            bool ok = true;
            for (auto& name : names) {
                auto rep = mrb::run_suite(name, opt);
                if (rep.pass) {
                    std::cout << "PASS " << rep.suite << " (" << rep.trials << " trials)\n";
                } else {
                    ok = false;
                    std::cout << "FAIL " << rep.suite << "\n  counterexample: "
                              << rep.counterexample << "\n";
                }
            }
            return ok ? 0 : 1;
        }

        // solve
        mrb::SessionConfig cfg;
        cfg.omega = omega;
        cfg.mode = mrb::Mode::Volterra;
        cfg.kernels = load_kernels(kernel_path, omega);
        auto ast = mrb::parse_expression(solve_g);
        auto g = std::get<mrb::PolyFunction>(mrb::evaluate(cfg, *ast));
        std::map<std::string, mrb::Rational> coeffs;
        for (auto& w : omega.names())
            coeffs[w] = 1;
        auto u = mrb::picard_solve(g, coeffs, cfg.kernels, cap, 10 * (cap + 2));
        if (as_json)
            std::cout << mrb::poly_to_json(u).dump() << "\n";
        else
            std::cout << u.str() << "\n";
        return 0;
    } catch (const mrb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
