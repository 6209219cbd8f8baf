#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "homtrace/report.hpp"

using namespace homtrace;

namespace {

uint64_t default_budget() {
    if (const char* env = std::getenv("HOMTRACE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed HOMTRACE_BUDGET='" << env << "'\n";
    }
    return 100'000'000;
}

struct CliArgs {
    RunConfig cfg;
    std::string variant = "d2";
    std::string modulus;
    std::optional<uint64_t> nprime;
};

void add_code_params(CLI::App* sub, CliArgs& a) {
    sub->add_option("--p", a.cfg.p, "characteristic (prime)");
    sub->add_option("--m", a.cfg.m, "field extension degree");
    sub->add_option("--k", a.cfg.k, "nilpotency index of u");
    sub->add_option("--variant", a.variant, "defining set: d1, d2 or d3")
        ->check(CLI::IsMember({"d1", "d2", "d3"}));
    sub->add_option("--nprime", a.nprime, "divisor N' of q-1 (d3 only)");
    sub->add_option("--modulus", a.modulus,
                    "field modulus coefficients, low degree first, e.g. 1,0,1");
}

void add_enum_params(CLI::App* sub, CliArgs& a) {
    sub->add_option("--workers", a.cfg.workers, "enumeration threads");
    sub->add_option("--budget", a.cfg.budget,
                    "codeword-symbol operation cap (also HOMTRACE_BUDGET)");
}

int dispatch(const CLI::App& app, CliArgs& a) {
    a.cfg.variant = parse_variant(a.variant);
    a.cfg.nprime = a.nprime;
    if (!a.modulus.empty()) a.cfg.modulus = parse_poly(a.modulus, a.cfg.p);

    if (app.got_subcommand("wdist")) return run_wdist(a.cfg, std::cout);
    if (app.got_subcommand("predict")) return run_predict(a.cfg, std::cout);
    if (app.got_subcommand("verify")) return run_verify(a.cfg, std::cout);
    if (app.got_subcommand("dual-distance")) return run_dual_distance(a.cfg, std::cout);
    if (app.got_subcommand("gauss-sum")) return run_gauss_sum(a.cfg, std::cout);
    if (app.got_subcommand("dump-defining-set")) return run_dump_defining_set(a.cfg, std::cout);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Trace codes over F_p[u]/(u^k): exact homogeneous weight distributions,\n"
        "closed-form predictions, and structural verification"};
    app.require_subcommand(1);

    CliArgs a;
    a.cfg.budget = default_budget();

    CLI::App* wdist = app.add_subcommand("wdist", "enumerate the weight distribution");
    add_code_params(wdist, a);
    add_enum_params(wdist, a);
    wdist->add_flag("--csv", a.cfg.csv, "emit weight,frequency lines instead of JSON");

    CLI::App* predict = app.add_subcommand("predict", "closed-form weight distribution");
    add_code_params(predict, a);

    CLI::App* verify =
        app.add_subcommand("verify", "enumerate, predict and check the structural claims");
    add_code_params(verify, a);
    add_enum_params(verify, a);
    verify->add_flag("--action", a.cfg.with_action,
                     "also test the unit-multiplication permutation action (d1/d2)");

    CLI::App* dual = app.add_subcommand("dual-distance",
                                        "certify the dual minimum homogeneous distance");
    add_code_params(dual, a);

    CLI::App* gauss = app.add_subcommand("gauss-sum", "exact vs numeric quadratic Gauss sum");
    gauss->add_option("--p", a.cfg.p, "characteristic (prime)");
    gauss->add_option("--m", a.cfg.m, "field extension degree");
    gauss->add_option("--modulus", a.modulus,
                      "field modulus coefficients, low degree first");
    gauss->add_option("--budget", a.cfg.budget, "cap on q (number of summed terms)");

    CLI::App* dump = app.add_subcommand("dump-defining-set", "list the defining set elements");
    add_code_params(dump, a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return dispatch(app, a);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
