#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "minadet/runner.hpp"

namespace {

void add_common_options(CLI::App* cmd, minadet::RunConfig& cfg) {
    cmd->add_option("--series", cfg.series,
                    "series expression, e.g. \"(exp(x)-1)/x\" (repeatable where two are needed)");
    cmd->add_option("--expset", cfg.expset, "exponent set, e.g. \"0,1,4,9\"");
    cmd->add_option("-n,--n", cfg.n, "matrix order (or maximum order for random suites)");
    cmd->add_option("--z", cfg.z, "rational z, or the literal \"z\" for a symbolic run");
    cmd->add_option("--seed", cfg.seed, "seed for the deterministic random case stream");
    cmd->add_option("--format", cfg.format, "output format: text or json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "minadet: exact determinant identities of coefficient matrices of formal power series"};
    app.require_subcommand(1);

    minadet::RunConfig cfg;
    if (const char* env = std::getenv("MINADET_FORMAT")) cfg.format = env;

    std::string identity = "all";

    CLI::App* verify = app.add_subcommand("verify", "run identity verifiers, one report per case");
    verify->add_option("--identity", identity, "identity id(s), comma separated, or \"all\"");
    add_common_options(verify, cfg);
    verify->add_option("--xs", cfg.xs, "evaluation nodes, comma separated rationals");
    verify->add_option("--ms", cfg.ms, "integer exponents, comma separated");
    verify->add_option("--t", cfg.t_point, "evaluation point (rational)");
    CLI::Option* cases_opt =
        verify->add_option("--cases", cfg.cases, "random cases per identity (forces random mode)");
    verify->add_flag("--oracle", cfg.oracle,
                     "cross-check each small determinant by cofactor expansion");
    verify->add_option("--jobs", cfg.jobs, "worker threads (output order stays deterministic)");
    verify->add_flag("--timings", cfg.timings,
                     "include wall-clock timings (off by default so output is reproducible)");

    CLI::App* table = app.add_subcommand("table", "print the coefficient matrix for a series");
    add_common_options(table, cfg);

    CLI::App* bench = app.add_subcommand("bench",
                                         "time Bareiss against the triangularization shortcut");
    add_common_options(bench, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify)) {
            cfg.cases_given = cases_opt->count() > 0;
            cfg.identities.clear();
            size_t start = 0;
            while (start <= identity.size()) {
                size_t comma = identity.find(',', start);
                std::string id = comma == std::string::npos ? identity.substr(start)
                                                            : identity.substr(start, comma - start);
                if (!id.empty()) cfg.identities.push_back(id);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            minadet::RunResult res = minadet::run_verify(cfg);
            std::cout << (cfg.format == "json" ? minadet::render_verify_json(cfg, res)
                                               : minadet::render_verify_text(cfg, res));
            return res.failed == 0 ? 0 : std::min(res.failed, 250);
        }
        if (app.got_subcommand(table)) {
            std::cout << minadet::run_table(cfg);
            return 0;
        }
        bool agree = true;
        std::cout << minadet::run_bench(cfg, &agree);
        if (!agree) std::cerr << "bench: determinant paths disagree\n";
        return agree ? 0 : 1;
    } catch (const minadet::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
