#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dofc/dof.hpp"
#include "dofc/jets.hpp"
#include "dofc/parse.hpp"
#include "dofc/report.hpp"

namespace {

constexpr long long kDefaultBudget = 1000000;

long long resolve_budget(long long cli_value, bool cli_given) {
    if (cli_given) return cli_value;
    if (const char* env = std::getenv("DOFCTL_BUDGET_GB")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw dofc::InvalidSystem("DOFCTL_BUDGET_GB is not an integer");
        }
    }
    return kDefaultBudget;
}

dofc::DiffSystem load(const std::string& path, bool keep_zero_rows) {
    dofc::DiffSystem sys = dofc::load_system_file(path);
    if (keep_zero_rows) sys.keep_zero_rows = true;
    dofc::validate(sys);
    return sys;
}

int run_analyze(const std::string& path, const std::string& method, int oracle_n,
                bool conjugate, bool as_json, bool keep_zero_rows, long long budget_limit) {
    auto t0 = std::chrono::steady_clock::now();
    dofc::DiffSystem sys = load(path, keep_zero_rows);
    dofc::Budget budget(budget_limit);
    dofc::Report rep;

    bool want_oracle = method == "oracle" || method == "all";
    if (method == "ext") {
        rep.ext_only_dof = dofc::dof_ext(sys, budget).dof;
    } else if (method != "oracle") {
        dofc::PipelineOptions opts;
        opts.conjugate = conjugate;
        opts.want_brst = (method == "brst" || method == "all");
        rep.pipe = dofc::dof_pipeline(sys, opts, budget);
    }
    if (want_oracle) {
        // jet counts realize the solution-space dimension only for systems in
        // involutive form; use the completed system when one was produced
        const dofc::DiffSystem& osys =
            (rep.pipe && rep.pipe->completed_system) ? *rep.pipe->completed_system : sys;
        std::vector<dofc::Vec> gauge;
        if (rep.pipe && !rep.pipe->completed_system) gauge = rep.pipe->ext.gauge_gens;
        else gauge = dofc::dof_ext(osys, budget).gauge_gens;
        dofc::OracleReport o;
        o.counts = dofc::jet_counts(osys, oracle_n, gauge);
        o.estimate = dofc::einstein_estimate(o.counts);
        if (sys.d >= 2 && oracle_n >= sys.d - 2) o.exact = dofc::oracle_dof(o.counts);
        rep.oracle = std::move(o);
    }
    rep.budget_used = budget.used;
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (as_json ? dofc::emit_json(rep, sys) : dofc::emit_text(rep, sys));
    return 0;
}

int run_check_involutive(const std::string& path, bool keep_zero_rows, long long budget_limit) {
    dofc::DiffSystem sys = load(path, keep_zero_rows);
    dofc::Budget budget(budget_limit);
    bool wi = dofc::is_weakly_involutive(sys, budget);
    bool dwi = wi && dofc::is_doubly_weakly_involutive(sys, budget);
    std::cout << "homogeneous: " << (dofc::is_homogeneous(sys) ? "yes" : "no") << "\n";
    std::cout << "weakly involutive: " << (wi ? "yes" : "no") << "\n";
    std::cout << "doubly weakly involutive: " << (dwi ? "yes" : "no") << "\n";
    return 0;
}

int run_complete(const std::string& path, bool keep_zero_rows, long long budget_limit) {
    dofc::DiffSystem sys = load(path, keep_zero_rows);
    dofc::Budget budget(budget_limit);
    std::cout << dofc::emit_dsl(dofc::groebner_completion(sys, budget));
    return 0;
}

int run_resolve(const std::string& path, bool keep_zero_rows, long long budget_limit) {
    dofc::DiffSystem sys = load(path, keep_zero_rows);
    dofc::Budget budget(budget_limit);
    dofc::DiffSystem target = sys;
    if (!dofc::is_homogeneous(sys)) {
        if (!dofc::is_doubly_weakly_involutive(sys, budget))
            throw dofc::InvalidSystem(
                "resolve requires a homogeneous or doubly weakly involutive system; "
                "run 'dofctl complete' first");
        target = dofc::symbol(sys);
    }
    dofc::TwoSidedComplex c = dofc::two_sided_complex(target, budget);
    auto table = [&](const char* name, const dofc::FreeResolution& res) {
        std::cout << name << " resolution (minimal), degrees per homological index:\n";
        auto b = dofc::betti_degrees(res);
        for (size_t k = 0; k < b.size(); ++k) {
            std::cout << "  F_" << k << ":";
            for (int j : b[k]) std::cout << " " << j;
            std::cout << "\n";
        }
    };
    table("V-side", c.v_part);
    table("W-side (dual grading)", c.w_part);
    std::cout << "Q_F(z) = " << c.qf.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dofctl: degree-of-freedom counting for linear constant-coefficient "
                 "PDE systems"};
    app.require_subcommand(1);

    std::string file, method = "all";
    int oracle_n = 10;
    bool conjugate = false, as_json = false, as_text = false, keep_zero_rows = false;
    long long budget_gb = kDefaultBudget;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "system description (.dofsys or .json)")->required();
        sub->add_flag("--keep-zero-rows", keep_zero_rows, "allow trivial 0 = 0 equations");
        sub->add_option("--budget-gb", budget_gb, "Groebner reduction-step budget");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "count degrees of freedom");
    add_common(analyze);
    analyze->add_option("--method", method, "ext|graded|brst|oracle|all")
        ->check(CLI::IsMember({"ext", "graded", "brst", "oracle", "all"}));
    analyze->add_option("--oracle-N", oracle_n, "jet truncation order for the oracle");
    analyze->add_flag("--conjugate", conjugate, "also analyze the Hermitian conjugate");
    analyze->add_flag("--json", as_json, "machine-readable JSON report");
    analyze->add_flag("--text", as_text, "human-readable report (default)");

    CLI::App* check = app.add_subcommand("check-involutive", "report involutivity flags");
    add_common(check);
    CLI::App* complete = app.add_subcommand("complete", "emit the Groebner completion as DSL");
    add_common(complete);
    CLI::App* resolve = app.add_subcommand("resolve", "emit the two-sided Betti tables");
    add_common(resolve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        long long budget = resolve_budget(budget_gb, active->count("--budget-gb") > 0);
        if (analyze->parsed())
            return run_analyze(file, method, oracle_n, conjugate, as_json && !as_text,
                               keep_zero_rows, budget);
        if (check->parsed()) return run_check_involutive(file, keep_zero_rows, budget);
        if (complete->parsed()) return run_complete(file, keep_zero_rows, budget);
        if (resolve->parsed()) return run_resolve(file, keep_zero_rows, budget);
    } catch (const dofc::ParseError& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " (line " << e.line << ", col " << e.col << ")";
        std::cerr << ": " << e.what() << "\n";
        return 1;
    } catch (const dofc::InvalidSystem& e) {
        std::cerr << "invalid system: " << e.what() << "\n";
        return 2;
    } catch (const dofc::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const dofc::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
