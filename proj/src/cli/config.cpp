#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "kinkzeta/cli.hpp"
#include "kinkzeta/errors.hpp"

namespace kinkzeta::cli {

namespace {

void add_model(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--family", c.family, "gl, sg or nahm")->check(CLI::IsMember({"gl", "sg", "nahm"}));
    sub->add_option("--m", c.m, "mass parameter");
    sub->add_option("--g", c.g, "coupling");
    sub->add_option("--w", c.w, "Nahm scale");
    sub->add_option("--k", c.k, "modulus of a periodic solution (or of --case B/D)");
    sub->add_option("--W", c.W, "first integral of a periodic solution");
    sub->add_flag("--kink", c.kink);
    sub->add_flag("--antikink", c.antikink);
    sub->add_option("--constant", c.constant, "constant solution: 0 or +-1");
    sub->add_option("--x0", c.x0, "shift");
}

void add_case(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--case", c.case_tag, "resolvent case A, B, C, D or nahm (instead of model flags)");
    sub->add_option("--b", c.b, "inverse length scale of --case");
    sub->add_flag("--per-length", c.per_length, "normalize periodic traces per unit length, not per period");
}

void add_output(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--format", c.format, "csv or json")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}}));
    sub->add_option("-o,--output", c.output, "output file (default stdout)");
}

CommandResult dispatch(const RunConfig& cfg)
{
    const std::string& s = cfg.subcommand;
    if (s == "solution") return cmd_solution(cfg);
    if (s == "energy") return cmd_energy(cfg);
    if (s == "resolvent") return cmd_resolvent(cfg);
    if (s == "heattrace") return cmd_heattrace(cfg);
    if (s == "zeta") return cmd_zeta(cfg);
    if (s == "correction") return cmd_correction(cfg);
    if (s == "figure-z") return cmd_figure_z(cfg);
    if (s == "oracle") return cmd_oracle(cfg);
    throw DomainError("unknown subcommand " + s);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Classical kinks, diagonal resolvents and zeta-regularized one-loop corrections"};
    app.require_subcommand(1, 1);

    auto* sol = app.add_subcommand("solution", "sample phi, u and the energy density on an x-grid");
    add_model(sol, cfg);
    sol->add_option("--x", cfg.x_grid, "explicit x values")->delimiter(',');
    sol->add_option("--x-min", cfg.x_min);
    sol->add_option("--x-max", cfg.x_max);
    sol->add_option("--x-n", cfg.x_n)->check(CLI::Range(2, 1000000));
    sol->add_flag("--first-integral", cfg.first_integral, "append the first integral W per row");

    auto* en = app.add_subcommand("energy", "classical energy: closed form and quadrature");
    add_model(en, cfg);

    auto* res = app.add_subcommand("resolvent", "coefficients of P and Q, roots and the integrated numerator");
    add_model(res, cfg);
    add_case(res, cfg);

    auto* ht = app.add_subcommand("heattrace", "heat trace gamma(t)");
    add_model(ht, cfg);
    add_case(ht, cfg);
    ht->add_option("--t", cfg.t_grid, "t values")->delimiter(',');
    ht->add_flag("--lattice", cfg.lattice, "add the finite-difference trace (kink cases)");
    ht->add_option("--n", cfg.lattice_n, "lattice points")->check(CLI::Range(10, 100000));

    auto* ze = app.add_subcommand("zeta", "generalized zeta function by several methods");
    add_model(ze, cfg);
    add_case(ze, cfg);
    ze->add_option("--s", cfg.s_grid, "s values")->delimiter(',');
    ze->add_option("--d", cfg.d, "dimension")->check(CLI::Range(1, 4));
    ze->add_option("--nu", cfg.nu, "constant background instead of a kink");

    auto* co = app.add_subcommand("correction", "one-loop correction of the sine-Gordon kink, b = m");
    co->add_option("--m", cfg.m);
    co->add_option("--d", cfg.d)->check(CLI::Range(1, 4));
    co->add_option("--hbar", cfg.hbar);
    co->add_flag("--qucor2-convention", cfg.qucor2_convention, "apply the extra factor 1/2");

    auto* fz = app.add_subcommand("figure-z", "zeta'(0) of the kink against m for d = 1, 2, 3");
    fz->add_option("--m-min", cfg.m_min);
    fz->add_option("--m-max", cfg.m_max);
    fz->add_option("--m-step", cfg.m_step);

    auto* orc = app.add_subcommand("oracle", "finite-difference spectrum of the fluctuation operator");
    add_model(orc, cfg);
    add_case(orc, cfg);
    orc->add_option("--what", cfg.what, "edges, eigen or trace")->check(CLI::IsMember({"edges", "eigen", "trace"}));
    orc->add_option("--n", cfg.lattice_n, "lattice points")->check(CLI::Range(10, 100000));
    orc->add_option("--count", cfg.count, "number of eigenvalues");
    orc->add_option("--t", cfg.t_grid, "t values")->delimiter(',');

    for (auto* sub : {sol, en, res, ht, ze, co, fz, orc}) add_output(sub, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
    if ((sol->count("--x-min") > 0) != (sol->count("--x-max") > 0)) {
        err << "error: give both --x-min and --x-max\n";
        return bad_input;
    }
    cfg.x_range_given = sol->count("--x-min") > 0;

    CommandResult r;
    try {
        r = dispatch(cfg);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return numerical_failure;
    } catch (const DegenerateError& e) {
        err << "error: " << e.what() << '\n';
        return numerical_failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }

    std::ofstream file;
    std::ostream* os = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot write " << cfg.output << '\n';
            return bad_input;
        }
        os = &file;
    }
    if (cfg.format == Format::json)
        write_json(*os, r.table);
    else
        write_csv(*os, r.table);
    return r.code;
}

}  // namespace kinkzeta::cli
