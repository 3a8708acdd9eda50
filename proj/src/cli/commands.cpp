#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kinkzeta/cli.hpp"
#include "kinkzeta/errors.hpp"
#include "kinkzeta/oracle.hpp"
#include "kinkzeta/specfun.hpp"
#include "kinkzeta/zetareg.hpp"

namespace kinkzeta::cli {

using models::Family;
using models::Kind;
using resolvent::CaseTag;
using cplx = std::complex<double>;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

models::ModelSpec spec_from(const RunConfig& c)
{
    if (c.family == "gl") return models::ModelSpec::gl(c.m, c.g);
    if (c.family == "sg") return models::ModelSpec::sine_gordon(c.m, c.g);
    if (c.family == "nahm") return models::ModelSpec::nahm(c.w);
    throw DomainError("unknown family " + c.family);
}

resolvent::Normalization norm_of(const RunConfig& c)
{
    return c.per_length ? resolvent::Normalization::per_length : resolvent::Normalization::per_period;
}

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

void describe_case(Table& t, const resolvent::CaseBinding& cb, const RunConfig& c)
{
    t.meta["case"] = resolvent::to_string(cb.tag);
    t.meta["b"] = format_number(cb.b);
    t.meta["k"] = format_number(cb.k);
    t.meta["shift"] = format_number(cb.shift);
    if (cb.tag == CaseTag::B || cb.tag == CaseTag::D || cb.tag == CaseTag::Nahm)
        t.meta["normalization"] = c.per_length ? "per_length" : "per_period";
    if (cb.tag == CaseTag::Nahm) {
        t.meta["K(i)"] = format_number(specfun::ellipK_imag(1.0));
        t.meta["E(i)"] = format_number(specfun::ellipE_imag(1.0));
    }
}

}  // namespace

bool methods_disagree(const std::vector<cplx>& values, double tol)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (std::abs(values[i] - values[j]) > tol) return true;
    return false;
}

models::ClassicalSolution solution_from(const RunConfig& c)
{
    auto spec = spec_from(c);
    if (spec.family == Family::Nahm) return models::nahm_solution(spec, c.x0);
    const int picks = int(c.kink) + int(c.antikink) + int(c.constant.has_value()) + int(c.k.has_value() || c.W.has_value());
    if (c.k && c.W) throw DomainError("give exactly one of --k or --W");
    if (picks != 1) throw DomainError("choose exactly one of --kink, --antikink, --constant, --k, --W");
    if (c.kink) return models::kink_solution(spec, 1, c.x0);
    if (c.antikink) return models::kink_solution(spec, -1, c.x0);
    if (c.constant) return models::constant_solution(spec, *c.constant);
    if (c.k) return models::periodic_solution(spec, *c.k, 1, c.x0);
    return models::periodic_solution_from_W(spec, *c.W, 1, c.x0);
}

resolvent::CaseBinding case_from(const RunConfig& c)
{
    if (c.case_tag) {
        CaseTag tag = resolvent::case_from_string(*c.case_tag);
        if (!(c.b > 0)) throw DomainError("--b must be positive");
        double k = 1;
        if (tag == CaseTag::B || tag == CaseTag::D) {
            if (!c.k) throw DomainError("cases B and D need --k");
            k = *c.k;
            if (!(k > 0 && k < 1)) throw DomainError("--k must lie in (0, 1)");
        }
        if (tag == CaseTag::Nahm) k = 0;
        return {tag, c.b, k, 0.0};
    }
    return resolvent::case_for(solution_from(c));
}

CommandResult cmd_solution(const RunConfig& c)
{
    auto sol = solution_from(c);
    std::vector<double> xs = c.x_grid;
    if (xs.empty()) {
        double lo = c.x_min, hi = c.x_max;
        if (!c.x_range_given) {
            if (sol.kind == Kind::constant) {
                lo = -5, hi = 5;
            } else if (sol.period > 0) {
                lo = sol.x0 - sol.period, hi = sol.x0 + sol.period;
            } else {
                lo = sol.x0 - 10 / sol.b, hi = sol.x0 + 10 / sol.b;
            }
        }
        if (!(hi > lo)) throw DomainError("--x-max must exceed --x-min");
        xs = linspace(lo, hi, c.x_n);
    }
    CommandResult r;
    r.table.columns = {"x", "phi", "u", "e"};
    if (c.first_integral) r.table.columns.push_back("W");
    for (double x : xs) {
        std::vector<Cell> row{x};
        try {
            row.insert(row.end(), {sol.phi(x), models::schrodinger_potential(sol, x), sol.energy_density(x)});
            if (c.first_integral) row.push_back(sol.first_integral(x));
        } catch (const PoleError&) {
            row.resize(1);
            row.resize(r.table.columns.size(), std::string("pole"));
        }
        r.table.rows.push_back(std::move(row));
    }
    r.table.meta = {{"family", models::to_string(sol.spec.family)},
                    {"kind", models::to_string(sol.kind)},
                    {"k", format_number(sol.k)},
                    {"W", format_number(sol.W)},
                    {"b", format_number(sol.b)},
                    {"period", format_number(sol.period)}};
    return r;
}

CommandResult cmd_energy(const RunConfig& c)
{
    auto sol = solution_from(c);
    auto rep = models::energy_report(sol);
    CommandResult r;
    r.table.columns = {"family", "kind", "k", "closed_form", "quadrature", "paper_formula"};
    r.table.rows.push_back({models::to_string(sol.spec.family), models::to_string(sol.kind), sol.k, rep.closed_form,
                            rep.quadrature, rep.paper_formula});
    if (sol.kind == Kind::periodic) r.table.meta["range"] = "one period of the energy density";
    return r;
}

CommandResult cmd_resolvent(const RunConfig& c)
{
    auto cb = case_from(c);
    auto rp = resolvent::build_resolvent(cb.tag, cb.b, cb.k);
    CommandResult r;
    r.table.columns = {"item", "i", "j", "value"};
    auto& rows = r.table.rows;
    for (std::size_t i = 0; i < rp.P_coeffs.size(); ++i)
        for (std::size_t j = 0; j < rp.P_coeffs[i].size(); ++j)
            rows.push_back({std::string("P"), double(i), double(j), rp.P_coeffs[i][j]});
    for (std::size_t i = 0; i < rp.Q_coeffs.size(); ++i) rows.push_back({std::string("Q"), double(i), 0.0, rp.Q_coeffs[i]});
    for (std::size_t i = 0; i < rp.Q_roots.size(); ++i) rows.push_back({std::string("root"), double(i), 0.0, rp.Q_roots[i]});
    auto edges = resolvent::band_edges(rp);
    for (std::size_t i = 0; i < edges.size(); ++i)
        rows.push_back({std::string("band_edge"), double(i), 0.0, -edges[edges.size() - 1 - i]});
    auto N = resolvent::numerator(rp, norm_of(c));
    for (std::size_t i = 0; i < N.size(); ++i) rows.push_back({std::string("numerator"), double(i), 0.0, N[i]});
    describe_case(r.table, cb, c);
    r.table.meta["P"] = "sum_i p^i sum_j P[i][j] z^j";
    r.table.meta["band_edge"] = "eigenvalues of -d^2/dx^2 + u, ascending";
    return r;
}

CommandResult cmd_heattrace(const RunConfig& c)
{
    auto cb = case_from(c);
    auto rp = resolvent::build_resolvent(cb.tag, cb.b, cb.k);
    std::vector<double> ts = c.t_grid.empty() ? std::vector<double>{0.1, 0.5, 1, 2, 5} : c.t_grid;
    CommandResult r;
    r.table.columns = {"t", "source", "gamma", "stable", "unstable"};
    std::vector<oracle::RelativeTrace> lat;
    if (c.lattice) {
        if (!rp.is_kink()) throw UnsupportedError("lattice traces are vacuum-subtracted: kink cases only");
        lat = oracle::relative_heat_trace(oracle::lattice_for(rp, c.lattice_n), oracle::vacuum_lattice_for(rp, c.lattice_n), ts);
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double t = ts[i];
        auto g = resolvent::invert_laplace_gamma(rp, t, norm_of(c));
        r.table.rows.push_back({t, zeta::to_string(zeta::TraceSource::laplace_inversion), g.value, g.stable, g.unstable});
        if (cb.tag == CaseTag::A) {
            double e = std::erf(cb.b * std::sqrt(t));
            r.table.rows.push_back({t, zeta::to_string(zeta::TraceSource::closed_form_erf), e, e, 0.0});
        }
        if (c.lattice) {
            r.table.rows.push_back({t, zeta::to_string(zeta::TraceSource::lattice_oracle), lat[i].value, kNaN, kNaN});
            if (lat[i].truncation_warning) r.table.meta["warning"] = "lattice spectrum truncated";
        }
    }
    describe_case(r.table, cb, c);
    return r;
}

CommandResult cmd_zeta(const RunConfig& c)
{
    std::vector<double> ss = c.s_grid.empty() ? std::vector<double>{0.1, 0.2, 0.3, 0.4} : c.s_grid;
    CommandResult r;
    r.table.columns = {"s", "re", "im", "method", "err", "note"};

    using Eval = std::function<zeta::ZetaEvaluation(cplx)>;
    std::vector<std::pair<zeta::Method, Eval>> methods;
    auto closed = [](auto f) {
        return [f](cplx s) {
            zeta::ZetaEvaluation e;
            e.s = s;
            e.value = f(s);
            return e;
        };
    };
    if (c.nu) {
        const double nu = *c.nu;
        const int d = c.d;
        methods.push_back({zeta::Method::closed_form, closed([=](cplx s) { return zeta::zeta_vacuum(s, nu, d); })});
        auto tr = zeta::vacuum_trace(nu, d);
        methods.push_back({zeta::Method::mellin_numeric, [tr](cplx s) { return zeta::mellin_zeta(tr, s); }});
        r.table.meta["background"] = "constant, per unit volume";
        r.table.meta["nu"] = format_number(nu);
    } else {
        auto cb = case_from(c);
        auto rp = resolvent::build_resolvent(cb.tag, cb.b, cb.k);
        const double b = cb.b;
        const int d = c.d;
        if (d != 1 && cb.tag != CaseTag::A) throw UnsupportedError("--d > 1 is available for case A only");
        auto contour = [rp, norm = norm_of(c)](cplx s) { return zeta::zeta_contour(rp, s, {}, norm); };
        switch (cb.tag) {
        case CaseTag::A:
            if (d == 1) {
                methods.push_back({zeta::Method::closed_form, closed([=](cplx s) { return zeta::zeta_kink_1d(s, b); })});
                auto tr = zeta::erf_trace(b);
                methods.push_back({zeta::Method::mellin_numeric, [tr](cplx s) { return zeta::mellin_zeta(tr, s); }});
                methods.push_back({zeta::Method::contour, contour});
            } else {
                methods.push_back({zeta::Method::closed_form, closed([=](cplx s) { return zeta::zeta_d_kink(s, b, d); })});
                auto tr = zeta::with_transverse(zeta::erf_trace(b), d);
                methods.push_back({zeta::Method::mellin_numeric, [tr](cplx s) { return zeta::mellin_zeta(tr, s); }});
            }
            methods.push_back(
                {zeta::Method::paper_formula, closed([=](cplx s) { return zeta::zeta_d_kink_paper(s, b, d); })});
            break;
        case CaseTag::C: {
            auto tr = zeta::laplace_trace(rp);
            methods.push_back({zeta::Method::mellin_numeric, [tr](cplx s) { return zeta::mellin_zeta(tr, s); }});
            methods.push_back({zeta::Method::contour, contour});
            break;
        }
        default: methods.push_back({zeta::Method::contour, contour});
        }
        describe_case(r.table, cb, c);
        r.table.meta["d"] = std::to_string(d);
    }

    for (double s : ss) {
        std::vector<cplx> compared;
        for (const auto& [method, f] : methods) {
            std::string note;
            double re = kNaN, im = kNaN, err = kInf;
            try {
                auto e = f(s);
                re = e.value.real();
                im = e.value.imag();
                err = e.err_estimate;
                if (method != zeta::Method::paper_formula) compared.push_back(e.value);
                if (method == zeta::Method::paper_formula) note = "literature prefactor";
                if (method == zeta::Method::contour && r.table.meta.count("normalization"))
                    note = r.table.meta["normalization"];
            } catch (const ConvergenceError& e) {
                note = "convergence";
                r.code = numerical_failure;
            } catch (const PoleError&) {
                note = "pole";
            } catch (const BranchCollisionError&) {
                note = "branch_collision";
            }
            r.table.rows.push_back({s, re, im, zeta::to_string(method), err, note});
        }
        if (methods_disagree(compared) && r.code == ok) r.code = disagreement;
    }
    return r;
}

CommandResult cmd_correction(const RunConfig& c)
{
    auto dz = zeta::derivative_at_zero(c.m, c.d);
    double ds = zeta::quantum_correction(c.m, c.d, c.hbar, c.qucor2_convention);
    CommandResult r;
    r.table.columns = {"m", "d", "hbar", "dzeta_ds_at_0", "delta_S", "convention"};
    r.table.rows.push_back({c.m, double(c.d), c.hbar, dz.value, ds, std::string(c.qucor2_convention ? "halved" : "standard")});
    r.table.meta["operator"] = "sine-Gordon kink fluctuations, vacuum-subtracted, b = m";
    return r;
}

CommandResult cmd_figure_z(const RunConfig& c)
{
    if (!(c.m_min > 0) || !(c.m_step > 0) || c.m_max < c.m_min) throw DomainError("need 0 < m-min <= m-max, m-step > 0");
    const int n = int(std::floor((c.m_max - c.m_min) / c.m_step + 1e-9)) + 1;
    CommandResult r;
    r.table.columns = {"m", "d", "dzeta_ds_at_0"};
    for (int i = 0; i < n; ++i) {
        double m = std::round((c.m_min + i * c.m_step) * 1e12) / 1e12;
        for (int d = 1; d <= 3; ++d) r.table.rows.push_back({m, double(d), zeta::derivative_at_zero(m, d).value});
    }
    return r;
}

CommandResult cmd_oracle(const RunConfig& c)
{
    auto cb = case_from(c);
    auto rp = resolvent::build_resolvent(cb.tag, cb.b, cb.k);
    auto lat = oracle::lattice_for(rp, c.lattice_n);
    CommandResult r;
    if (c.what == "edges") {
        if (rp.is_kink()) throw UnsupportedError("band edges need a periodic case");
        auto roots = resolvent::band_edges(rp);
        auto edges = oracle::band_edges_lattice(lat, int(roots.size()));
        r.table.columns = {"index", "lattice", "resolvent", "rel_err"};
        for (std::size_t i = 0; i < roots.size(); ++i) {
            double ref = -roots[roots.size() - 1 - i];
            double rel = std::fabs(edges[i] - ref) / std::max(std::fabs(ref), cb.b * cb.b);
            r.table.rows.push_back({double(i), edges[i], ref, rel});
        }
    } else if (c.what == "eigen") {
        int cnt = c.count > 0 ? c.count : 5;
        auto ev = oracle::eigenvalues(lat, cnt);
        r.table.columns = {"index", "lambda"};
        for (std::size_t i = 0; i < ev.size(); ++i) r.table.rows.push_back({double(i), ev[i]});
    } else {
        if (!rp.is_kink()) throw UnsupportedError("relative traces need a kink case");
        std::vector<double> ts = c.t_grid.empty() ? std::vector<double>{0.5, 1, 2} : c.t_grid;
        auto tr = oracle::relative_heat_trace(lat, oracle::vacuum_lattice_for(rp, c.lattice_n), ts);
        r.table.columns = {"t", "lattice", "laplace"};
        for (std::size_t i = 0; i < ts.size(); ++i)
            r.table.rows.push_back({ts[i], tr[i].value, resolvent::invert_laplace_gamma(rp, ts[i]).value});
    }
    describe_case(r.table, cb, c);
    r.table.meta["lattice_points"] = std::to_string(c.lattice_n);
    return r;
}

}  // namespace kinkzeta::cli
