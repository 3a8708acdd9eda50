// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include "kinkzeta/bakerakhiezer.hpp"
#include "kinkzeta/cli.hpp"
#include "kinkzeta/models.hpp"
#include "kinkzeta/oracle.hpp"
#include "kinkzeta/resolvent.hpp"
#include "kinkzeta/specfun.hpp"
#include "kinkzeta/zetareg.hpp"

using namespace kinkzeta;
using resolvent::CaseTag;
using std::numbers::pi;
using cplx = std::complex<double>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string cli_out(const std::vector<std::string>& args, int* code = nullptr)
{
    std::vector<const char*> argv{"kinkzeta"};
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int c = cli::run(int(argv.size()), argv.data(), out, err);
    if (code) *code = c;
    return out.str();
}

std::vector<std::vector<std::string>> csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

// 1
Outcome sg_kink_energy()
{
    Outcome o;
    const double m = 2, g = 1, exact = 16 * m * m / g;
    auto rep = models::energy_report(models::kink_solution(models::ModelSpec::sine_gordon(m, g)));
    o.require(rep.closed_form == exact, "closed form " + fmt(rep.closed_form));
    double dq = std::fabs(rep.quadrature - exact);
    o.require(dq < 1e-9, "quadrature " + fmt(rep.quadrature) + " vs " + fmt(exact) + " (diff " + fmt(dq) + ")");
    std::string text;
    if (FILE* f = popen(KINKZETA_CLI " energy --family sg --m 2 --g 1 --kink", "r")) {
        char buf[256];
        while (std::fgets(buf, sizeof buf, f)) text += buf;
        o.require(pclose(f) == 0, "CLI exit status");
    }
    auto rows = csv(text);
    o.require(rows.size() == 2 && rows[1].size() > 3 && rows[1][3] == "64", "CLI closed_form cell not 64");
    return o;
}

// 2
Outcome sg_periodic_limit()
{
    Outcome o;
    const double m = 2, g = 1, kink = 16 * m * m / g;
    auto sol = models::periodic_solution(models::ModelSpec::sine_gordon(m, g), 0.999);
    double e = models::energy_report(sol).closed_form;
    double rel = std::fabs(e / kink - 1);
    o.require(rel < 5e-3, "E_p(0.999) = " + fmt(e) + ", rel " + fmt(rel));
    if (o.pass) o.detail = "rel " + fmt(rel);
    return o;
}

// 3
Outcome hermit_residuals()
{
    Outcome o;
    std::vector<resolvent::ResolventPolynomial> cases{resolvent::build_resolvent(CaseTag::A, 1.0)};
    for (double k : {0.3, 0.6, 0.9}) cases.push_back(resolvent::build_resolvent(CaseTag::B, 1.0, k));
    cases.push_back(resolvent::build_resolvent(CaseTag::C, 1.0));
    for (double k : {0.3, 0.6, 0.9}) cases.push_back(resolvent::build_resolvent(CaseTag::D, 1.0, k));
    cases.push_back(resolvent::build_resolvent(CaseTag::Nahm, 1.0));

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.2, 3.0);
    double worst_all = 0;
    for (const auto& rp : cases) {
        double L = rp.is_kink() ? 6 / rp.b : rp.period();
        std::uniform_real_distribution<double> ux(-L, L);
        double worst = 0;
        for (int i = 0; i < 50; ++i) {
            cplx p(re(rng), im(rng) * (i % 2 ? 1 : -1));
            worst = std::max(worst, resolvent::hermit_residual(rp, p * rp.b * rp.b, ux(rng)));
        }
        o.require(worst < 1e-9, resolvent::to_string(rp.tag) + " residual " + fmt(worst));
        worst_all = std::max(worst_all, worst);
    }
    if (o.pass) o.detail = "max residual " + fmt(worst_all);
    return o;
}

// 4
Outcome band_edge_equivalence()
{
    Outcome o;
    double worst = 0;
    for (double k : {0.3, 0.5, 0.8}) {
        for (auto tag : {CaseTag::B, CaseTag::D}) {
            auto rp = resolvent::build_resolvent(tag, 1.0, k);
            auto roots = resolvent::band_edges(rp);
            auto edges = oracle::band_edges_lattice(oracle::lattice_for(rp, 2000), int(roots.size()));
            if (edges.size() != roots.size()) {
                o.require(false, "edge count mismatch");
                continue;
            }
            for (std::size_t i = 0; i < roots.size(); ++i) {
                double ref = -roots[roots.size() - 1 - i];
                double rel = std::fabs(edges[i] - ref) / std::max(std::fabs(ref), rp.b * rp.b);
                worst = std::max(worst, rel);
                o.require(rel < 2e-3, resolvent::to_string(tag) + " k=" + fmt(k) + " edge " + std::to_string(i) +
                                          " rel " + fmt(rel));
            }
            if (tag == CaseTag::D) {
                double top = 2 * std::sqrt(1 - k * k + std::pow(k, 4)) - 1 - k * k;
                o.require(top > 0 && std::fabs(roots.back() - top) < 1e-12,
                          "top root " + fmt(roots.back()) + " vs " + fmt(top));
                // the top root is the lowest lattice eigenvalue, negated
                o.require(std::fabs(-edges[0] - top) / std::max(top, 1.0) < 2e-3, "lowest lattice edge");
            }
        }
    }
    if (o.pass) o.detail = "max rel " + fmt(worst);
    return o;
}

// 5
Outcome erf_triangle()
{
    Outcome o;
    auto rp = resolvent::build_resolvent(CaseTag::A, 1.0);
    auto lat = oracle::lattice_for(rp, 4000), vac = oracle::vacuum_lattice_for(rp, 4000);
    std::vector<double> ts{0.5, 1.0, 2.0};
    auto lattice = oracle::relative_heat_trace(lat, vac, ts);
    double worst_exact = 0, worst_lat = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double closed = std::erf(std::sqrt(ts[i]));
        double lap = resolvent::invert_laplace_gamma(rp, ts[i]).value;
        double lt = lattice[i].value;
        worst_exact = std::max(worst_exact, std::fabs(closed - lap));
        worst_lat = std::max({worst_lat, std::fabs(closed - lt), std::fabs(lap - lt)});
    }
    o.require(worst_exact < 1e-8, "closed vs Laplace " + fmt(worst_exact));
    o.require(worst_lat < 5e-3, "lattice " + fmt(worst_lat));
    if (o.pass) o.detail = "closed/Laplace " + fmt(worst_exact) + ", lattice " + fmt(worst_lat);
    return o;
}

// 6
Outcome zeta_closed_form()
{
    Outcome o;
    cplx z0 = zeta::zeta_kink_1d(0.0, 1.0), z1 = zeta::zeta_kink_1d(1.0, 1.0);
    o.require(std::abs(z0 + 1.0) < 1e-14, "zeta(0) = " + fmt(z0.real()));
    o.require(std::abs(z1 + 0.5) < 1e-14, "zeta(1) = " + fmt(z1.real()));
    auto tr = zeta::erf_trace(1.0);
    double worst = 0;
    for (double s : {0.1, 0.3, 0.45}) {
        double d = std::abs(zeta::mellin_zeta(tr, s).value - zeta::zeta_kink_1d(s, 1.0));
        worst = std::max(worst, d);
    }
    o.require(worst < 1e-7, "Mellin " + fmt(worst));
    if (o.pass) o.detail = "Mellin " + fmt(worst);
    return o;
}

// 7
Outcome method_triangle()
{
    Outcome o;
    auto rp = resolvent::build_resolvent(CaseTag::A, 1.0);
    auto tr = zeta::erf_trace(1.0);
    double worst = 0;
    for (double s : {-0.4, -0.2, 0.1, 0.25, 0.4}) {
        cplx c = zeta::zeta_kink_1d(s, 1.0);
        cplx mz = zeta::mellin_zeta(tr, s).value;
        cplx ct = zeta::zeta_contour(rp, s).value;
        double d = std::max({std::abs(c - mz), std::abs(c - ct), std::abs(mz - ct)});
        worst = std::max(worst, d);
        o.require(d < 1e-6, "s=" + fmt(s) + " spread " + fmt(d));
    }
    if (o.pass) o.detail = "max spread " + fmt(worst);
    return o;
}

// 8
Outcome figure_z()
{
    Outcome o;
    int code = -1;
    auto rows = csv(cli_out({"figure-z"}, &code));
    o.require(code == 0, "exit code " + std::to_string(code));
    o.require(rows.size() == 1 + 29 * 3, "row count " + std::to_string(rows.size()));
    if (!o.pass) return o;
    std::vector<std::vector<double>> curve(4);
    double worst = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double m = std::stod(rows[i][0]), v = std::stod(rows[i][2]);
        int d = std::stoi(rows[i][1]);
        o.require(std::isfinite(v), "non-finite value");
        if (d < 1 || d > 3) {
            o.require(false, "unexpected d " + rows[i][1]);
            return o;
        }
        curve.at(d).push_back(v);
        if (d == 1) {
            // d/ds of -m^{-2s} Gamma(s+1/2) / (sqrt(pi) Gamma(s+1)) at s = 0
            double ref = 2 * std::log(m) - boost::math::digamma(0.5) + boost::math::digamma(1.0);
            worst = std::max(worst, std::fabs(v - ref));
        }
    }
    o.require(worst < 1e-7, "d=1 vs symbolic " + fmt(worst));
    // continuity at every grid point, and an independent Mellin route on every seventh point
    double jump = 0, route = 0;
    const std::vector<double> ms = [&] {
        std::vector<double> v;
        for (std::size_t i = 1; i < rows.size(); i += 3) v.push_back(std::stod(rows[i][0]));
        return v;
    }();
    for (int d = 1; d <= 3; ++d)
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const double dm = 1e-4;
            double lo = zeta::derivative_at_zero(ms[i] - dm, d).value, hi = zeta::derivative_at_zero(ms[i] + dm, d).value;
            double slope = std::fabs(hi - lo) / (2 * dm);
            jump = std::max(jump, std::fabs(0.5 * (lo + hi) - curve[d][i]));
            o.require(std::isfinite(slope) && slope < 1e3, "steep or broken near m=" + fmt(ms[i]));
            if (i % 7 == 0)
                route = std::max(route, std::fabs(zeta::derivative_at_zero(ms[i], d, zeta::Method::mellin_numeric).value -
                                                  curve[d][i]));
        }
    o.require(jump < 1e-6, "discontinuity " + fmt(jump));
    o.require(route < 1e-6, "Mellin route " + fmt(route));
    if (o.pass) o.detail = "d=1 vs symbolic " + fmt(worst) + ", continuity " + fmt(jump) + ", Mellin route " + fmt(route);
    return o;
}

// 9
Outcome nahm_pipeline()
{
    Outcome o;
    auto rp = resolvent::build_resolvent(CaseTag::Nahm, 1.0);
    std::vector<double> poly{1.0};
    for (double r : rp.Q_roots) {
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= r * poly[i];
        }
        poly = next;
    }
    const std::vector<double> expect{0, 108, 0, -21, 0, 1};
    double dq = poly.size() == expect.size() ? 0 : HUGE_VAL;
    for (std::size_t i = 0; i < std::min(poly.size(), expect.size()); ++i)
        dq = std::max(dq, std::fabs(poly[i] - expect[i]));
    o.require(dq < 1e-10, "Q from roots " + fmt(dq));

    cplx fine = zeta::zeta_contour(rp, 0.25, {1e-12, 24, 8}).value;
    cplx coarse = zeta::zeta_contour(rp, 0.25, {1e-8, 16, 8}).value;
    double dz = std::abs(fine - coarse);
    o.require(std::isfinite(dz) && dz < 1e-6, "contour self-convergence " + fmt(dz));

    double lhs = 2 * specfun::ellipK_imag(1.0);
    double rhs = std::sqrt(2.0) * boost::math::ellint_1(1 / std::sqrt(2.0));
    o.require(std::fabs(lhs - rhs) < 1e-12, "2K(i) vs sqrt2 K(1/sqrt2) " + fmt(std::fabs(lhs - rhs)));
    if (o.pass)
        o.detail = "Q " + fmt(dq) + ", zeta(0.25) = " + fmt(fine.real()) + " (refinement " + fmt(dz) + ")";
    return o;
}

// 10
Outcome specfun_suite()
{
    Outcome o;
    double w_leg = 0, w_jac = 0, w_ode = 0, w_gam = 0;
    for (int i = 1; i <= 9; ++i) {
        double k = 0.1 * i, kp = std::sqrt(1 - k * k);
        double v = specfun::ellipE(k) * specfun::ellipK(kp) + specfun::ellipE(kp) * specfun::ellipK(k) -
                   specfun::ellipK(k) * specfun::ellipK(kp);
        w_leg = std::max(w_leg, std::fabs(v - pi / 2));
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uu(-6, 6), uk(0, 0.999);
    for (int i = 0; i < 200; ++i) {
        double u = uu(rng), k = uk(rng);
        auto j = specfun::jacobi_sn_cn_dn(u, k);
        double cn, dn, sn = boost::math::jacobi_elliptic(k, u, &cn, &dn);
        w_jac = std::max({w_jac, std::fabs(j.sn * j.sn + j.cn * j.cn - 1), std::fabs(j.dn * j.dn + k * k * j.sn * j.sn - 1),
                          std::fabs(j.sn - sn), std::fabs(j.cn - cn), std::fabs(j.dn - dn)});
    }
    auto P = specfun::WeierstrassParams::from_invariants(7.0, -1.5);
    std::uniform_real_distribution<double> u1(-1, 1);
    for (int n = 0; n < 100;) {
        cplx z(P.omega * u1(rng), P.omega_prime.imag() * u1(rng));
        if (std::abs(z) < 0.4 * P.omega) continue;
        cplx p = specfun::weierstrass_p(z, P), dp = specfun::weierstrass_p_prime(z, P);
        w_ode = std::max(w_ode, std::abs(dp * dp - 4.0 * p * p * p + P.g2 * p + P.g3));
        ++n;
    }
    std::uniform_real_distribution<double> us(0.1, 5), ui(-3, 3);
    for (int i = 0; i < 100; ++i) {
        cplx s(us(rng), ui(rng));
        cplx a = specfun::gamma_fn(s + 1.0), b = s * specfun::gamma_fn(s);
        w_gam = std::max(w_gam, std::abs(a - b) / std::abs(a));
    }
    o.require(w_leg < 1e-12, "Legendre " + fmt(w_leg));
    o.require(w_jac < 1e-12, "Jacobi " + fmt(w_jac));
    o.require(w_ode < 1e-8, "p ODE " + fmt(w_ode));
    o.require(w_gam < 1e-12, "Gamma recurrence " + fmt(w_gam));
    if (o.pass)
        o.detail = "Legendre " + fmt(w_leg) + ", Jacobi " + fmt(w_jac) + ", ODE " + fmt(w_ode) + ", Gamma " + fmt(w_gam);
    return o;
}

// 11
Outcome ba_cross_check()
{
    Outcome o;
    const double k = 0.6, k2 = k * k, K = specfun::ellipK(k);
    static const double c8[] = {-205.0 / 72, 8.0 / 5, -1.0 / 5, 8.0 / 315, -1.0 / 560};
    double w_res = 0;
    for (double h : {0.1, 0.5 * (1 + k2), 1 + 0.5 * k2, 2.0}) {
        ba::LameSolution s(h, k);
        for (int sign : {1, -1}) {
            auto f = [&](double x) { return s.psi(x, sign); };
            double norm = 0;
            for (int i = 0; i < 20; ++i) norm = std::max(norm, std::abs(f(-K + 0.2 * K * i)));
            for (int i = 0; i < 20; ++i) {
                double x = -K + 0.2 * K * i + 0.013, dx = 1e-2;
                cplx d2 = c8[0] * f(x);
                for (int j = 1; j <= 4; ++j) d2 += c8[j] * (f(x + j * dx) + f(x - j * dx));
                d2 /= dx * dx;
                w_res = std::max(w_res, std::abs(-d2 + (ba::lame_potential(x, k) - h) * f(x)) / norm);
            }
        }
    }
    o.require(w_res < 1e-7, "Lame residual " + fmt(w_res));

    auto rp = resolvent::build_resolvent(CaseTag::B, 1.0, k);
    const std::pair<double, double> pairs[] = {{-0.9, -0.8},     {0.45, -0.8},     {-0.3, 0.3 * k2},
                                              {0.7, 0.3 * k2},  {-0.9, 0.9 * k2}, {1.2, 0.9 * k2},
                                              {0.1, 1 + 0.2 * k2}, {-1.4, 1 + 0.2 * k2}, {0.45, 1 + 0.7 * k2},
                                              {0.9, 3.0}};
    double w_g = 0;
    for (auto [x, h] : pairs) w_g = std::max(w_g, std::abs(ba::green_diag(x, h, k) - rp.G(1 - h, x)));
    o.require(w_g < 1e-6, "Green diagonal " + fmt(w_g));

    double w_j = 0;
    for (double h : {0.1, 1.15})
        for (double x0 : {-0.4, 0.3, 1.1}) {
            auto g = [&](double x) { return ba::green(x, x0, h, k); };
            auto side = [&](int dir) {
                double e = 1e-3 * dir;
                return (-25.0 * g(x0) + 48.0 * g(x0 + e) - 36.0 * g(x0 + 2 * e) + 16.0 * g(x0 + 3 * e) -
                        3.0 * g(x0 + 4 * e)) /
                       (12.0 * e);
            };
            w_j = std::max(w_j, std::abs(side(1) - side(-1) + 1.0));
        }
    o.require(w_j < 1e-6, "Wronskian jump " + fmt(w_j));
    if (o.pass) o.detail = "residual " + fmt(w_res) + ", Green " + fmt(w_g) + ", jump " + fmt(w_j);
    return o;
}

struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"sg-kink-energy", 1, sg_kink_energy},
        {"sg-periodic-kink-limit", 1, sg_periodic_limit},
        {"hermit-residuals", 5, hermit_residuals},
        {"band-edge-oracle", 60, band_edge_equivalence},
        {"erf-trace-triangle", 60, erf_triangle},
        {"zeta-closed-form", 5, zeta_closed_form},
        {"zeta-method-triangle", 30, method_triangle},
        {"figure-z", 30, figure_z},
        {"nahm-pipeline", 30, nahm_pipeline},
        {"special-functions", 5, specfun_suite},
        {"baker-akhiezer", 30, ba_cross_check},
    };
    int failed = 0, idx = 0;
    for (const auto& c : criteria) {
        ++idx;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_s) o.require(false, "over time budget");
        failed += !o.pass;
        std::printf("%s %2d %-24s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", idx, c.name, secs, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
