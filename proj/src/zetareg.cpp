#include "kinkzeta/zetareg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kinkzeta/errors.hpp"
#include "kinkzeta/polynomial.hpp"
#include "kinkzeta/quadrature.hpp"
#include "kinkzeta/specfun.hpp"

namespace kinkzeta::zeta {

using std::numbers::pi;
using specfun::gamma_fn;
using specfun::rgamma;

std::string to_string(Method m)
{
    switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::mellin_numeric: return "mellin_numeric";
    case Method::contour: return "contour";
    case Method::paper_formula: return "paper_formula";
    }
    return "?";
}

std::string to_string(TraceSource s)
{
    switch (s) {
    case TraceSource::closed_form_erf: return "closed_form_erf";
    case TraceSource::laplace_inversion: return "laplace_inversion";
    case TraceSource::lattice_oracle: return "lattice_oracle";
    case TraceSource::vacuum: return "vacuum";
    }
    return "?";
}

namespace {

constexpr double kTiny = 1e-12;

bool is_integer(double c) { return std::fabs(c - std::round(c)) < 1e-14; }

// Gamma(s + c) / Gamma(s), by a finite product when c is an integer
cplx gamma_ratio(cplx s, double c)
{
    if (is_integer(c)) {
        const int n = int(std::round(c));
        cplx r = 1;
        if (n >= 0) {
            for (int j = 0; j < n; ++j) r *= s + double(j);
            return r;
        }
        for (int j = 1; j <= -n; ++j) {
            cplx f = s - double(j);
            if (std::abs(f) < kTiny) throw PoleError("gamma ratio: pole");
            r /= f;
        }
        return r;
    }
    return gamma_fn(s + c) * rgamma(s);
}

cplx cpow(double x, cplx w) { return std::exp(w * std::log(x)); }

// Gamma(s + 1 - d/2) / ((s - (d-1)/2) Gamma(s)), finite at s = 0 for d = 1
cplx kink_ratio(cplx s, int d)
{
    if (d == 1) return gamma_fn(s + 0.5) * rgamma(s + 1.0);
    cplx w = s - 0.5 * (d - 1);
    if (std::abs(w) < kTiny) throw PoleError("zeta_d_kink: pole at s = (d-1)/2");
    return gamma_ratio(s, 1 - 0.5 * d) / w;
}

void check_dim(int d)
{
    if (d < 1 || d > 4) throw DomainError("dimension must be 1..4");
}

}  // namespace

HeatTrace erf_trace(double b)
{
    if (!(b > 0)) throw DomainError("erf_trace: b must be positive");
    HeatTrace tr;
    tr.source = TraceSource::closed_form_erf;
    tr.eval = [b](double t) { return std::erf(b * std::sqrt(t)); };
    const double c = 2 * b / std::sqrt(pi);
    tr.small_t = {{c, 0.5}, {-c * b * b / 3, 1.5}};
    tr.remainder = [b, c](double t) {
        double x = b * std::sqrt(t);
        if (x > 0.5) return std::erf(x) - c * std::sqrt(t) * (1 - x * x / 3);
        // Maclaurin series of erf from the x^5 term on
        double x2 = x * x, term = x * x2 * x2 / 2, acc = 0;
        for (int n = 2; n < 30 && std::fabs(term) > 1e-18 * std::fabs(acc); ++n) {
            acc += term / (2 * n + 1);
            term *= -x2 / (n + 1);
        }
        return 2 / std::sqrt(pi) * acc;
    };
    tr.large_t = {{1.0, 0.0}};
    tr.t_max = 40 / (b * b);
    return tr;
}

HeatTrace vacuum_trace(double nu, int d)
{
    if (!(nu > 0)) throw DomainError("vacuum_trace: nu must be positive");
    check_dim(d);
    HeatTrace tr;
    tr.source = TraceSource::vacuum;
    const double pref = std::pow(4 * pi, -0.5 * d);
    tr.eval = [nu, d, pref](double t) { return pref * std::exp(-nu * t) * std::pow(t, -0.5 * d); };
    tr.small_t = {{pref, -0.5 * d}, {-pref * nu, 1 - 0.5 * d}};
    tr.remainder = [nu, d, pref](double t) {
        double x = nu * t, r;
        if (x > 0.5) {
            r = std::exp(-x) - 1 + x;
        } else {
            double term = x * x / 2;
            r = 0;
            for (int n = 2; n < 30 && std::fabs(term) > 1e-18 * std::fabs(r); ++n) {
                r += term;
                term *= -x / (n + 1);
            }
        }
        return pref * std::pow(t, -0.5 * d) * r;
    };
    tr.t_max = 40 / nu;
    tr.renormalized = false;
    return tr;
}

HeatTrace laplace_trace(const resolvent::ResolventPolynomial& rp)
{
    if (!rp.is_kink()) throw UnsupportedError("laplace_trace: only kink cases have a vacuum-subtracted trace");
    auto sd = resolvent::spectral_data(rp);
    const double eps = 1e-12 * rp.b * rp.b;
    double plateau = 0, gap = std::numeric_limits<double>::infinity();
    for (const auto& pl : sd.poles) {
        if (pl.p > eps) throw UnsupportedError("laplace_trace: growing mode");
        if (pl.p > -eps)
            plateau += pl.residue;
        else
            gap = std::min(gap, -pl.p);
    }
    for (const auto& c : sd.cuts) {
        if (c.unstable) throw UnsupportedError("laplace_trace: growing mode");
        gap = std::min(gap, -c.p_hi);
    }
    // u is linear in z; V = u - u_vacuum
    const double slope = rp.u(1.0) - rp.u(0.0), u0 = rp.u(0.0);
    auto M = resolvent::z_moments(rp);
    const double iV = slope * M[1], iV2 = slope * slope * M[2];
    const double w = 1 / (2 * std::sqrt(pi));

    HeatTrace tr;
    tr.source = TraceSource::laplace_inversion;
    tr.eval = [rp](double t) { return resolvent::invert_laplace_gamma(rp, t).value; };
    tr.small_t = {{-iV * w, 0.5}, {(0.5 * iV2 + u0 * iV) * w, 1.5}};
    // below t = 1e-6 the remainder, O(t^{5/2}), is under the inversion error
    auto eval = tr.eval;
    auto terms = tr.small_t;
    tr.remainder = [eval, terms](double t) {
        if (t < 1e-6) return 0.0;
        double r = eval(t);
        for (const auto& term : terms) r -= term.coef * std::pow(t, term.power);
        return r;
    };
    if (plateau != 0) tr.large_t = {{plateau, 0.0}};
    tr.t_max = 40 / gap;
    return tr;
}

HeatTrace with_transverse(const HeatTrace& tr, int d)
{
    check_dim(d);
    if (d == 1) return tr;
    const double a = 0.5 * (d - 1), pref = std::pow(4 * pi, -a);
    HeatTrace out = tr;
    auto f = tr.eval;
    out.eval = [f, a, pref](double t) { return pref * std::pow(t, -a) * f(t); };
    if (tr.remainder) {
        auto g = tr.remainder;
        out.remainder = [g, a, pref](double t) { return pref * std::pow(t, -a) * g(t); };
    }
    for (auto& term : out.small_t) {
        term.coef *= pref;
        term.power -= a;
    }
    for (auto& term : out.large_t) {
        term.coef *= pref;
        term.power -= a;
    }
    return out;
}

ZetaEvaluation mellin_zeta(const HeatTrace& tr, cplx s, double tol)
{
    ZetaEvaluation ev;
    ev.s = s;
    ev.method = Method::mellin_numeric;
    quad::Options opt{tol, 18};

    // (0, 1) with t = u^2
    auto head = [&](double u) -> cplx {
        // tanh-sinh probes down to denormals; nothing integrable lives there
        if (u < 1e-100) return 0.0;
        double t = u * u, r;
        if (tr.remainder) {
            r = tr.remainder(t);
        } else {
            r = tr.eval(t);
            for (const auto& term : tr.small_t) r -= term.coef * std::pow(t, term.power);
        }
        if (r == 0) return 0.0;
        // u^{2s-1} r in log form: near u = 0 the power alone overflows
        return (r > 0 ? 2.0 : -2.0) * std::exp((2.0 * s - 1.0) * std::log(u) + std::log(std::fabs(r)));
    };
    auto I0 = quad::integrate_ts_c(head, 0.0, 1.0, opt);

    auto tail = [&](double t) -> cplx {
        if (t > tr.t_max) return 0.0;
        double r = tr.eval(t);
        for (const auto& term : tr.large_t) r -= term.coef * std::pow(t, term.power);
        return std::exp((s - 1.0) * std::log(t)) * r;
    };
    quad::CResult I1;
    if (std::isfinite(tr.t_max)) {
        if (tr.t_max > 1) I1 = quad::integrate_c(tail, 1.0, tr.t_max, opt);
    } else {
        I1 = quad::integrate_inf_c(tail, 1.0, opt);
    }

    // exact images of the subtracted powers; power 0 pairs with 1/Gamma(s) into 1/Gamma(s+1)
    cplx inner = I0.value + I1.value, outer = 0;
    auto image = [&](const PowerTerm& term, double sign) {
        if (term.power == 0) {
            outer += sign * term.coef * rgamma(s + 1.0);
            return;
        }
        cplx w = s + term.power;
        if (std::abs(w) < kTiny) throw PoleError("mellin_zeta: s at a pole of the continuation");
        inner += sign * term.coef / w;
    };
    for (const auto& term : tr.small_t) image(term, 1.0);
    // the tail of c t^beta over (1, inf) continues to -c / (s + beta)
    for (const auto& term : tr.large_t) image(term, -1.0);

    const cplx rg = rgamma(s);
    ev.value = rg * inner + outer;
    ev.err_estimate = std::abs(rg) * (I0.error + I1.error);
    if (!std::isfinite(ev.value.real()) || !std::isfinite(ev.value.imag()))
        throw ConvergenceError("mellin_zeta: non-finite result");
    return ev;
}

cplx zeta_vacuum(cplx s, double nu, int d)
{
    if (!(nu > 0)) throw DomainError("zeta_vacuum: nu must be positive");
    check_dim(d);
    return gamma_ratio(s, -0.5 * d) * std::pow(2 * std::sqrt(pi), -d) * cpow(nu, 0.5 * d - s);
}

cplx zeta_kink_1d(cplx s, double b)
{
    if (!(b > 0)) throw DomainError("zeta_kink_1d: b must be positive");
    return -cpow(b, -2.0 * s) * gamma_fn(s + 0.5) * rgamma(s + 1.0) / std::sqrt(pi);
}

cplx zeta_d_kink(cplx s, double m, int d)
{
    if (!(m > 0)) throw DomainError("zeta_d_kink: m must be positive");
    check_dim(d);
    const double a = 0.5 * (d - 1);
    return -std::pow(4 * pi, -a) / std::sqrt(pi) * cpow(m, -2.0 * (s - a)) * kink_ratio(s, d);
}

cplx zeta_d_kink_paper(cplx s, double m, int d)
{
    if (!(m > 0)) throw DomainError("zeta_d_kink_paper: m must be positive");
    check_dim(d);
    const double a = 0.5 * (d - 1);
    // -4 (4pi)^{d/2} m^{d-1-2s} Gamma(s+1-d/2) / ((2s+1-d) Gamma(s))
    return -2 * std::pow(4 * pi, 0.5 * d) * cpow(m, -2.0 * (s - a)) * kink_ratio(s, d);
}

namespace {

// rho(lambda) = sum_j c[j] lambda^{alpha - j} for lambda beyond every root
struct TailSeries {
    double alpha;
    std::vector<double> c;
};

std::vector<double> series_mul(const std::vector<double>& a, const std::vector<double>& b, std::size_t n)
{
    std::vector<double> r(n, 0.0);
    for (std::size_t i = 0; i < n && i < a.size(); ++i)
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

TailSeries tail_series(const resolvent::SpectralData& sd, std::size_t n)
{
    int dN = int(sd.N.size()) - 1;
    while (dN > 0 && sd.N[dN] == 0) --dN;
    std::vector<double> ser(n, 0.0);
    for (int j = 0; j <= dN && j < int(n); ++j) ser[j] = sd.N[dN - j] * (((dN - j) % 2) ? -1.0 : 1.0);
    for (double d : sd.doubles) {
        std::vector<double> inv(n);  // 1 / (1 + d x)
        for (std::size_t j = 0; j < n; ++j) inv[j] = std::pow(-d, double(j));
        ser = series_mul(ser, inv, n);
    }
    for (double r : sd.simple) {
        std::vector<double> inv(n);  // (1 + r x)^{-1/2}
        inv[0] = 1;
        for (std::size_t j = 1; j < n; ++j) inv[j] = inv[j - 1] * (-0.5 - double(j - 1)) / double(j) * r;
        ser = series_mul(ser, inv, n);
    }
    const int ns = int(sd.simple.size()), nd = int(sd.doubles.size());
    const double sigma = ((ns - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    const double pref = sigma * (nd % 2 ? -1.0 : 1.0) / (2 * pi);
    for (double& v : ser) v *= pref;
    return {dN - nd - 0.5 * ns, ser};
}

// (-p)^{-s} with the cut of (-p)^s on p > 0, approached from Im p < 0
cplx minus_p_pow(double p, cplx s)
{
    if (p < 0) return std::exp(-s * std::log(-p));
    return std::exp(-s * cplx(std::log(p), pi));
}

}  // namespace

ZetaEvaluation zeta_contour(const resolvent::ResolventPolynomial& rp, cplx s, ContourOptions opt,
                            resolvent::Normalization norm)
{
    auto sd = resolvent::spectral_data(rp, norm);
    double scale = 0;
    for (double r : rp.Q_roots) scale = std::max(scale, std::fabs(r));
    scale = std::max(scale, rp.b * rp.b);
    const double eps = 1e-12 * scale;
    quad::Options qo{opt.tol, 20};

    ZetaEvaluation ev;
    ev.s = s;
    ev.method = Method::contour;
    quad::KahanSum<cplx> sum;
    double err = 0;

    for (std::size_t c = 0; c < sd.cuts.size(); ++c) {
        const auto& cut = sd.cuts[c];
        if (cut.semi_infinite) {
            const double l1 = -cut.p_hi;
            if (l1 <= eps) throw BranchCollisionError("zeta_contour: continuum reaches lambda = 0");
            const double L = std::max(opt.lambda_factor * scale, 2 * l1);
            auto f = [&](double r) -> cplx {
                double lam = l1 + r * r;
                return 2.0 * resolvent::cut_density_regular(sd, c, -lam) * std::exp(-s * std::log(lam));
            };
            auto head = quad::integrate_c(f, 0.0, std::sqrt(L - l1), qo);
            sum.add(head.value);
            err += head.error;
            auto ts = tail_series(sd, std::size_t(opt.tail_terms));
            cplx tail = 0;
            for (std::size_t j = 0; j < ts.c.size(); ++j) {
                cplx w = ts.alpha - double(j) - s + 1.0;
                if (std::abs(w) < kTiny) throw PoleError("zeta_contour: s at a pole of the continuation");
                tail -= ts.c[j] * std::exp(w * std::log(L)) / w;
            }
            sum.add(tail);
            err += std::abs(ts.c.back()) * std::pow(L, ts.alpha - double(ts.c.size()) - s.real() + 1);
            continue;
        }
        const double a = cut.p_lo, bb = cut.p_hi, W = bb - a;
        const bool zero_hi = std::fabs(bb) < eps, zero_lo = std::fabs(a) < eps;
        if (!zero_hi && !zero_lo && a < 0 && bb > 0)
            throw UnsupportedError("zeta_contour: p = 0 inside a branch cut");
        if ((zero_hi || zero_lo) && s.real() >= 0.5)
            throw BranchCollisionError("zeta_contour: cut endpoint at lambda = 0 needs Re s < 1/2");
        // anchor the endpoint at p = 0 (if any) at theta = 0, where |p| = W sin^2(theta/2) exactly
        auto f = [&](double th) -> cplx {
            double h = std::sin(0.5 * th);
            double p = zero_hi ? -W * h * h : (zero_lo ? 0.0 : a) + W * h * h;
            if (p == 0) return 0.0;
            return resolvent::cut_density_regular(sd, c, p) * minus_p_pow(p, s);
        };
        auto r = quad::integrate_ts_c(f, 0.0, pi, qo);
        sum.add(r.value);
        err += r.error;
    }
    for (const auto& pl : sd.poles) {
        if (std::fabs(pl.p) <= eps) continue;  // zero modes are excluded
        sum.add(pl.residue * minus_p_pow(pl.p, s));
    }
    ev.value = sum.value();
    ev.err_estimate = err;
    if (!std::isfinite(ev.value.real()) || !std::isfinite(ev.value.imag()))
        throw ConvergenceError("zeta_contour: non-finite result");
    return ev;
}

Derivative derivative_at_zero(const std::function<cplx(cplx)>& f, double h)
{
    Derivative d;
    const double hs = 1e-20;
    d.value = f(cplx(0, hs)).imag() / hs;
    auto five = [&](double step) {
        double fp1 = f(step).real(), fm1 = f(-step).real(), fp2 = f(2 * step).real(), fm2 = f(-2 * step).real();
        return (8 * (fp1 - fm1) - (fp2 - fm2)) / (12 * step);
    };
    d.central = five(h);
    d.central_half = five(h / 2);
    d.consistency = std::fabs(d.central - d.central_half);
    return d;
}

Derivative derivative_at_zero(double m, int d, Method method)
{
    switch (method) {
    case Method::closed_form: return derivative_at_zero([=](cplx s) { return zeta_d_kink(s, m, d); });
    case Method::paper_formula: return derivative_at_zero([=](cplx s) { return zeta_d_kink_paper(s, m, d); });
    case Method::mellin_numeric: {
        auto tr = with_transverse(erf_trace(m), d);
        return derivative_at_zero([tr](cplx s) { return mellin_zeta(tr, s).value; }, 2e-2);
    }
    case Method::contour: {
        if (d != 1) throw UnsupportedError("contour derivative: only d = 1");
        auto rp = resolvent::build_resolvent(resolvent::CaseTag::A, m);
        return derivative_at_zero([rp](cplx s) { return zeta_contour(rp, s).value; }, 2e-2);
    }
    }
    throw DomainError("derivative_at_zero: unknown method");
}

double quantum_correction(double m, int d, double hbar, bool qucor2_convention)
{
    if (!(m > 0) || !(hbar > 0)) throw DomainError("quantum_correction: inputs must be positive");
    double v = -0.5 * hbar * derivative_at_zero(m, d).value;
    return qucor2_convention ? 0.5 * v : v;
}

}  // namespace kinkzeta::zeta
