#include "kinkzeta/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "kinkzeta/errors.hpp"

namespace kinkzeta::specfun {

namespace {

constexpr double pi = std::numbers::pi;

// Newton polish of a root of 4t^3 - g2 t - g3.
double polish(double t, double g2, double g3)
{
    for (int i = 0; i < 4; ++i) {
        double f = 4 * t * t * t - g2 * t - g3;
        double df = 12 * t * t - g2;
        if (df == 0) break;
        double dt = f / df;
        t -= dt;
        if (std::fabs(dt) <= 1e-17 * std::fabs(t)) break;
    }
    return t;
}

// Reduce z into |Re z| <= omega, |Im z| <= |omega'|.
cplx reduce(cplx z, const WeierstrassParams& w)
{
    double wi = w.omega_prime.imag();
    double m = std::round(z.real() / (2 * w.omega));
    double n = std::round(z.imag() / (2 * wi));
    return z - 2.0 * m * w.omega - 2.0 * n * w.omega_prime;
}

void check_pole(cplx zr, const WeierstrassParams& w)
{
    if (std::abs(zr) < 1e-8 * std::max(1.0, w.omega))
        throw PoleError("weierstrass: argument at a lattice point");
}

}  // namespace

WeierstrassParams WeierstrassParams::from_invariants(double g2, double g3)
{
    double disc = g2 * g2 * g2 - 27 * g3 * g3;
    if (!(disc > 0)) throw DomainError("weierstrass: only invariants with three real roots are supported");
    // t^3 + p t + q with p = -g2/4, q = -g3/4
    double p = -g2 / 4, q = -g3 / 4;
    double r = 2 * std::sqrt(-p / 3);
    double arg = std::clamp(3 * q / (2 * p) * std::sqrt(-3 / p), -1.0, 1.0);
    double th = std::acos(arg) / 3;
    std::array<double, 3> e{};
    for (int j = 0; j < 3; ++j) e[j] = polish(r * std::cos(th - 2 * pi * j / 3), g2, g3);
    std::sort(e.begin(), e.end(), std::greater<>());
    WeierstrassParams w = from_roots(e[0], e[1], e[2]);
    w.g2 = g2;
    w.g3 = g3;
    return w;
}

WeierstrassParams WeierstrassParams::from_roots(double e1, double e2, double e3)
{
    std::array<double, 3> e{e1, e2, e3};
    std::sort(e.begin(), e.end(), std::greater<>());
    double span = e[0] - e[2];
    if (!(span > 0) || e[0] == e[1] || e[1] == e[2])
        throw DomainError("weierstrass: roots must be real and distinct");
    if (std::fabs(e[0] + e[1] + e[2]) > 1e-12 * span) throw DomainError("weierstrass: roots must sum to zero");
    WeierstrassParams w;
    w.e1 = e[0];
    w.e2 = e[1];
    w.e3 = e[2];
    w.g2 = -4 * (e[0] * e[1] + e[0] * e[2] + e[1] * e[2]);
    w.g3 = 4 * e[0] * e[1] * e[2];
    w.scale = std::sqrt(span);
    w.k = std::sqrt((e[1] - e[2]) / span);
    double kp = std::sqrt((e[0] - e[1]) / span);
    w.omega = ellipK(w.k) / w.scale;
    w.omega_prime = cplx(0.0, ellipK(kp) / w.scale);
    w.eta = w.scale * ellipE(w.k) - w.e1 * w.omega;
    return w;
}

cplx weierstrass_p(cplx z, const WeierstrassParams& w)
{
    cplx zr = reduce(z, w);
    check_pole(zr, w);
    if (std::fabs(zr.imag()) <= 0.5 * w.omega_prime.imag()) {
        cplx s = jacobi_sn_cn_dn(w.scale * zr, w.k).sn;
        return w.e3 + (w.e1 - w.e3) / (s * s);
    }
    // near omega': use sn(v + iK') = 1/(k sn v)
    cplx zs = zr.imag() > 0 ? zr - w.omega_prime : zr + w.omega_prime;
    cplx s = jacobi_sn_cn_dn(w.scale * zs, w.k).sn;
    return w.e3 + (w.e2 - w.e3) * s * s;
}

cplx weierstrass_p_prime(cplx z, const WeierstrassParams& w)
{
    cplx zr = reduce(z, w);
    check_pole(zr, w);
    double c = w.e1 - w.e3;
    if (std::fabs(zr.imag()) <= 0.5 * w.omega_prime.imag()) {
        auto j = jacobi_sn_cn_dn(w.scale * zr, w.k);
        return -2.0 * c * w.scale * j.cn * j.dn / (j.sn * j.sn * j.sn);
    }
    cplx zs = zr.imag() > 0 ? zr - w.omega_prime : zr + w.omega_prime;
    auto j = jacobi_sn_cn_dn(w.scale * zs, w.k);
    return 2.0 * (w.e2 - w.e3) * w.scale * j.sn * j.cn * j.dn;
}

cplx weierstrass_zeta(cplx z, const WeierstrassParams& w)
{
    cplx tau = w.omega_prime / w.omega;
    cplx v = z / (2 * w.omega);
    cplx t = theta1(v, tau);
    if (std::abs(t) == 0.0) throw PoleError("weierstrass_zeta: lattice point");
    return w.eta * z / w.omega + theta1(v, tau, 1) / (2 * w.omega * t);
}

cplx weierstrass_sigma(cplx z, const WeierstrassParams& w)
{
    cplx tau = w.omega_prime / w.omega;
    cplx v = z / (2 * w.omega);
    return 2 * w.omega * std::exp(w.eta * z * z / (2 * w.omega)) * theta1(v, tau) / theta1(0.0, tau, 1);
}

cplx weierstrass_sigma_ratio(cplx u, cplx rho, const WeierstrassParams& w)
{
    cplx tau = w.omega_prime / w.omega;
    cplx den = theta1(u / (2 * w.omega), tau);
    if (std::abs(den) == 0.0) throw PoleError("weierstrass_sigma_ratio: sigma(u) = 0");
    return std::exp(w.eta * (2.0 * u * rho + rho * rho) / (2 * w.omega)) * theta1((u + rho) / (2 * w.omega), tau) / den;
}

cplx weierstrass_p_inverse(double H, const WeierstrassParams& w)
{
    using boost::math::tools::eps_tolerance;
    using boost::math::tools::toms748_solve;
    const double wp = w.omega_prime.imag();
    const double snap = 1e-14 * (w.e1 - w.e3);
    if (!std::isfinite(H)) throw NotFoundError("weierstrass_p_inverse: H not finite");
    if (std::fabs(H - w.e1) <= snap) return w.omega;
    if (std::fabs(H - w.e2) <= snap) return w.omega + w.omega_prime;
    if (std::fabs(H - w.e3) <= snap) return w.omega_prime;

    auto solve = [&](auto f, double lo, double hi) {
        eps_tolerance<double> tol(52);
        std::uintmax_t iters = 200;
        auto [a, b] = toms748_solve(f, lo, hi, tol, iters);
        return 0.5 * (a + b);
    };

    if (H > w.e1) {
        auto f = [&](double t) { return weierstrass_p(t, w).real() - H; };
        double lo = 0.5 * w.omega;
        for (int i = 0; i < 200 && f(lo) < 0; ++i) lo *= 0.5;
        if (f(lo) < 0) throw NotFoundError("weierstrass_p_inverse: H out of range");
        return solve(f, lo, w.omega);
    }
    if (H >= w.e2) {
        auto f = [&](double s) { return weierstrass_p(cplx(w.omega, s), w).real() - H; };
        return cplx(w.omega, solve(f, 0.0, wp));
    }
    if (H >= w.e3) {
        auto f = [&](double t) { return weierstrass_p(cplx(t, wp), w).real() - H; };
        return cplx(solve(f, 0.0, w.omega), wp);
    }
    auto f = [&](double s) { return weierstrass_p(cplx(0.0, s), w).real() - H; };
    double lo = 0.5 * wp;
    for (int i = 0; i < 200 && f(lo) > 0; ++i) lo *= 0.5;
    if (f(lo) > 0) throw NotFoundError("weierstrass_p_inverse: H out of range");
    return cplx(0.0, solve(f, lo, wp));
}

}  // namespace kinkzeta::specfun
