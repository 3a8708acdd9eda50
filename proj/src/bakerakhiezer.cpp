#include "kinkzeta/bakerakhiezer.hpp"

#include <cmath>

#include "kinkzeta/errors.hpp"

namespace kinkzeta::ba {

namespace {
constexpr double kEdgeGuard = 1e-4;
}

std::vector<double> lame_band_edges(double k) { return {k * k, 1.0, 1 + k * k}; }

double lame_potential(double x, double k)
{
    double s = specfun::jacobi_sn_cn_dn(x, k).sn;
    return 2 * k * k * s * s;
}

LameSolution::LameSolution(double h, double k) : h_(h), k_(k)
{
    if (!(k > 0 && k < 1)) throw DomainError("LameSolution: need 0 < k < 1");
    for (double e : lame_band_edges(k))
        if (std::fabs(h - e) < kEdgeGuard) throw DegenerateError("LameSolution: h at a band edge");
    const double k2 = k * k;
    wp_ = specfun::WeierstrassParams::from_roots(2 - k2, 2 * k2 - 1, -(1 + k2));
    rho_ = specfun::weierstrass_p_inverse(2 * (1 + k2) - 3 * h, wp_);
    zeta_rho_ = specfun::weierstrass_zeta(rho_, wp_);
    mu_ = std::exp(2.0 * (wp_.eta * rho_ - wp_.omega * zeta_rho_));
    // psi_plus is the solution with |mu| < 1
    if (std::abs(mu_) > 1) {
        rho_ = -rho_;
        zeta_rho_ = -zeta_rho_;
        mu_ = 1.0 / mu_;
    }
    if (std::abs(wronskian()) < 1e-10) throw DegenerateError("LameSolution: solutions are dependent");
}

cplx LameSolution::u_of(double x) const { return x / wp_.scale - wp_.omega_prime; }

cplx LameSolution::psi(double x, int sign) const
{
    const cplx u = u_of(x), r = double(sign) * rho_;
    return specfun::weierstrass_sigma_ratio(u, r, wp_) * std::exp(-double(sign) * zeta_rho_ * u);
}

cplx LameSolution::dpsi(double x, int sign) const
{
    const cplx u = u_of(x), r = double(sign) * rho_;
    cplx log_deriv = specfun::weierstrass_zeta(u + r, wp_) - specfun::weierstrass_zeta(u, wp_) - double(sign) * zeta_rho_;
    return psi(x, sign) * log_deriv / wp_.scale;
}

cplx LameSolution::wronskian(double x) const
{
    return psi(x, 1) * dpsi(x, -1) - psi(x, -1) * dpsi(x, 1);
}

cplx lame_psi(double x, double h, double k, int sign) { return LameSolution(h, k).psi(x, sign); }

cplx green_diag(double x, double h, double k)
{
    LameSolution s(h, k);
    return s.psi(x, 1) * s.psi(x, -1) / s.wronskian(x);
}

cplx green(double x, double y, double h, double k)
{
    LameSolution s(h, k);
    double hi = std::max(x, y), lo = std::min(x, y);
    return s.psi(hi, 1) * s.psi(lo, -1) / s.wronskian(lo);
}

}  // namespace kinkzeta::ba
