#include "kinkzeta/specfun.hpp"

#include <array>
#include <cmath>

#include "kinkzeta/errors.hpp"

namespace kinkzeta::specfun {

SnCnDn jacobi_sn_cn_dn(double u, double k)
{
    k = std::fabs(k);
    if (!(k <= 1.0)) throw DomainError("jacobi_sn_cn_dn: |k| > 1");
    if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};
    if (k == 1.0) {
        double s = 1.0 / std::cosh(u);
        return {std::tanh(u), s, s};
    }

    double K4 = 4.0 * ellipK(k);
    if (std::fabs(u) > K4) u -= K4 * std::round(u / K4);

    // descending Landen / AGM sequence
    std::array<double, 32> a{}, c{};
    a[0] = 1.0;
    c[0] = k;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    int n = 0;
    while (std::fabs(c[n]) > 1e-16 && n < 30) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    for (int j = n; j > 0; --j) phi = 0.5 * (phi + std::asin(c[j] * std::sin(phi) / a[j]));
    double sn = std::sin(phi), cn = std::cos(phi);
    double kp = std::sqrt((1.0 - k) * (1.0 + k));
    // dn^2 = k'^2 + k^2 cn^2 has no cancellation near the quarter period
    return {sn, cn, std::sqrt(kp * kp + k * k * cn * cn)};
}

CSnCnDn jacobi_sn_cn_dn(cplx u, double k)
{
    k = std::fabs(k);
    if (!(k <= 1.0)) throw DomainError("jacobi_sn_cn_dn: |k| > 1");
    double kp = std::sqrt((1.0 - k) * (1.0 + k));
    auto [s, c, d] = jacobi_sn_cn_dn(u.real(), k);
    auto [s1, c1, d1] = jacobi_sn_cn_dn(u.imag(), kp);
    double den = c1 * c1 + k * k * s * s * s1 * s1;
    if (den == 0.0) throw PoleError("jacobi_sn_cn_dn: pole of sn");
    cplx sn(s * d1, c * d * s1 * c1);
    cplx cn(c * c1, -s * d * s1 * d1);
    cplx dn(d * c1 * d1, -k * k * s * c * s1);
    return {sn / den, cn / den, dn / den};
}

SnCnDn jacobi_imag_modulus(double u, double kappa)
{
    double r = std::sqrt(1.0 + kappa * kappa);
    auto [s, c, d] = jacobi_sn_cn_dn(u * r, kappa / r);
    return {s / (r * d), c / d, 1.0 / d};
}

}  // namespace kinkzeta::specfun
