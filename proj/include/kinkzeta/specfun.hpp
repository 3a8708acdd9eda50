#pragma once

#include <complex>

namespace kinkzeta::specfun {

using cplx = std::complex<double>;

// Complete elliptic integrals, modulus convention (not parameter m = k^2).
double ellipK(double k);
double ellipE(double k);
// K(i kappa), E(i kappa) through the imaginary-modulus transformation.
double ellipK_imag(double kappa);
double ellipE_imag(double kappa);

struct SnCnDn {
    double sn, cn, dn;
};
struct CSnCnDn {
    cplx sn, cn, dn;
};

SnCnDn jacobi_sn_cn_dn(double u, double k);
CSnCnDn jacobi_sn_cn_dn(cplx u, double k);
// sn, cn, dn for modulus i*kappa (all real for real u).
SnCnDn jacobi_imag_modulus(double u, double kappa);

// theta(w|tau) = sum_m exp(i pi (m^2 tau + 2 m w)), period 1 in w.
cplx theta3(cplx w, cplx tau);
// theta(w + 1/2 | tau)
cplx theta3_half_shift(cplx w, cplx tau);
// sum_m exp(i pi ((m+a)^2 tau + 2 (m+a)(w+b))) and its w-derivatives.
cplx theta_char(double a, double b, cplx w, cplx tau, int deriv = 0);
// Odd theta, theta1(w) ~ 2 q^{1/4} sin(pi w).
cplx theta1(cplx w, cplx tau, int deriv = 0);

// Lattice with real invariants and three real roots e1 > e2 > e3.
struct WeierstrassParams {
    double g2 = 0, g3 = 0;
    double e1 = 0, e2 = 0, e3 = 0;
    double omega = 0;       // real half-period
    cplx omega_prime{};     // imaginary half-period
    double eta = 0;         // zeta(omega)
    double k = 0;           // modulus of the sn-representation
    double scale = 0;       // sqrt(e1 - e3)

    static WeierstrassParams from_invariants(double g2, double g3);
    static WeierstrassParams from_roots(double e1, double e2, double e3);
};

cplx weierstrass_p(cplx z, const WeierstrassParams& w);
cplx weierstrass_p_prime(cplx z, const WeierstrassParams& w);
cplx weierstrass_zeta(cplx z, const WeierstrassParams& w);
cplx weierstrass_sigma(cplx z, const WeierstrassParams& w);
// sigma(u + rho) / sigma(u) without forming either factor.
cplx weierstrass_sigma_ratio(cplx u, cplx rho, const WeierstrassParams& w);
// rho on the boundary of the fundamental rectangle with p(rho) = H.
cplx weierstrass_p_inverse(double H, const WeierstrassParams& w);

cplx gamma_fn(cplx s);
cplx rgamma(cplx s);  // 1/Gamma, entire
cplx digamma(cplx s);
double erf(double x);

}  // namespace kinkzeta::specfun
