#pragma once

#include <complex>
#include <vector>

#include "kinkzeta/specfun.hpp"

// One-gap Lame operator -d^2/dx^2 + 2 k^2 sn^2(x, k) at b = 1, solved by sigma quotients.
// The periodic sine-Gordon resolvent case at scale b maps onto it by x -> b x, p -> p / b^2,
// h = 1 - p / b^2, and G_b(p, x) = G_1(p / b^2, b x) / b.
namespace kinkzeta::ba {

using cplx = std::complex<double>;

// band edges k^2, 1, 1 + k^2
std::vector<double> lame_band_edges(double k);
double lame_potential(double x, double k);
inline double h_from_p(double p) { return 1 - p; }

class LameSolution {
public:
    LameSolution(double h, double k);

    double h() const { return h_; }
    double k() const { return k_; }
    cplx rho() const { return rho_; }
    // Floquet multiplier of psi_plus over x -> x + 2K
    cplx mu() const { return mu_; }
    const specfun::WeierstrassParams& lattice() const { return wp_; }

    // sign +1: psi_plus (decays to the right in gaps), -1: psi_minus
    cplx psi(double x, int sign) const;
    cplx dpsi(double x, int sign) const;
    cplx wronskian(double x = 0) const;  // psi_+ psi_-' - psi_- psi_+'

private:
    double h_, k_;
    specfun::WeierstrassParams wp_;
    cplx rho_, zeta_rho_, mu_;
    cplx u_of(double x) const;
};

cplx lame_psi(double x, double h, double k, int sign);
// diagonal of (L - h)^{-1}
cplx green_diag(double x, double h, double k);
// off-diagonal kernel, derivative in x jumps by -1 at x = y
cplx green(double x, double y, double h, double k);

}  // namespace kinkzeta::ba
