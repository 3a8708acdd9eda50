#include "kinkzeta/specfun.hpp"

#include <cmath>
#include <numbers>

#include "kinkzeta/errors.hpp"

namespace kinkzeta::specfun {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

}  // namespace

cplx theta_char(double a, double b, cplx w, cplx tau, int deriv)
{
    if (!(tau.imag() > 0)) throw DomainError("theta: Im tau must be positive");
    // start at the dominant term and walk outwards in both directions
    long n0 = std::lround(-w.imag() / tau.imag() - a);
    auto term = [&](long n) {
        double m = double(n) + a;
        cplx t = std::exp(I * pi * (m * m * tau + 2.0 * m * (w + b)));
        for (int j = 0; j < deriv; ++j) t *= 2.0 * pi * I * m;
        return t;
    };
    cplx sum = term(n0);
    for (int dir : {1, -1}) {
        for (long j = 1; j < 100000; ++j) {
            cplx t = term(n0 + dir * j);
            sum += t;
            if (j > 2 && std::abs(t) < 1e-16 * std::max(1.0, std::abs(sum))) break;
        }
    }
    return sum;
}

cplx theta3(cplx w, cplx tau) { return theta_char(0.0, 0.0, w, tau); }

cplx theta3_half_shift(cplx w, cplx tau) { return theta_char(0.0, 0.5, w, tau); }

cplx theta1(cplx w, cplx tau, int deriv) { return -theta_char(0.5, 0.5, w, tau, deriv); }

}  // namespace kinkzeta::specfun
