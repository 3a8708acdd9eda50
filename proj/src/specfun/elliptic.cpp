#include "kinkzeta/specfun.hpp"

#include <cmath>
#include <numbers>

#include "kinkzeta/errors.hpp"

namespace kinkzeta::specfun {

namespace {

constexpr double pi = std::numbers::pi;

double complementary(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

}  // namespace

double ellipK(double k)
{
    k = std::fabs(k);
    if (!(k < 1.0)) throw DomainError("ellipK: modulus must satisfy |k| < 1");
    double a = 1.0, b = complementary(k);
    for (int i = 0; i < 64 && std::fabs(a - b) > 1e-16 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return pi / (2.0 * a);
}

double ellipE(double k)
{
    k = std::fabs(k);
    if (!(k <= 1.0)) throw DomainError("ellipE: modulus must satisfy |k| <= 1");
    if (k == 1.0) return 1.0;
    double a = 1.0, b = complementary(k), c = k;
    double weight = 0.5;
    double sum = weight * c * c;
    for (int i = 0; i < 64 && std::fabs(c) > 1e-17 * a; ++i) {
        c = 0.5 * (a - b);
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        weight *= 2.0;
        sum += weight * c * c;
    }
    return pi / (2.0 * a) * (1.0 - sum);
}

double ellipK_imag(double kappa)
{
    if (!(kappa >= 0)) throw DomainError("ellipK_imag: kappa must be >= 0");
    double r = std::sqrt(1.0 + kappa * kappa);
    return ellipK(kappa / r) / r;
}

double ellipE_imag(double kappa)
{
    if (!(kappa >= 0)) throw DomainError("ellipE_imag: kappa must be >= 0");
    double r = std::sqrt(1.0 + kappa * kappa);
    return r * ellipE(kappa / r);
}

}  // namespace kinkzeta::specfun
