#include "kinkzeta/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "kinkzeta/errors.hpp"

namespace kinkzeta::specfun {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos g = 7, n = 9
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos(cplx s)  // Gamma(s), Re s >= 1/2
{
    s -= 1.0;
    cplx x = lanczos_c[0];
    for (std::size_t i = 1; i < lanczos_c.size(); ++i) x += lanczos_c[i] / (s + double(i));
    cplx t = s + lanczos_g + 0.5;
    return std::sqrt(2 * pi) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

bool at_pole(cplx s)
{
    double r = std::round(s.real());
    return r <= 0 && std::fabs(s.real() - r) < 1e-14 && std::fabs(s.imag()) < 1e-14;
}

}  // namespace

cplx gamma_fn(cplx s)
{
    if (at_pole(s)) throw PoleError("gamma: pole at non-positive integer");
    if (s.real() < 0.5) return pi / (std::sin(pi * s) * lanczos(1.0 - s));
    return lanczos(s);
}

cplx rgamma(cplx s)
{
    if (s.imag() == 0 && s.real() <= 0 && s.real() == std::round(s.real())) return 0.0;
    if (s.real() < 0.5) return std::sin(pi * s) * lanczos(1.0 - s) / pi;
    return 1.0 / lanczos(s);
}

cplx digamma(cplx s)
{
    if (at_pole(s)) throw PoleError("digamma: pole at non-positive integer");
    if (s.real() < 0.5) return digamma(1.0 - s) - pi / std::tan(pi * s);
    cplx acc = 0.0;
    while (std::abs(s) < 12.0) {
        acc -= 1.0 / s;
        s += 1.0;
    }
    // Bernoulli B_2n / (2n)
    constexpr std::array<double, 7> b = {1.0 / 12,        -1.0 / 120, 1.0 / 252,      -1.0 / 240,
                                         5.0 / 660,       -691.0 / 32760, 1.0 / 12};
    cplx inv2 = 1.0 / (s * s);
    cplx p = inv2, series = 0.0;
    for (double c : b) {
        series += c * p;
        p *= inv2;
    }
    return acc + std::log(s) - 0.5 / s - series;
}

double erf(double x) { return std::erf(x); }

}  // namespace kinkzeta::specfun
