#include "kinkzeta/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "kinkzeta/errors.hpp"
#include "kinkzeta/quadrature.hpp"
#include "kinkzeta/specfun.hpp"

namespace kinkzeta::models {

using specfun::cplx;
using std::numbers::pi;

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double sech(double x) { return 1.0 / std::cosh(x); }

// amplitude 2m sqrt(2/(3g)) of the SG arcsin profile
double sg_amplitude(const ModelSpec& s) { return 2 * s.m * std::sqrt(2.0 / (3 * s.g)); }

void check_modulus(double k)
{
    if (!(k > 0 && k < 1)) throw DomainError("modulus must lie in (0, 1)");
}

// distance of v from the nearest zero of cn(., k)
double cn_zero_distance(double v, double K)
{
    double n = std::round((v - K) / (2 * K));
    return std::fabs(v - K - 2 * K * n);
}

}  // namespace

std::string to_string(Family f)
{
    switch (f) {
    case Family::GL_phi4: return "gl";
    case Family::SineGordon: return "sg";
    case Family::Nahm: return "nahm";
    }
    return "?";
}

std::string to_string(Kind k)
{
    switch (k) {
    case Kind::kink: return "kink";
    case Kind::antikink: return "antikink";
    case Kind::periodic: return "periodic";
    case Kind::constant: return "constant";
    }
    return "?";
}

ModelSpec ModelSpec::gl(double m, double g) { return {Family::GL_phi4, m, g, 0}; }
ModelSpec ModelSpec::sine_gordon(double m, double g) { return {Family::SineGordon, m, g, 0}; }
ModelSpec ModelSpec::nahm(double w) { return {Family::Nahm, 0, 2, w}; }

void ModelSpec::validate() const
{
    if (family == Family::Nahm) {
        if (!(w > 0)) throw DomainError("Nahm scale w must be positive");
        return;
    }
    if (!(m > 0)) throw DomainError("mass m must be positive");
    if (!(g > 0)) throw DomainError("coupling g must be positive");
}

PotentialValue potential_V(const ModelSpec& s, double phi)
{
    switch (s.family) {
    case Family::Nahm:
        // GL with m = 0, g = 2
        return potential_V(ModelSpec::gl(0, 2), phi);
    case Family::GL_phi4: {
        double d = phi * phi - s.m * s.m / s.g;
        return {0.25 * s.g * d * d, s.g * phi * d, 3 * s.g * phi * phi - s.m * s.m};
    }
    case Family::SineGordon: {
        double A = 2 * std::pow(s.m, 4) / (3 * s.g);
        double c = std::sqrt(1.5 * s.g) / s.m;
        return {A * (1 + std::cos(c * phi)), -A * c * std::sin(c * phi), -A * c * c * std::cos(c * phi)};
    }
    }
    return {nan, nan, nan};
}

double sg_field_period(const ModelSpec& s) { return pi * sg_amplitude(s); }

double W_from_k(const ModelSpec& s, double k)
{
    s.validate();
    check_modulus(k);
    double m4 = std::pow(s.m, 4);
    switch (s.family) {
    case Family::GL_phi4: {
        double r = (1 - k * k) / (1 + k * k);
        return -r * r * m4 / (4 * s.g);
    }
    case Family::SineGordon: return 4 * (k * k - 1) * m4 / (3 * s.g);
    case Family::Nahm: throw UnsupportedError("Nahm solutions have a fixed modulus");
    }
    return nan;
}

double k_from_W(const ModelSpec& s, double W)
{
    s.validate();
    double m4 = std::pow(s.m, 4);
    switch (s.family) {
    case Family::GL_phi4: {
        if (!(W < 0 && W > -m4 / (4 * s.g))) throw DomainError("GL periodic solutions need -m^4/(4g) < W < 0");
        double r = std::sqrt(-4 * s.g * W / m4);
        return std::sqrt((1 - r) / (1 + r));
    }
    case Family::SineGordon: {
        if (!(W < 0 && W > -4 * m4 / (3 * s.g))) throw DomainError("SG periodic solutions need -4m^4/(3g) < W < 0");
        return std::sqrt(1 + 3 * s.g * W / (4 * m4));
    }
    case Family::Nahm: throw UnsupportedError("Nahm solutions have a fixed modulus");
    }
    return nan;
}

double ClassicalSolution::phi(double x) const
{
    const double y = x - x0;
    const double s = branch_sign;
    switch (kind) {
    case Kind::constant: return value;
    case Kind::kink:
    case Kind::antikink:
        if (spec.family == Family::GL_phi4) return s * std::sqrt(2 / spec.g) * b * std::tanh(b * y);
        // arcsin(tanh y) = atan(sinh y), well conditioned in the tails
        return s * sg_amplitude(spec) * std::atan(std::sinh(spec.m * y));
    case Kind::periodic:
        break;
    }
    if (spec.family == Family::Nahm) {
        double v = std::sqrt(2.0) * spec.w * y;
        if (cn_zero_distance(v, specfun::ellipK(k)) < 1e-3) throw PoleError("Nahm solution: too close to a pole");
        return s * spec.w / specfun::jacobi_sn_cn_dn(v, k).cn;
    }
    auto j = specfun::jacobi_sn_cn_dn(b * y, k);
    if (spec.family == Family::GL_phi4) return s * std::sqrt(2 / spec.g) * k * b * j.sn;
    return s * sg_amplitude(spec) * std::asin(k * j.sn);
}

double ClassicalSolution::dphi(double x) const
{
    const double y = x - x0;
    const double s = branch_sign;
    switch (kind) {
    case Kind::constant: return 0.0;
    case Kind::kink:
    case Kind::antikink:
        if (spec.family == Family::GL_phi4) {
            double c = sech(b * y);
            return s * std::sqrt(2 / spec.g) * b * b * c * c;
        }
        return s * sg_amplitude(spec) * spec.m * sech(spec.m * y);
    case Kind::periodic:
        break;
    }
    if (spec.family == Family::Nahm) {
        double v = std::sqrt(2.0) * spec.w * y;
        if (cn_zero_distance(v, specfun::ellipK(k)) < 1e-3) throw PoleError("Nahm solution: too close to a pole");
        auto j = specfun::jacobi_sn_cn_dn(v, k);
        return s * std::sqrt(2.0) * spec.w * spec.w * j.sn * j.dn / (j.cn * j.cn);
    }
    auto j = specfun::jacobi_sn_cn_dn(b * y, k);
    if (spec.family == Family::GL_phi4) return s * std::sqrt(2 / spec.g) * k * b * b * j.cn * j.dn;
    return s * sg_amplitude(spec) * k * spec.m * j.cn;
}

double ClassicalSolution::energy_density(double x) const
{
    double d = dphi(x);
    return 0.5 * d * d + potential_V(spec, phi(x)).V;
}

double ClassicalSolution::first_integral(double x) const
{
    double d = dphi(x);
    return 0.5 * d * d - potential_V(spec, phi(x)).V;
}

ClassicalSolution kink_solution(const ModelSpec& spec, int sign, double x0)
{
    spec.validate();
    if (spec.family == Family::Nahm) throw UnsupportedError("Nahm model has no bounded separatrix solution");
    ClassicalSolution s;
    s.spec = spec;
    s.kind = sign >= 0 ? Kind::kink : Kind::antikink;
    s.branch_sign = sign >= 0 ? 1 : -1;
    s.x0 = x0;
    s.k = 1;
    s.W = 0;
    s.b = spec.family == Family::GL_phi4 ? spec.m / std::sqrt(2.0) : spec.m;
    return s;
}

ClassicalSolution periodic_solution(const ModelSpec& spec, double k, int sign, double x0)
{
    spec.validate();
    if (spec.family == Family::Nahm) throw UnsupportedError("use nahm_solution for the Nahm model");
    check_modulus(k);
    ClassicalSolution s;
    s.spec = spec;
    s.kind = Kind::periodic;
    s.branch_sign = sign >= 0 ? 1 : -1;
    s.x0 = x0;
    s.k = k;
    s.W = W_from_k(spec, k);
    s.b = spec.family == Family::GL_phi4 ? spec.m / std::sqrt(1 + k * k) : spec.m;
    s.period = 2 * specfun::ellipK(k) / s.b;
    return s;
}

ClassicalSolution periodic_solution_from_W(const ModelSpec& spec, double W, int sign, double x0)
{
    return periodic_solution(spec, k_from_W(spec, W), sign, x0);
}

ClassicalSolution constant_solution(const ModelSpec& spec, int which)
{
    spec.validate();
    ClassicalSolution s;
    s.spec = spec;
    s.kind = Kind::constant;
    s.branch_sign = which < 0 ? -1 : 1;
    double outer = 0;
    switch (spec.family) {
    case Family::GL_phi4: outer = spec.m / std::sqrt(spec.g); break;
    case Family::SineGordon: outer = 0.5 * sg_field_period(spec); break;
    case Family::Nahm: outer = 0; break;
    }
    s.value = which == 0 ? 0.0 : s.branch_sign * outer;
    // W from the first integral, phi' = 0
    s.W = -potential_V(spec, s.value).V;
    return s;
}

ClassicalSolution nahm_solution(const ModelSpec& spec, double x0)
{
    if (spec.family != Family::Nahm) throw UnsupportedError("nahm_solution needs the Nahm family");
    spec.validate();
    ClassicalSolution s;
    s.spec = spec;
    s.kind = Kind::periodic;
    s.k = 1 / std::sqrt(2.0);
    s.b = spec.w;
    s.W = -0.5 * std::pow(spec.w, 4);
    s.x0 = x0;
    s.period = 2 * specfun::ellipK_imag(1.0) / spec.w;
    return s;
}

cplx nahm_weierstrass(const ModelSpec& spec, cplx x, double x0)
{
    double w = spec.w;
    // p(z; -g2, 0) = -i p(z e^{-i pi/4}; g2, 0)
    auto P = specfun::WeierstrassParams::from_invariants(std::pow(w, 4), 0.0);
    cplx rot = std::polar(1.0, -pi / 4);
    cplx p = cplx(0, -1) * specfun::weierstrass_p((x - x0) * rot, P);
    return w + w * w * w / (p - 0.5 * w * w);
}

double spectral_shift(const ClassicalSolution& sol)
{
    if (sol.spec.family == Family::GL_phi4 && (sol.kind == Kind::kink || sol.kind == Kind::antikink))
        return 4 * sol.b * sol.b;
    return 0.0;
}

double schrodinger_potential(const ClassicalSolution& sol, double x)
{
    const double y = x - sol.x0;
    const double b = sol.b;
    if (sol.kind == Kind::constant) return potential_V(sol.spec, sol.value).d2V;
    if (sol.spec.family == Family::Nahm) {
        double f = sol.phi(x);
        return 6 * f * f;
    }
    const bool kink = sol.kind != Kind::periodic;
    double z;
    if (kink) {
        double c = sech(b * y);
        z = c * c;
    } else {
        double cn = specfun::jacobi_sn_cn_dn(b * y, sol.k).cn;
        z = cn * cn;
    }
    const double k2 = sol.k * sol.k;
    if (sol.spec.family == Family::GL_phi4)
        return kink ? -6 * b * b * z : -6 * k2 * b * b * z + (5 * k2 - 1) * b * b;
    return kink ? b * b * (1 - 2 * z) : b * b * (2 * k2 - 1 - 2 * k2 * z);
}

EnergyReport energy_report(const ClassicalSolution& sol)
{
    if (sol.spec.family == Family::Nahm) throw DivergentError("Nahm solution is unbounded; its energy diverges");
    if (sol.kind == Kind::constant) throw DomainError("energy is defined for kink and periodic solutions");

    auto e = [&](double x) { return sol.energy_density(x); };
    quad::Options opt{1e-14, 20};
    double q;
    if (sol.kind == Kind::periodic) {
        q = quad::integrate(e, sol.x0, sol.x0 + sol.period, opt).value;
    } else {
        double L = 40.0 / sol.b;
        q = quad::integrate(e, sol.x0 - L, sol.x0, opt).value + quad::integrate(e, sol.x0, sol.x0 + L, opt).value;
    }

    EnergyReport r{nan, q, nan};
    if (sol.spec.family == Family::SineGordon) {
        double m2g = sol.spec.m * sol.spec.m / sol.spec.g;
        if (sol.kind == Kind::periodic) {
            double K = specfun::ellipK(sol.k), E = specfun::ellipE(sol.k), kc = 1 - sol.k * sol.k;
            r.closed_form = 8 * m2g * (2 * E - kc * K);
            r.paper_formula = 8 * m2g * (kc * K + 2 * E);
        } else {
            r.closed_form = 16 * m2g;
            r.paper_formula = 16 * m2g;
        }
    }
    return r;
}

double classical_energy(const ClassicalSolution& sol)
{
    EnergyReport r = energy_report(sol);
    return std::isnan(r.closed_form) ? r.quadrature : r.closed_form;
}

}  // namespace kinkzeta::models
