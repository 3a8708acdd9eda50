#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "kinkzeta/errors.hpp"
#include "kinkzeta/models.hpp"
#include "kinkzeta/specfun.hpp"

using namespace kinkzeta;
using namespace kinkzeta::models;
using std::numbers::pi;

namespace {

double ode_residual(const ClassicalSolution& s, double x, double h = 1e-4)
{
    double d2 = (s.phi(x + h) - 2 * s.phi(x) + s.phi(x - h)) / (h * h);
    return std::fabs(d2 - potential_V(s.spec, s.phi(x)).dV);
}

std::vector<ClassicalSolution> sample_solutions()
{
    auto gl = ModelSpec::gl(1.3, 0.7);
    auto sg = ModelSpec::sine_gordon(0.9, 1.4);
    return {kink_solution(gl), kink_solution(gl, -1, 0.4), periodic_solution(gl, 0.3), periodic_solution(gl, 0.85, -1, -1.1),
            kink_solution(sg), kink_solution(sg, -1, 2.0), periodic_solution(sg, 0.5), periodic_solution(sg, 0.95, 1, 0.7)};
}

}  // namespace

TEST_CASE("potentials")
{
    auto gl = ModelSpec::gl(1.7, 0.6);
    CHECK(potential_V(gl, gl.m / std::sqrt(gl.g)).V == doctest::Approx(0.0));
    CHECK(std::fabs(potential_V(gl, -gl.m / std::sqrt(gl.g)).V) < 1e-14);

    auto nahm = ModelSpec::nahm(1.0);
    for (double f : {-1.3, 0.2, 2.0}) {
        CHECK(potential_V(nahm, f).dV == doctest::Approx(2 * f * f * f));
        CHECK(potential_V(nahm, f).V == doctest::Approx(0.5 * std::pow(f, 4)));
    }

    // SG periodicity in field space
    auto sg = ModelSpec::sine_gordon(1.1, 0.8);
    double Phi = sg_field_period(sg);
    for (double f : {-2.0, 0.1, 1.7})
        CHECK(std::fabs(potential_V(sg, f + Phi).V - potential_V(sg, f).V) < 1e-12);

    // small-g comparison with GL: constant and quadratic terms coincide
    auto gl2 = ModelSpec::gl(sg.m, sg.g);
    double m4g = std::pow(sg.m, 4) / sg.g;
    CHECK(potential_V(sg, 0).V == doctest::Approx(13 * m4g / 12 + potential_V(gl2, 0).V));
    CHECK(potential_V(sg, 0).d2V == doctest::Approx(potential_V(gl2, 0).d2V));

    // SG: V'' at the kink centre equals u(0) + lambda, u from the sech^2 form
    auto kink = kink_solution(sg);
    double b = sg.m;
    double u0 = b * b * (1 - 2 * 1.0);
    CHECK(potential_V(sg, kink.phi(0)).d2V == doctest::Approx(u0 + spectral_shift(kink)));
    // finite-difference second derivative of V at the centre value
    double h = 1e-4, f0 = kink.phi(0);
    double d2 = (potential_V(sg, f0 + h).V - 2 * potential_V(sg, f0).V + potential_V(sg, f0 - h).V) / (h * h);
    CHECK(std::fabs(d2 - u0) < 1e-5);
}

TEST_CASE("kinks")
{
    auto gl = ModelSpec::gl(std::sqrt(2.0), 2.0);
    auto k = kink_solution(gl);
    CHECK(k.b == doctest::Approx(1.0));
    CHECK(k.phi(0) == 0.0);
    CHECK(k.phi(40) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kink_solution(gl, -1).phi(40) == doctest::Approx(-1.0).epsilon(1e-15));
    for (int i = 0; i <= 200; ++i) {
        double x = -10 + 0.1 * i;
        double d = k.dphi(x), f = k.phi(x);
        double r = d * d - gl.g / 2 * std::pow(f * f - gl.m * gl.m / gl.g, 2) - 2 * k.W;
        CHECK(std::fabs(r) < 1e-10);
    }

    auto sg = ModelSpec::sine_gordon(1.3, 0.9);
    auto s = kink_solution(sg);
    double Phi = sg_field_period(sg);
    CHECK(Phi == doctest::Approx(2 * sg.m * pi * std::sqrt(2 / (3 * sg.g))));
    CHECK(s.phi(60) == doctest::Approx(Phi / 2));
    CHECK(s.phi(-60) == doctest::Approx(-Phi / 2));
    CHECK(s.phi(60) - s.phi(-60) == doctest::Approx(Phi));
    CHECK(kink_solution(sg, -1).phi(60) == doctest::Approx(-Phi / 2));

    CHECK_THROWS_AS(kink_solution(ModelSpec::nahm(1.0)), UnsupportedError);
    CHECK_THROWS_AS(kink_solution(ModelSpec::gl(-1, 1)), DomainError);
}

TEST_CASE("periodic solutions")
{
    auto gl = ModelSpec::gl(1.2, 0.5);
    double k1 = 1 - 1e-10;
    auto p = periodic_solution(gl, k1);
    auto kink = kink_solution(gl);
    for (double x : {-3.0, -0.4, 0.0, 0.8, 2.5}) CHECK(std::fabs(p.phi(x) - kink.phi(x)) < 1e-8);

    auto sg = ModelSpec::sine_gordon(0.7, 1.9);
    for (double k : {0.1, 0.5, 0.93}) {
        double W = W_from_k(sg, k);
        CHECK(std::fabs(k_from_W(sg, W) - k) < 1e-12);
        CHECK(std::fabs(W_from_k(sg, k_from_W(sg, W)) - W) < 1e-12);
        CHECK(std::fabs(k_from_W(gl, W_from_k(gl, k)) - k) < 1e-12);
    }
    CHECK(periodic_solution_from_W(sg, W_from_k(sg, 0.4)).k == doctest::Approx(0.4));

    for (double k : {0.3, 0.8}) {
        auto s = periodic_solution(gl, k);
        CHECK(s.W == doctest::Approx(-std::pow((1 - k * k) / (1 + k * k), 2) * std::pow(gl.m, 4) / (4 * gl.g)));
        double w0 = s.first_integral(0);
        double drift = 0;
        for (int i = 0; i <= 1000; ++i) drift = std::max(drift, std::fabs(s.first_integral(s.period * i / 1000.0) - w0));
        CHECK(drift < 1e-8);
        CHECK(std::fabs(w0 - s.W) < 1e-12);
    }

    CHECK_THROWS_AS(periodic_solution(gl, 0.0), DomainError);
    CHECK_THROWS_AS(periodic_solution(gl, 1.0), DomainError);
    CHECK_THROWS_AS(k_from_W(sg, 0.1), DomainError);
}

TEST_CASE("constant solutions")
{
    auto sg = ModelSpec::sine_gordon(1.5, 0.8);
    CHECK(constant_solution(sg, 0).W == doctest::Approx(-4 * std::pow(sg.m, 4) / (3 * sg.g)));
    CHECK(std::fabs(constant_solution(sg, 1).W) < 1e-12);
    CHECK(constant_solution(sg, -1).value == doctest::Approx(-0.5 * sg_field_period(sg)));
    auto gl = ModelSpec::gl(1.5, 0.8);
    CHECK(constant_solution(gl, 0).W == doctest::Approx(-std::pow(gl.m, 4) / (4 * gl.g)));
    CHECK(std::fabs(constant_solution(gl, 1).W) < 1e-14);
}

TEST_CASE("ODE residual and first integral on grids")
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> shift(-5.0, 5.0);
    for (auto s : sample_solutions()) {
        double L = s.period > 0 ? s.period : 20.0 / s.b;
        double worst = 0, drift = 0;
        for (int i = 0; i < 1000; ++i) {
            double x = -L / 2 + L * i / 999.0;
            worst = std::max(worst, ode_residual(s, x));
            drift = std::max(drift, std::fabs(s.first_integral(x) - s.W));
        }
        CHECK(worst < 1e-6);
        CHECK(drift < 1e-8);

        auto t = s;
        t.x0 += shift(rng);
        for (int i = 0; i < 50; ++i) CHECK(ode_residual(t, -L / 2 + L * i / 49.0) < 1e-6);
    }
}

TEST_CASE("Schroedinger potentials")
{
    auto gl = ModelSpec::gl(1.8, 1.1);
    auto kink = kink_solution(gl);
    double b = kink.b;
    CHECK(schrodinger_potential(kink, 0) == doctest::Approx(-6 * b * b));
    CHECK(std::fabs(schrodinger_potential(kink, 50 / b)) < 1e-30);
    CHECK(std::fabs(schrodinger_potential(kink, -50 / b)) < 1e-30);

    // near k = 1 the cnoidal potential approaches the kink potential raised by 4b^2
    auto p = periodic_solution(gl, 0.9999);
    for (double x : {-1.0, 0.0, 0.3, 1.2}) {
        double c = 1 / std::cosh(p.b * x);
        double limit = -6 * p.b * p.b * c * c + 4 * p.b * p.b;
        CHECK(std::fabs(schrodinger_potential(p, x) - limit) < 2e-3);
    }

    for (auto s : sample_solutions()) {
        for (double x : {-2.0, -0.3, 0.0, 0.9, 3.1}) {
            double lhs = potential_V(s.spec, s.phi(x)).d2V;
            CHECK(std::fabs(lhs - spectral_shift(s) - schrodinger_potential(s, x)) < 1e-10);
        }
    }
}

TEST_CASE("Nahm solution")
{
    for (double w : {1.0, 1.3}) {
        auto spec = ModelSpec::nahm(w);
        auto s = nahm_solution(spec);
        CHECK(s.W == doctest::Approx(-std::pow(w, 4) / 2));
        // pole at sqrt2 w x = K(1/sqrt2)
        double xp = specfun::ellipK(1 / std::sqrt(2.0)) / (std::sqrt(2.0) * w);
        CHECK_THROWS_AS(s.phi(xp + 1e-5), PoleError);

        int n = 0;
        for (int i = 0; i < 400; ++i) {
            double x = -0.95 * xp + 1.9 * xp * i / 399.0;
            double f = s.phi(x);
            if (std::fabs(f) > 3 * w) continue;
            double h = 2e-4;
            double d = (-s.phi(x + 2 * h) + 8 * s.phi(x + h) - 8 * s.phi(x - h) + s.phi(x - 2 * h)) / (12 * h);
            CHECK(std::fabs(d * d - std::pow(f, 4) + std::pow(w, 4)) < 1e-8);
            CHECK(std::fabs(s.dphi(x) - d) < 1e-8);
            CHECK(std::abs(nahm_weierstrass(spec, x) - f) < 1e-8);
            CHECK(std::fabs(schrodinger_potential(s, x) - 6 * f * f) < 1e-12);
            ++n;
        }
        CHECK(n > 200);

        auto P = specfun::WeierstrassParams::from_invariants(std::pow(w, 4), 0.0);
        CHECK(P.e1 == doctest::Approx(w * w / 2));
        CHECK(std::fabs(P.e2) < 1e-14);
        CHECK(P.e3 == doctest::Approx(-w * w / 2));
    }
    CHECK_THROWS_AS(energy_report(nahm_solution(ModelSpec::nahm(1.0))), DivergentError);
}

TEST_CASE("energies")
{
    auto sg = ModelSpec::sine_gordon(2.0, 1.0);
    auto k = kink_solution(sg);
    auto r = energy_report(k);
    CHECK(r.closed_form == 64.0);
    CHECK(classical_energy(k) == 64.0);
    // the energy density itself integrates to 16 m^3 / (3g)
    CHECK(std::fabs(r.quadrature - 16 * 8.0 / 3) < 1e-9);

    for (double kk : {0.3, 0.7, 0.99}) {
        auto p = periodic_solution(sg, kk);
        auto e = energy_report(p);
        double K = specfun::ellipK(kk), E = specfun::ellipE(kk);
        CHECK(std::fabs(e.quadrature - 8 * 8.0 / 3 * (2 * E - (1 - kk * kk) * K)) < 1e-9);
        CHECK(e.closed_form == doctest::Approx(8 * 4.0 * (2 * E - (1 - kk * kk) * K)));
        CHECK(e.paper_formula == doctest::Approx(8 * 4.0 * ((1 - kk * kk) * K + 2 * E)));
    }
    double e999 = energy_report(periodic_solution(sg, 0.999)).closed_form;
    CHECK(std::fabs(e999 / 64 - 1) < 5e-3);
    CHECK(std::fabs(energy_report(periodic_solution(sg, 1 - 1e-12)).closed_form - 64) < 1e-6);

    // GL kink: 2 sqrt2 m^3 / (3g), from the sech^4 integral 4/3
    auto gl = ModelSpec::gl(std::sqrt(2.0), 2.0);
    auto gk = energy_report(kink_solution(gl));
    CHECK(std::isnan(gk.closed_form));
    CHECK(std::fabs(gk.quadrature - 2 * std::sqrt(2.0) * std::pow(gl.m, 3) / (3 * gl.g)) < 1e-9);

    // GL periodic over one period of e(x): phi'^2 integrated plus W times the length
    auto gp = periodic_solution(gl, 0.6);
    double I = 0;
    {
        const int n = 20000;
        for (int i = 0; i < n; ++i) {
            double x = gp.period * (i + 0.5) / n;
            double d = gp.dphi(x);
            I += d * d;
        }
        I *= gp.period / n;  // midpoint rule is spectrally accurate for periodic integrands
    }
    CHECK(std::fabs(energy_report(gp).quadrature - (I - gp.W * gp.period)) < 1e-9);

    CHECK_THROWS_AS(energy_report(constant_solution(sg, 0)), DomainError);
}
