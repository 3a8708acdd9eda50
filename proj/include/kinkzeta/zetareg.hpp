#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "kinkzeta/resolvent.hpp"

namespace kinkzeta::zeta {

using cplx = std::complex<double>;

enum class Method { closed_form, mellin_numeric, contour, paper_formula };
std::string to_string(Method m);

struct ZetaEvaluation {
    cplx s{};
    cplx value{};
    double dvalue_at_0 = 0;  // filled only by derivative reports
    Method method = Method::closed_form;
    double err_estimate = 0;
    int d = 1;
    double nu = 0;
    double hbar = 1;
};

// c * t^power
struct PowerTerm {
    double coef;
    double power;
};

enum class TraceSource { closed_form_erf, laplace_inversion, lattice_oracle, vacuum };
std::string to_string(TraceSource s);

struct HeatTrace {
    TraceSource source = TraceSource::closed_form_erf;
    std::function<double(double)> eval;
    std::vector<PowerTerm> small_t;  // leading terms as t -> 0
    std::function<double(double)> remainder;  // optional: eval minus small_t, without cancellation
    std::vector<PowerTerm> large_t;  // non-decaying terms as t -> inf
    double t_max = HUGE_VAL;         // beyond this the large_t terms are exact to double precision
    bool renormalized = true;
};

HeatTrace erf_trace(double b);
// e^{-nu t} / (4 pi t)^{d/2}, per unit volume
HeatTrace vacuum_trace(double nu, int d);
// vacuum-subtracted trace of a kink case from the inverse Laplace transform
HeatTrace laplace_trace(const resolvent::ResolventPolynomial& rp);
// multiply by the free trace of d-1 transverse dimensions, (4 pi t)^{-(d-1)/2}
HeatTrace with_transverse(const HeatTrace& tr, int d);

// Gamma(s)^{-1} int_0^inf t^{s-1} trace(t) dt, continued by subtracting the listed asymptotics
ZetaEvaluation mellin_zeta(const HeatTrace& trace, cplx s, double tol = 1e-12);

cplx zeta_vacuum(cplx s, double nu, int d);
cplx zeta_kink_1d(cplx s, double b);
// kink zeta in d dimensions from the product of the kink and transverse vacuum traces, b = m
cplx zeta_d_kink(cplx s, double m, int d);
// literature closed form with prefactor -4 (4 pi)^{d/2}, kept for side-by-side reports
cplx zeta_d_kink_paper(cplx s, double m, int d);

// contour integral over the cuts and poles of the integrated diagonal resolvent
struct ContourOptions {
    double tol = 1e-12;
    int tail_terms = 24;
    double lambda_factor = 8;  // tail expansion used beyond lambda_factor * max |root|
};
ZetaEvaluation zeta_contour(const resolvent::ResolventPolynomial& rp, cplx s, ContourOptions opt = {},
                            resolvent::Normalization norm = resolvent::Normalization::per_period);

struct Derivative {
    double value = 0;       // complex step
    double central = 0;     // 5-point stencil, step h
    double central_half = 0;  // step h/2
    double consistency = 0;   // |central - central_half|
};
// d/ds at s = 0 of a function real on the real axis
Derivative derivative_at_zero(const std::function<cplx(cplx)>& f, double h = 1e-3);
Derivative derivative_at_zero(double m, int d, Method method = Method::closed_form);

// one-loop correction -(hbar/2) zeta'(0); the alternative convention halves it
double quantum_correction(double m, int d, double hbar = 1, bool qucor2_convention = false);

}  // namespace kinkzeta::zeta
