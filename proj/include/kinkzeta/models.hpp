#pragma once

#include <complex>
#include <string>

namespace kinkzeta::models {

enum class Family { GL_phi4, SineGordon, Nahm };
enum class Kind { kink, antikink, periodic, constant };

std::string to_string(Family f);
std::string to_string(Kind k);

struct ModelSpec {
    Family family = Family::GL_phi4;
    double m = 0;  // mass parameter (unused for Nahm)
    double g = 0;  // coupling (2 for Nahm)
    double w = 0;  // Nahm scale

    static ModelSpec gl(double m, double g);
    static ModelSpec sine_gordon(double m, double g);
    static ModelSpec nahm(double w);
    void validate() const;
};

struct PotentialValue {
    double V, dV, d2V;
};

PotentialValue potential_V(const ModelSpec& spec, double phi);

// Sine-Gordon field period Phi = 2 pi m sqrt(2/(3g)).
double sg_field_period(const ModelSpec& spec);

// First integral W <-> modulus k for periodic solutions.
double W_from_k(const ModelSpec& spec, double k);
double k_from_W(const ModelSpec& spec, double W);

class ClassicalSolution {
public:
    ModelSpec spec;
    Kind kind = Kind::kink;
    double k = 0;           // modulus (periodic; 1/sqrt2 for the real Nahm form)
    double W = 0;           // first integral
    double b = 0;           // inverse length scale
    double period = 0;      // period of u(x) and e(x); 0 for kinks and constants
    int branch_sign = 1;
    double x0 = 0;          // shift
    double value = 0;       // constant solutions only

    double phi(double x) const;
    double dphi(double x) const;
    double energy_density(double x) const;
    double first_integral(double x) const;
};

ClassicalSolution kink_solution(const ModelSpec& spec, int sign = 1, double x0 = 0);
ClassicalSolution periodic_solution(const ModelSpec& spec, double k, int sign = 1, double x0 = 0);
ClassicalSolution periodic_solution_from_W(const ModelSpec& spec, double W, int sign = 1, double x0 = 0);
// which = 0 for phi = 0, +-1 for the outer constants (+-m/sqrt g, or +-Phi/2 for SG).
ClassicalSolution constant_solution(const ModelSpec& spec, int which);
// phi'^2 = phi^4 - w^4: phi = w nc(sqrt2 w (x - x0), 1/sqrt2).
ClassicalSolution nahm_solution(const ModelSpec& spec, double x0 = 0);

// w + w^3 / (p(x - x0; -w^4, 0) - w^2/2)
std::complex<double> nahm_weierstrass(const ModelSpec& spec, std::complex<double> x, double x0 = 0);

// u(x) of -d^2/dx^2 + u; V''(phi(x)) = spectral_shift(sol) + u(x).
double schrodinger_potential(const ClassicalSolution& sol, double x);
double spectral_shift(const ClassicalSolution& sol);

struct EnergyReport {
    double closed_form;    // NaN when no closed form exists
    double quadrature;     // integral of e(x) over R (kinks) or one period
    double paper_formula;  // NaN unless a literature form differs from closed_form
};

EnergyReport energy_report(const ClassicalSolution& sol);
double classical_energy(const ClassicalSolution& sol);

}  // namespace kinkzeta::models
