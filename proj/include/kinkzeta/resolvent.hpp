#pragma once

#include <complex>
#include <string>
#include <vector>

#include "kinkzeta/models.hpp"

namespace kinkzeta::resolvent {

using cplx = std::complex<double>;

// A: SG kink, B: SG periodic, C: GL kink, D: GL periodic, Nahm: D at k^2 = -1.
enum class CaseTag { A, B, C, D, Nahm };

std::string to_string(CaseTag t);
CaseTag case_from_string(const std::string& s);

// Normalization of the integrated diagonal: one period of z(x) or unit length.
enum class Normalization { per_period, per_length };

class ResolventPolynomial {
public:
    CaseTag tag = CaseTag::A;
    double b = 1;
    double k = 0;        // modulus (1 for the kink cases)
    double m = 1;        // parameter k^2; -1 for Nahm
    // P(p, z) = sum_j P_coeffs[j](z) p^j, inner vectors ascending in z
    std::vector<std::vector<double>> P_coeffs;
    std::vector<double> Q_coeffs;  // ascending in p, monic
    std::vector<double> Q_roots;   // ascending, with multiplicity

    bool is_kink() const;
    // length in x of one period of z(x); infinite for kinks
    double period() const;

    double z(double x) const;
    double dz(double x) const;
    double d2z(double x) const;
    double rho(double z) const;
    double drho(double z) const;
    double u(double z) const;
    double u_x(double x) const { return u(z(x)); }

    cplx P(cplx p, double z, int dz_order = 0) const;
    cplx Q(cplx p) const;
    // sqrt(Q) on the physical sheet, ~ p^{deg/2} for large positive p
    cplx sqrtQ(cplx p) const;
    cplx G(cplx p, double x) const;

    std::vector<double> simple_roots() const;
    std::vector<double> double_roots() const;
};

ResolventPolynomial build_resolvent(CaseTag tag, double b, double k = 0);

struct CaseBinding {
    CaseTag tag;
    double b;
    double k;
    double shift;  // u_case(x) = u_solution(x) + shift
};
CaseBinding case_for(const models::ClassicalSolution& sol);

double hermit_residual(const ResolventPolynomial& rp, cplx p, double x);
// same residual with G supplied by the caller (negative controls)
double hermit_residual_scaled(const ResolventPolynomial& rp, cplx p, double x, double scale);

// negatives of the band-edge eigenvalues: the simple roots of Q, ascending
std::vector<double> band_edges(const ResolventPolynomial& rp);

// integrals of z^n over one period (n = 0, 1, 2); kinks: over R, n >= 1 only
std::vector<double> z_moments(const ResolventPolynomial& rp);

// gamma_hat(p) = N(p) / (2 sqrt Q(p)); kinks are vacuum-subtracted.
std::vector<double> numerator(const ResolventPolynomial& rp, Normalization norm = Normalization::per_period);
cplx gamma_hat(const ResolventPolynomial& rp, cplx p, Normalization norm = Normalization::per_period);

// Spectral representation gamma(t) = int rho(l) e^{-l t} dl + sum_r R e^{r t}.
struct Cut {
    double p_lo, p_hi;  // p_lo = -inf for the outer cut
    bool semi_infinite;
    bool unstable;      // lies in p > 0 (negative eigenvalues)
};
struct Pole {
    double p;
    double residue;
    bool unstable;
};
struct SpectralData {
    std::vector<double> N;  // numerator, ascending in p
    std::vector<double> simple, doubles;
    std::vector<Cut> cuts;
    std::vector<Pole> poles;
};

SpectralData spectral_data(const ResolventPolynomial& rp, Normalization norm = Normalization::per_period);
// density at lambda = -p inside a cut
double spectral_density(const SpectralData& sd, double lambda);
// density on cut `c` with the square-root factors of its endpoints removed, at p = -lambda
double cut_density_regular(const SpectralData& sd, std::size_t c, double p);

struct TraceValue {
    double value = 0;     // stable + unstable
    double stable = 0;
    double unstable = 0;  // contributions from p > 0
    double error = 0;
    bool unstable_sector = false;
};

TraceValue invert_laplace_gamma(const ResolventPolynomial& rp, double t, Normalization norm = Normalization::per_period,
                                double tol = 1e-12);

// Nahm numerator with the literature coefficients 2K(i), 3b^2(K(i)-E(i)), -48b^4 K(i).
std::vector<double> nahm_numerator_paper_formula(double b);

}  // namespace kinkzeta::resolvent
