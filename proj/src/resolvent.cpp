#include "kinkzeta/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kinkzeta/errors.hpp"
#include "kinkzeta/polynomial.hpp"
#include "kinkzeta/quadrature.hpp"
#include "kinkzeta/specfun.hpp"

namespace kinkzeta::resolvent {

using std::numbers::pi;

namespace {

struct Jac {
    double sn, cn, dn;
};

// sn, cn, dn at parameter m = k^2, including m < 0 through the imaginary modulus
Jac jacobi_param(double u, double m)
{
    if (m >= 0) {
        auto j = specfun::jacobi_sn_cn_dn(u, std::sqrt(m));
        return {j.sn, j.cn, j.dn};
    }
    auto j = specfun::jacobi_imag_modulus(u, std::sqrt(-m));
    return {j.sn, j.cn, j.dn};
}

// complete integrals at parameter m
std::pair<double, double> KE_param(double m)
{
    if (m >= 0) {
        double k = std::sqrt(m);
        return {specfun::ellipK(k), specfun::ellipE(k)};
    }
    double kappa = std::sqrt(-m);
    return {specfun::ellipK_imag(kappa), specfun::ellipE_imag(kappa)};
}

double root_scale(const std::vector<double>& roots)
{
    double s = 0;
    for (double r : roots) s = std::max(s, std::fabs(r));
    return std::max(s, 1e-300);
}

}  // namespace

std::string to_string(CaseTag t)
{
    switch (t) {
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::C: return "C";
    case CaseTag::D: return "D";
    case CaseTag::Nahm: return "Nahm";
    }
    return "?";
}

CaseTag case_from_string(const std::string& s)
{
    if (s == "A" || s == "a") return CaseTag::A;
    if (s == "B" || s == "b") return CaseTag::B;
    if (s == "C" || s == "c") return CaseTag::C;
    if (s == "D" || s == "d") return CaseTag::D;
    if (s == "Nahm" || s == "nahm" || s == "D0" || s == "d0") return CaseTag::Nahm;
    throw DomainError("unknown case tag: " + s);
}

bool ResolventPolynomial::is_kink() const { return m == 1.0; }

double ResolventPolynomial::period() const
{
    if (is_kink()) return std::numeric_limits<double>::infinity();
    return 2 * KE_param(m).first / b;
}

double ResolventPolynomial::z(double x) const
{
    if (is_kink()) {
        double s = 1 / std::cosh(b * x);
        return s * s;
    }
    double c = jacobi_param(b * x, m).cn;
    return c * c;
}

double ResolventPolynomial::dz(double x) const
{
    if (is_kink()) {
        double s = 1 / std::cosh(b * x);
        return -2 * b * s * s * std::tanh(b * x);
    }
    auto j = jacobi_param(b * x, m);
    return -2 * b * j.cn * j.sn * j.dn;
}

double ResolventPolynomial::d2z(double x) const
{
    if (is_kink()) {
        double s = 1 / std::cosh(b * x), t = std::tanh(b * x);
        return -2 * b * b * (s * s * s * s - 2 * s * s * t * t);
    }
    auto j = jacobi_param(b * x, m);
    double s2 = j.sn * j.sn, c2 = j.cn * j.cn, d2 = j.dn * j.dn;
    return -2 * b * b * (c2 * d2 - s2 * d2 - m * s2 * c2);
}

double ResolventPolynomial::rho(double zz) const
{
    if (is_kink()) return zz * zz * (1 - zz);
    return zz * (1 - zz) * (1 - m + m * zz);
}

double ResolventPolynomial::drho(double zz) const
{
    if (is_kink()) return 2 * zz - 3 * zz * zz;
    // d/dz [z (1 - z)(1 - m + m z)]
    return (1 - 2 * zz) * (1 - m + m * zz) + m * zz * (1 - zz);
}

double ResolventPolynomial::u(double zz) const
{
    const double b2 = b * b;
    switch (tag) {
    case CaseTag::A: return b2 * (1 - 2 * zz);
    case CaseTag::B: return b2 * (2 * m - 1 - 2 * m * zz);
    case CaseTag::C: return b2 * (4 - 6 * zz);
    case CaseTag::D:
    case CaseTag::Nahm: return b2 * (5 * m - 1 - 6 * m * zz);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

cplx ResolventPolynomial::P(cplx p, double zz, int order) const
{
    cplx acc = 0, pw = 1;
    for (const auto& c : P_coeffs) {
        std::vector<double> d = c;
        for (int i = 0; i < order; ++i) d = poly::derivative(d);
        acc += pw * poly::horner(d, zz);
        pw *= p;
    }
    return acc;
}

cplx ResolventPolynomial::Q(cplx p) const { return poly::horner(Q_coeffs, p); }

cplx ResolventPolynomial::sqrtQ(cplx p) const
{
    cplx r = 1;
    for (double root : Q_roots) r *= std::sqrt(p - root);
    return r;
}

cplx ResolventPolynomial::G(cplx p, double x) const { return P(p, z(x)) / (2.0 * sqrtQ(p)); }

std::vector<double> ResolventPolynomial::simple_roots() const
{
    std::vector<double> out;
    const double tol = 1e-7 * root_scale(Q_roots);
    for (std::size_t i = 0; i < Q_roots.size(); ++i) {
        bool paired = (i + 1 < Q_roots.size() && std::fabs(Q_roots[i + 1] - Q_roots[i]) < tol) ||
                      (i > 0 && std::fabs(Q_roots[i] - Q_roots[i - 1]) < tol);
        if (!paired) out.push_back(Q_roots[i]);
    }
    return out;
}

std::vector<double> ResolventPolynomial::double_roots() const
{
    std::vector<double> out;
    const double tol = 1e-7 * root_scale(Q_roots);
    for (std::size_t i = 0; i + 1 < Q_roots.size(); ++i) {
        if (std::fabs(Q_roots[i + 1] - Q_roots[i]) < tol) {
            out.push_back(0.5 * (Q_roots[i] + Q_roots[i + 1]));
            ++i;
        }
    }
    return out;
}

ResolventPolynomial build_resolvent(CaseTag tag, double b, double k)
{
    if (!(b > 0)) throw DomainError("build_resolvent: b must be positive");
    ResolventPolynomial rp;
    rp.tag = tag;
    rp.b = b;
    const double b2 = b * b, b4 = b2 * b2;

    switch (tag) {
    case CaseTag::A:
    case CaseTag::C: rp.k = 1; break;
    case CaseTag::B:
    case CaseTag::D:
        if (!(k > 0 && k <= 1)) throw DomainError("build_resolvent: modulus must lie in (0, 1]");
        rp.k = k;
        break;
    case CaseTag::Nahm: rp.k = 0; break;
    }
    rp.m = tag == CaseTag::Nahm ? -1.0 : rp.k * rp.k;
    const double m = rp.m;

    if (tag == CaseTag::A || tag == CaseTag::B) {
        // P = p + m b^2 z, Q = p^3 + b^2 (2m - 1) p^2 + b^4 m (m - 1) p
        rp.P_coeffs = {{0.0, m * b2}, {1.0}};
        rp.Q_coeffs = {0.0, b4 * m * (m - 1), b2 * (2 * m - 1), 1.0};
    } else {
        // P = p^2 + P1 p + P2 with P1 = (q4 - u)/2 and P2 fixed by the z-form of the Hermit equation
        rp.P_coeffs = {{0.0, 9 * b4 * m * (1 - m), 9 * b4 * m * m}, {3 * b2, 3 * m * b2}, {1.0}};
        double q4 = 5 * b2 * (1 + m);
        double q3 = 3 * b4 * (1 + 9 * m + m * m);
        double q2 = -9 * b4 * b2 * (m + 1) * (m * m - 4 * m + 1);
        double q1 = -27 * m * (1 - m) * (1 - m) * b4 * b4;
        rp.Q_coeffs = {0.0, q1, q2, q3, q4, 1.0};
    }
    rp.Q_roots = poly::real_roots(rp.Q_coeffs);
    return rp;
}

CaseBinding case_for(const models::ClassicalSolution& sol)
{
    using models::Family;
    using models::Kind;
    if (sol.kind == Kind::constant) throw UnsupportedError("constant solutions have a constant potential");
    const bool kink = sol.kind != Kind::periodic;
    switch (sol.spec.family) {
    case Family::GL_phi4:
        if (kink) return {CaseTag::C, sol.b, 1.0, 4 * sol.b * sol.b};
        return {CaseTag::D, sol.b, sol.k, 0.0};
    case Family::SineGordon:
        if (kink) return {CaseTag::A, sol.b, 1.0, 0.0};
        return {CaseTag::B, sol.b, sol.k, 0.0};
    case Family::Nahm: return {CaseTag::Nahm, sol.spec.w, 0.0, 0.0};
    }
    throw UnsupportedError("unknown family");
}

double hermit_residual_scaled(const ResolventPolynomial& rp, cplx p, double x, double scale)
{
    const double zz = rp.z(x), z1 = rp.dz(x), z2 = rp.d2z(x);
    const cplx den = 2.0 * rp.sqrtQ(p) / scale;
    const cplx Pz = rp.P(p, zz, 1), Pzz = rp.P(p, zz, 2);
    const cplx g = rp.P(p, zz) / den;
    const cplx g1 = Pz * z1 / den;
    const cplx g2 = (Pzz * z1 * z1 + Pz * z2) / den;
    return std::abs(2.0 * g * g2 - g1 * g1 - 4.0 * (rp.u(zz) + p) * g * g + 1.0);
}

double hermit_residual(const ResolventPolynomial& rp, cplx p, double x) { return hermit_residual_scaled(rp, p, x, 1.0); }

std::vector<double> band_edges(const ResolventPolynomial& rp) { return rp.simple_roots(); }

std::vector<double> z_moments(const ResolventPolynomial& rp)
{
    const double b = rp.b, m = rp.m;
    if (rp.is_kink()) {
        // int sech^2 = 2/b, int sech^4 = 4/(3b); the constant moment diverges
        return {std::numeric_limits<double>::infinity(), 2 / b, 4 / (3 * b)};
    }
    auto [K, E] = KE_param(m);
    double s1 = 2 / b * (K - E) / m;                                   // int sn^2
    double s2 = 2 / b * ((2 + m) * K - 2 * (1 + m) * E) / (3 * m * m);  // int sn^4
    double m0 = 2 * K / b;
    return {m0, m0 - s1, m0 - 2 * s1 + s2};
}

std::vector<double> numerator(const ResolventPolynomial& rp, Normalization norm)
{
    auto M = z_moments(rp);
    const std::size_t first = rp.is_kink() ? 1 : 0;
    std::vector<double> N;
    for (const auto& c : rp.P_coeffs) {
        double acc = 0;
        for (std::size_t n = first; n < c.size(); ++n) acc += c[n] * M[n];
        N.push_back(acc);
    }
    if (norm == Normalization::per_length && !rp.is_kink()) {
        double L = rp.period();
        for (double& v : N) v /= L;
    }
    return N;
}

cplx gamma_hat(const ResolventPolynomial& rp, cplx p, Normalization norm)
{
    double dist = std::numeric_limits<double>::infinity();
    for (double r : rp.Q_roots) dist = std::min(dist, std::abs(p - r));
    if (dist < 1e-6) throw PoleError("gamma_hat: p too close to a root of Q");
    return poly::horner(numerator(rp, norm), p) / (2.0 * rp.sqrtQ(p));
}

std::vector<double> nahm_numerator_paper_formula(double b)
{
    double K = specfun::ellipK_imag(1.0), E = specfun::ellipE_imag(1.0);
    double b2 = b * b;
    return {-48 * b2 * b2 * K, 3 * b2 * (K - E), 2 * K};
}

SpectralData spectral_data(const ResolventPolynomial& rp, Normalization norm)
{
    SpectralData sd;
    sd.N = numerator(rp, norm);
    sd.simple = rp.simple_roots();
    sd.doubles = rp.double_roots();
    const double eps = 1e-12 * root_scale(rp.Q_roots);

    const auto& s = sd.simple;
    if (s.size() % 2 == 0) throw UnsupportedError("spectral_data: expected an odd number of simple roots");
    sd.cuts.push_back({-std::numeric_limits<double>::infinity(), s[0], true, s[0] > eps});
    for (std::size_t i = 1; i + 1 < s.size(); i += 2) sd.cuts.push_back({s[i], s[i + 1], false, s[i + 1] > eps});

    for (std::size_t i = 0; i < sd.doubles.size(); ++i) {
        double d = sd.doubles[i];
        double dprime = 1;
        for (std::size_t j = 0; j < sd.doubles.size(); ++j)
            if (j != i) dprime *= d - sd.doubles[j];
        int above = 0;
        double absS = 1;
        for (double r : s) {
            if (r > d) ++above;
            absS *= std::fabs(d - r);
        }
        if (above % 2 == 1) throw UnsupportedError("spectral_data: pole inside a branch cut");
        double R = ((above / 2) % 2 == 0 ? 1.0 : -1.0) * std::sqrt(absS);
        double res = poly::horner(sd.N, d) / (2 * dprime * R);
        sd.poles.push_back({d, res, d > eps});
    }
    return sd;
}

double spectral_density(const SpectralData& sd, double lambda)
{
    const double p = -lambda;
    int above = 0;
    double absS = 1;
    for (double r : sd.simple) {
        if (r > p) ++above;
        absS *= std::fabs(p - r);
    }
    if (above % 2 == 0) return 0.0;
    double D = 1;
    for (double d : sd.doubles) D *= p - d;
    double sigma = ((above - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sigma * poly::horner(sd.N, p) / (2 * pi * D * std::sqrt(absS));
}

namespace {

// rho(lambda) with the endpoint factors listed in `skip` removed from |S|
double regular_density(const SpectralData& sd, double p, double sigma, std::initializer_list<std::size_t> skip)
{
    double absS = 1;
    for (std::size_t i = 0; i < sd.simple.size(); ++i) {
        if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
        absS *= std::fabs(p - sd.simple[i]);
    }
    double D = 1;
    for (double d : sd.doubles) D *= p - d;
    return sigma * poly::horner(sd.N, p) / (2 * pi * D * std::sqrt(absS));
}

}  // namespace

double cut_density_regular(const SpectralData& sd, std::size_t c, double p)
{
    if (c >= sd.cuts.size()) throw DomainError("cut_density_regular: no such cut");
    if (sd.cuts[c].semi_infinite) {
        const int n = int(sd.simple.size());
        return regular_density(sd, p, ((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0, {0});
    }
    const std::size_t ia = 2 * c - 1, ib = 2 * c;
    const int above = int(sd.simple.size() - ib);
    return regular_density(sd, p, ((above - 1) / 2) % 2 == 0 ? 1.0 : -1.0, {ia, ib});
}

TraceValue invert_laplace_gamma(const ResolventPolynomial& rp, double t, Normalization norm, double tol)
{
    if (!(t > 0)) throw DomainError("invert_laplace_gamma: t must be positive");
    SpectralData sd = spectral_data(rp, norm);
    TraceValue out;
    quad::KahanSum<double> stable, unstable;
    quad::Options opt{tol, 18};

    for (std::size_t c = 0; c < sd.cuts.size(); ++c) {
        const Cut& cut = sd.cuts[c];
        quad::Result r;
        if (cut.semi_infinite) {
            // lambda = lambda1 + r^2 absorbs the square-root endpoint
            const double l1 = -cut.p_hi;
            auto f = [&](double x) {
                double lam = l1 + x * x;
                return 2 * cut_density_regular(sd, c, -lam) * std::exp(-lam * t);
            };
            double R = std::sqrt(80.0 / t);
            r = quad::integrate(f, 0.0, R, opt);
        } else {
            const double a = cut.p_lo, bb = cut.p_hi;
            auto f = [&](double th) {
                double p = a + (bb - a) * (1 - std::cos(th)) / 2;
                return cut_density_regular(sd, c, p) * std::exp(p * t);
            };
            r = quad::integrate(f, 0.0, pi, opt);
        }
        out.error += r.error;
        (cut.unstable ? unstable : stable).add(r.value);
        if (cut.unstable) out.unstable_sector = true;
    }
    for (const Pole& pl : sd.poles) {
        double v = pl.residue * std::exp(pl.p * t);
        (pl.unstable ? unstable : stable).add(v);
        if (pl.unstable) out.unstable_sector = true;
    }
    out.stable = stable.value();
    out.unstable = unstable.value();
    out.value = out.stable + out.unstable;
    if (!std::isfinite(out.value)) throw ConvergenceError("invert_laplace_gamma: non-finite result");
    return out;
}

}  // namespace kinkzeta::resolvent
