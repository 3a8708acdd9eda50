#include "kinkzeta/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "kinkzeta/errors.hpp"

namespace kinkzeta::oracle {

using std::numbers::pi;

double LatticeSpec::spacing() const
{
    return bc == Boundary::dirichlet ? (x_max - x_min) / (n - 1) : (x_max - x_min) / n;
}

std::vector<double> LatticeSpec::nodes() const
{
    std::vector<double> x(n);
    const double h = spacing();
    for (int i = 0; i < n; ++i) x[i] = x_min + i * h;
    return x;
}

namespace {

void check(const LatticeSpec& spec)
{
    if (spec.n < 3) throw DomainError("lattice: need at least 3 points");
    if (!(spec.x_max > spec.x_min)) throw DomainError("lattice: empty interval");
    if (!spec.u) throw DomainError("lattice: no potential");
}

std::vector<double> diagonal(const LatticeSpec& spec)
{
    const double h = spec.spacing();
    auto x = spec.nodes();
    std::vector<double> d(spec.n);
    for (int i = 0; i < spec.n; ++i) d[i] = 2 / (h * h) + spec.u(x[i]);
    return d;
}

double tiny_pivot(double D, double scale)
{
    const double eps = std::numeric_limits<double>::epsilon() * scale;
    return std::fabs(D) < eps ? -eps : D;
}

// Sturm count for the Dirichlet tridiagonal matrix
int count_dirichlet(const std::vector<double>& d, double e, double sigma, double scale)
{
    int neg = 0;
    double D = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        D = d[i] - sigma - (i ? e * e / D : 0.0);
        D = tiny_pivot(D, scale);
        if (D < 0) ++neg;
    }
    return neg;
}

// Inertia of the periodic matrix with corner -e^{i theta}/h^2: the last unknown is eliminated
// as an arrow, LDL^H on the leading tridiagonal block.
int count_periodic(const std::vector<double>& d, double e, double theta, double sigma, double scale)
{
    const int n = int(d.size());
    const std::complex<double> corner = e * std::polar(1.0, -theta);  // A[0][n-1]
    int neg = 0;
    double D = 0;
    std::complex<double> w = 0;
    double s = d[n - 1] - sigma;
    for (int i = 0; i < n - 1; ++i) {
        std::complex<double> orig = 0;
        if (i == 0) orig += corner;
        if (i == n - 2) orig += e;
        if (i == 0) {
            D = d[0] - sigma;
            w = orig;
        } else {
            w = orig - e * w / D;
            D = d[i] - sigma - e * e / D;
        }
        D = tiny_pivot(D, scale);
        if (D < 0) ++neg;
        s -= std::norm(w) / D;
    }
    if (s < 0) ++neg;
    return neg;
}

struct Prepared {
    std::vector<double> d;
    double e, lo, hi, scale;
};

Prepared prepare(const LatticeSpec& spec)
{
    check(spec);
    Prepared p;
    p.d = diagonal(spec);
    const double h = spec.spacing();
    p.e = -1 / (h * h);
    auto [mn, mx] = std::minmax_element(p.d.begin(), p.d.end());
    p.lo = *mn - 2 * std::fabs(p.e) - 1;
    p.hi = *mx + 2 * std::fabs(p.e) + 1;
    p.scale = std::max(std::fabs(p.lo), std::fabs(p.hi));
    return p;
}

int count(const LatticeSpec& spec, const Prepared& p, double sigma, double theta)
{
    return spec.bc == Boundary::dirichlet ? count_dirichlet(p.d, p.e, sigma, p.scale)
                                          : count_periodic(p.d, p.e, theta, sigma, p.scale);
}

std::vector<double> bisect_lowest(const LatticeSpec& spec, const Prepared& p, int cnt, double theta)
{
    std::vector<double> out(cnt);
    for (int j = 0; j < cnt; ++j) {
        double lo = j ? out[j - 1] - 1e-12 * p.scale : p.lo, hi = p.hi;
        while (hi - lo > 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(lo) + std::fabs(hi))) {
            double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            if (count(spec, p, mid, theta) > j)
                hi = mid;
            else
                lo = mid;
        }
        out[j] = 0.5 * (lo + hi);
    }
    return out;
}

}  // namespace

int count_below(const LatticeSpec& spec, double sigma, double theta)
{
    return count(spec, prepare(spec), sigma, theta);
}

std::vector<double> eigenvalues(const LatticeSpec& spec, int cnt, double theta)
{
    Prepared p = prepare(spec);
    cnt = std::clamp(cnt, 0, spec.n);
    // whole Dirichlet spectrum by implicit QL
    if (spec.bc == Boundary::dirichlet && cnt > 64) {
        Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(p.d.data(), spec.n);
        Eigen::VectorXd sub = Eigen::VectorXd::Constant(spec.n - 1, p.e);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw ConvergenceError("lattice: tridiagonal QL failed");
        std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + cnt);
        return ev;
    }
    return bisect_lowest(spec, p, cnt, theta);
}

std::vector<double> eigenvalues(const LatticeSpec& spec, int cnt)
{
    return eigenvalues(spec, cnt, 0.0);
}

std::vector<RelativeTrace> relative_heat_trace(const LatticeSpec& spec, const LatticeSpec& spec0,
                                               const std::vector<double>& ts)
{
    if (spec.n != spec0.n || spec.x_min != spec0.x_min || spec.x_max != spec0.x_max || spec.bc != spec0.bc)
        throw DomainError("relative_heat_trace: lattices differ");
    auto ev = eigenvalues(spec, spec.n);
    auto ev0 = eigenvalues(spec0, spec0.n);
    std::vector<RelativeTrace> out;
    const std::size_t top = ev.size() - std::max<std::size_t>(1, ev.size() / 100);
    for (double t : ts) {
        if (!(t > 0)) throw DomainError("relative_heat_trace: t must be positive");
        RelativeTrace r;
        double sum = 0, c = 0;
        for (std::size_t i = 0; i < ev.size(); ++i) {
            double term = std::exp(-ev[i] * t) - std::exp(-ev0[i] * t);
            double y = term - c, tt = sum + y;
            c = (tt - sum) - y;
            sum = tt;
            if (i >= top) r.tail = std::max(r.tail, std::fabs(term));
        }
        r.value = sum;
        r.truncation_warning = r.tail > 1e-6;
        out.push_back(r);
    }
    return out;
}

RelativeTrace relative_heat_trace(const LatticeSpec& spec, const LatticeSpec& spec0, double t)
{
    return relative_heat_trace(spec, spec0, std::vector<double>{t}).front();
}

std::vector<double> band_edges_lattice(const LatticeSpec& spec, int cnt)
{
    if (spec.bc != Boundary::periodic) throw DomainError("band_edges_lattice: needs a periodic lattice");
    auto a = eigenvalues(spec, cnt, 0.0);
    auto b = eigenvalues(spec, cnt, pi);
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.resize(cnt);
    return a;
}

LatticeSpec lattice_for(const resolvent::ResolventPolynomial& rp, int n)
{
    LatticeSpec s;
    s.n = n;
    s.u = [rp](double x) { return rp.u_x(x); };
    if (rp.is_kink()) {
        s.x_min = -20 / rp.b;
        s.x_max = 20 / rp.b;
        s.bc = Boundary::dirichlet;
    } else {
        s.x_min = 0;
        s.x_max = rp.period();
        s.bc = Boundary::periodic;
    }
    return s;
}

LatticeSpec vacuum_lattice_for(const resolvent::ResolventPolynomial& rp, int n)
{
    if (!rp.is_kink()) throw DomainError("vacuum_lattice_for: only kink cases have a constant background");
    LatticeSpec s = lattice_for(rp, n);
    const double u0 = rp.u(0.0);
    s.u = [u0](double) { return u0; };
    return s;
}

}  // namespace kinkzeta::oracle
