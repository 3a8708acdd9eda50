#include "kinkzeta/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

namespace kinkzeta::poly {

std::vector<double> derivative(const std::vector<double>& c)
{
    std::vector<double> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(double(i) * c[i]);
    if (d.empty()) d.push_back(0.0);
    return d;
}

std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b)
{
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<double> from_roots(const std::vector<double>& roots)
{
    std::vector<double> r{1.0};
    for (double x : roots) r = multiply(r, {-x, 1.0});
    return r;
}

namespace {

double newton(const std::vector<double>& c, double x)
{
    auto dc = derivative(c);
    for (int i = 0; i < 50; ++i) {
        double f = horner(c, x), df = horner(dc, x);
        if (df == 0.0) break;
        double dx = f / df;
        if (!std::isfinite(dx)) break;
        x -= dx;
        if (std::fabs(dx) <= 4e-16 * std::max(1.0, std::fabs(x))) break;
    }
    return x;
}

}  // namespace

std::vector<double> real_roots(const std::vector<double>& c_in)
{
    std::vector<double> c = c_in;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    const std::size_t deg = c.size() - 1;
    if (deg == 0) return {};

    // strip exact zero roots, Eigen's companion solver dislikes them
    std::size_t zeros = 0;
    while (zeros < deg && c[zeros] == 0.0) ++zeros;
    std::vector<double> reduced(c.begin() + long(zeros), c.end());

    std::vector<double> roots(zeros, 0.0);
    if (reduced.size() > 1) {
        Eigen::VectorXd coeffs(long(reduced.size()));
        for (std::size_t i = 0; i < reduced.size(); ++i) coeffs[long(i)] = reduced[i];
        Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
        for (const auto& z : solver.roots()) roots.push_back(z.real());
    }
    std::sort(roots.begin(), roots.end());

    double scale = 0;
    for (double r : roots) scale = std::max(scale, std::fabs(r));
    scale = std::max(scale, 1e-300);

    // pair up close roots as double roots and polish them on the derivative
    auto dc = derivative(c);
    std::vector<double> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i + 1 < roots.size() && std::fabs(roots[i + 1] - roots[i]) < 1e-6 * scale) {
            double r = newton(dc, 0.5 * (roots[i] + roots[i + 1]));
            out.push_back(r);
            out.push_back(r);
            ++i;
        } else {
            out.push_back(newton(c, roots[i]));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kinkzeta::poly
