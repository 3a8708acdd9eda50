#pragma once

#include <complex>
#include <vector>

namespace kinkzeta::poly {

using cplx = std::complex<double>;

// Coefficients in ascending order: c[0] + c[1] x + ...
template <class T, class X>
auto horner(const std::vector<T>& c, X x)
{
    using R = decltype(T{} * x);
    R r{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + R(*it);
    return r;
}

std::vector<double> derivative(const std::vector<double>& c);
std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b);
// Monic product of (x - r_i).
std::vector<double> from_roots(const std::vector<double>& roots);

// Real roots of a polynomial with only real roots, ascending, Newton-polished.
// Double roots are returned twice.
std::vector<double> real_roots(const std::vector<double>& c);

}  // namespace kinkzeta::poly
