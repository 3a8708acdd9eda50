#include "kinkzeta/quadrature.hpp"

#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace kinkzeta::quad {

namespace bq = boost::math::quadrature;

namespace {

template <class R, class F>
auto gk(const F& f, double a, double b, Options opt)
{
    double err = 0;
    R v = bq::gauss_kronrod<double, 61>::integrate(f, a, b, opt.max_depth, opt.tol, &err);
    return std::pair<R, double>{v, err};
}

template <class R, class F>
auto ts(const F& f, double a, double b, Options opt)
{
    thread_local bq::tanh_sinh<double> rule;
    double err = 0, l1 = 0;
    std::size_t levels = 0;
    R v = rule.integrate(f, a, b, opt.tol, &err, &l1, &levels);
    return std::pair<R, double>{v, err};
}

template <class R, class F>
auto es(const F& f, double a, Options opt)
{
    thread_local bq::exp_sinh<double> rule;
    double err = 0, l1 = 0;
    std::size_t levels = 0;
    R v = rule.integrate([&](double t) { return f(a + t); }, opt.tol, &err, &l1, &levels);
    return std::pair<R, double>{v, err};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, Options opt)
{
    auto [v, e] = gk<double>(f, a, b, opt);
    return {v, e};
}

CResult integrate_c(const std::function<cplx(double)>& f, double a, double b, Options opt)
{
    auto [v, e] = gk<cplx>(f, a, b, opt);
    return {v, e};
}

Result integrate_ts(const std::function<double(double)>& f, double a, double b, Options opt)
{
    auto [v, e] = ts<double>(f, a, b, opt);
    return {v, e};
}

CResult integrate_ts_c(const std::function<cplx(double)>& f, double a, double b, Options opt)
{
    // real and imaginary parts separately; tanh_sinh error control is real-valued
    auto re = ts<double>([&](double x) { return f(x).real(); }, a, b, opt);
    auto im = ts<double>([&](double x) { return f(x).imag(); }, a, b, opt);
    return {cplx(re.first, im.first), std::hypot(re.second, im.second)};
}

Result integrate_inf(const std::function<double(double)>& f, double a, Options opt)
{
    auto [v, e] = es<double>(f, a, opt);
    return {v, e};
}

CResult integrate_inf_c(const std::function<cplx(double)>& f, double a, Options opt)
{
    auto re = es<double>([&](double x) { return f(x).real(); }, a, opt);
    auto im = es<double>([&](double x) { return f(x).imag(); }, a, opt);
    return {cplx(re.first, im.first), std::hypot(re.second, im.second)};
}

}  // namespace kinkzeta::quad
