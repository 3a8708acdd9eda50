#pragma once

#include <complex>
#include <functional>

namespace kinkzeta::quad {

using cplx = std::complex<double>;

struct Result {
    double value = 0;
    double error = 0;
};

struct CResult {
    cplx value{};
    double error = 0;
};

struct Options {
    double tol = 1e-12;     // relative
    unsigned max_depth = 15;
};

// Adaptive Gauss-Kronrod (61 point) on a finite interval.
Result integrate(const std::function<double(double)>& f, double a, double b, Options opt = {});
CResult integrate_c(const std::function<cplx(double)>& f, double a, double b, Options opt = {});

// Double-exponential rules; tolerate integrable endpoint singularities.
Result integrate_ts(const std::function<double(double)>& f, double a, double b, Options opt = {});
CResult integrate_ts_c(const std::function<cplx(double)>& f, double a, double b, Options opt = {});

// [a, inf)
Result integrate_inf(const std::function<double(double)>& f, double a, Options opt = {});
CResult integrate_inf_c(const std::function<cplx(double)>& f, double a, Options opt = {});

// Neumaier compensated sum for deterministic accumulation.
template <class T>
class KahanSum {
public:
    void add(T x)
    {
        T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            c_ += (sum_ - t) + x;
        else
            c_ += (x - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + c_; }

private:
    T sum_{};
    T c_{};
};

}  // namespace kinkzeta::quad
