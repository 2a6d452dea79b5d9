#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace weyl::num {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Result of an adaptive quadrature: value plus an error estimate.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};
struct QuadResultC {
    cplx value{0.0, 0.0};
    double error = 0.0;
};

// Adaptive Gauss-Kronrod 15(7) on [a,b].  Throws precision_error when the
// interval stack exceeds max_intervals without reaching tol.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol, int max_intervals = 4000);
QuadResultC integrate_c(const std::function<cplx(double)>& f, double a, double b,
                        double tol, int max_intervals = 4000);

// Fixed-order Gauss-Legendre panel (16 nodes), no error estimate.
double gauss16(const std::function<double(double)>& f, double a, double b);
cplx gauss16_c(const std::function<cplx(double)>& f, double a, double b);

// Trapezoid over uniformly sampled values with step h.
double trapezoid(const std::vector<double>& y, double h);

// Natural cubic spline on a uniform grid; evaluates to 0 outside the grid
// when clamp_zero is set (used for compactly supported profiles).
class UniformSpline {
public:
    UniformSpline() = default;
    UniformSpline(double x0, double dx, std::vector<double> y, bool clamp_zero = false);
    double operator()(double x) const;
    bool empty() const { return y_.empty(); }
    double x_min() const { return x0_; }
    double x_max() const { return x0_ + dx_ * (static_cast<double>(y_.size()) - 1); }

private:
    double x0_ = 0.0, dx_ = 1.0;
    std::vector<double> y_, m_; // values and second derivatives
    bool clamp_zero_ = false;
};

// Polynomial extrapolation of f(eps) to eps = 0 through the sample points
// (Neville on arbitrary nodes).  `order_estimate` receives the difference
// between the last two extrapolation columns, a convergence diagnostic.
double richardson(const std::vector<double>& eps, const std::vector<double>& val,
                  double* order_estimate = nullptr);
cplx richardson_c(const std::vector<double>& eps, const std::vector<cplx>& val,
                  double* order_estimate = nullptr);

// Least-squares slope of y against x (used for scaling-law checks).
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace weyl::num
