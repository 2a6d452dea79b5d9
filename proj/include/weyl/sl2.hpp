#pragma once

#include "weyl/numeric.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace weyl::sl2 {

using num::cplx;

// Point u + iv in the upper half-plane, hyperbolic metric (du^2+dv^2)/v^2.
struct UpperHalfPoint {
    double u = 0.0;
    double v = 1.0;

    cplx z() const { return {u, v}; }
};

// Integer matrix (a b; c d) with det = 1.
struct IntegerMatrix2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    IntegerMatrix2() = default;
    IntegerMatrix2(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_);

    IntegerMatrix2 operator*(const IntegerMatrix2& o) const;
    IntegerMatrix2 inverse() const { return {d, -b, -c, a}; }
    bool is_identity_up_to_sign() const {
        return b == 0 && c == 0 && ((a == 1 && d == 1) || (a == -1 && d == -1));
    }
};

UpperHalfPoint moebius_act(const IntegerMatrix2& g, const UpperHalfPoint& z);

// Reduction to the standard fundamental domain F = {|Re z| <= 1/2 <= ... , |z| >= 1}.
// Tie-break: Re z* in [-1/2, 1/2); on |z*| = 1, Re z* <= 0.  Returns (z*, gamma)
// with z* = gamma z.
std::pair<UpperHalfPoint, IntegerMatrix2> reduce(const UpperHalfPoint& z);

// area(F_C) = pi/3 - 1/C for the truncation F_C = {z in F : Im z <= C}.
double area_truncated(double C);

// Point-pair invariant u(z, w) = |z-w|^2 / (v_z v_w); hyperbolic distance is
// acosh(1 + u/2).
double point_pair_u(const UpperHalfPoint& z, const UpperHalfPoint& w);
double hyperbolic_distance(const UpperHalfPoint& z, const UpperHalfPoint& w);

// The u-intervals of the slice F_C intersect {Im z = v}; empty below sqrt(3)/2.
std::vector<std::pair<double, double>> domain_slice(double v, double C);

// Adaptive integral of f over F_C against the hyperbolic measure du dv / v^2.
struct DomainIntegral {
    double value = 0.0;
    double error = 0.0;
};
DomainIntegral integrate_over_truncated(const std::function<double(const UpperHalfPoint&)>& f,
                                        double C, double tol);
// Same integral restricted to a coordinate box (used when the integrand has
// known small support).
DomainIntegral integrate_over_truncated_box(const std::function<double(const UpperHalfPoint&)>& f,
                                            double C, double u_lo, double u_hi, double v_lo,
                                            double v_hi, double tol);

// Group elements (other than +-I) that move some point of F_C by hyperbolic
// distance at most sigma; with the displacement minimum recorded.
struct SupportElement {
    IntegerMatrix2 gamma;
    double min_displacement = 0.0; // in the u-invariant
    double z_u = 0.0, z_v = 1.0;   // approximate argmin
};
std::vector<SupportElement> kernel_support_elements(double C, double sigma);

// Minimum of u(z, gamma z) over F_C by grid scan plus local refinement.
SupportElement min_displacement(const IntegerMatrix2& gamma, double C);

} // namespace weyl::sl2
