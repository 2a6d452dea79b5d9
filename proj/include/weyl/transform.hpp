#pragma once

#include "weyl/numeric.hpp"
#include "weyl/sl2.hpp"

#include <vector>

namespace weyl::transform {

using num::cplx;
using sl2::UpperHalfPoint;

// Bi-K-invariant test function, stored as its symmetric A-profile:
// h(v) = p(log v) with p even, nonnegative, supported in [-sigma, sigma].
// The transform pair used throughout is
//     ghat(nu) = Integral p(x) e^{nu x} dx,
// the Mellin transform of the rho-shifted Harish transform, so that
// ghat(nu) = ghat(-nu) and ghat(it) = |b_hat(t)|^2 >= 0 for the self-convolved
// bump underlying p.
struct TestFunctionSpec {
    double sigma = 0.2;
    double x0 = 0.0, dx = 0.0;  // uniform log-grid x_k = x0 + k dx
    std::vector<double> h;      // profile samples p(x_k)
    double normalization = 1.0; // scale applied so that Integral ghat(it) dt = 1

    double profile(double x) const; // linear interpolation, 0 outside support
};

// p = b * b for a smooth bump b supported in half the target interval, then
// normalized.  grid_size is the number of profile intervals (a power of two).
TestFunctionSpec build_base_bump(double sigma, int grid_size = 4096);

// ghat(nu) by direct quadrature of the profile against e^{nu x}.
cplx harish_to_selberg(const TestFunctionSpec& spec, cplx nu);

enum class Kernel { base, smeared };

// Sampled transform on the imaginary axis plus everything derived from it
// (smeared window, weighted Fourier kernels, radial profiles).
struct TransformTable {
    TestFunctionSpec spec;
    double T = 0.0;     // smear half-width; 0 = unsmeared table
    double t_max = 0.0; // grid covers [-t_max, t_max]
    double t_step = 0.05;
    std::vector<double> ghat;   // ghat(i t_k)
    std::vector<double> ghat_T; // smeared values (all zero when T = 0)

    // W(L) = Integral ghat(it) t tanh(pi t) e^{-itL} dt, the kernel of the
    // spherical inversion after the K-average is peeled off.
    num::UniformSpline w_core_base, w_far_base;
    num::UniformSpline w_core_smear, w_far_smear;
    num::UniformSpline radial_base, radial_smear; // g(d) on [0, d_support]
    double w_core_max = 0.0, w_far_max = 0.0, d_support = 0.0;

    double ghat_interp(double t, Kernel k) const; // linear in |t| on the grid
    double w_value(double L, Kernel k) const;
};

TransformTable build_transform_table(const TestFunctionSpec& spec, double T = 0.0);

// New table with the transform smeared by the window [-T, T].
TransformTable smear(const TransformTable& table, double T);

// ghat_T at an arbitrary complex point: Integral p(x) e^{nu x} 2 sin(Tx)/x dx
// (reduces to the plain Mellin value for the base kernel).
cplx ghat_at(const TransformTable& table, cplx nu, Kernel k = Kernel::smeared);

// g_T(i) = (1/4pi) Integral ghat_T(it) t tanh(pi t) dt.
double g_at_identity(const TransformTable& table, Kernel k = Kernel::smeared);

// Spherical function phi~_s(z) = (1/pi) Integral_0^pi Im(k_theta z)^s d theta.
cplx spherical_function(cplx s, const UpperHalfPoint& z);

// g_T at z through the inversion integral (spherically symmetric around i).
double pointwise_from_transform(const TransformTable& table, const UpperHalfPoint& z,
                                Kernel k = Kernel::smeared);

// Value of g_T as a function of the point-pair invariant u(z, w).
double radial_from_invariant(const TransformTable& table, double u_invariant,
                             Kernel k = Kernel::smeared);

// Integral over G/K of g(z) v^{1/2+nu} dA by 2-D quadrature; contract: equals
// ghat(nu).  Always evaluates the unsmeared kernel.
cplx selberg_eigen_identity(const TransformTable& table, cplx nu, double tol = 1e-6);

} // namespace weyl::transform
