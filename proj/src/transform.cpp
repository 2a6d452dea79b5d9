#include "weyl/transform.hpp"
#include "weyl/errors.hpp"

#include <algorithm>
#include <cmath>

namespace weyl::transform {

using num::pi;

double TestFunctionSpec::profile(double x) const {
    const double t = (x - x0) / dx;
    if (t < 0.0 || t > static_cast<double>(h.size() - 1)) return 0.0;
    const auto i = std::min(static_cast<std::size_t>(t), h.size() - 2);
    const double u = t - static_cast<double>(i);
    return (1.0 - u) * h[i] + u * h[i + 1];
}

TestFunctionSpec build_base_bump(double sigma, int grid_size) {
    if (sigma <= 0.0) throw validation_error("build_base_bump: sigma must be positive");
    if (grid_size < 64 || grid_size % 2 != 0)
        throw validation_error("build_base_bump: grid_size must be even and >= 64");
    const int M = grid_size / 2;
    const double h = sigma / static_cast<double>(M);

    // bump on [-sigma/2, sigma/2], exactly even by construction
    std::vector<double> b(M + 1, 0.0);
    for (int j = 0; j <= M; ++j) {
        const double y = std::abs(-0.5 * sigma + j * h);
        const double r = 2.0 * y / sigma;
        if (r < 1.0) b[j] = std::exp(-1.0 / (1.0 - r * r));
    }

    TestFunctionSpec spec;
    spec.sigma = sigma;
    spec.dx = h;
    spec.x0 = -sigma;
    spec.h.assign(2 * M + 1, 0.0);
    for (int k = 0; k <= M; ++k) {
        double s = 0.0;
        for (int j = std::max(0, k - M); j <= std::min(M, k); ++j) s += b[j] * b[k - j];
        spec.h[k] = s * h;
        spec.h[2 * M - k] = spec.h[k]; // p is even; mirror to keep it exact
    }
    // first normalization: p(0) = 1/(2 pi) makes Integral ghat(it) dt = 1
    const double scale = 1.0 / (2.0 * pi * spec.h[M]);
    for (auto& v : spec.h) v *= scale;
    spec.normalization = scale;
    return spec;
}

cplx harish_to_selberg(const TestFunctionSpec& spec, cplx nu) {
    if (spec.h.empty()) throw validation_error("harish_to_selberg: empty profile");
    if (std::abs(nu.imag()) * spec.dx > 0.5)
        throw precision_error("harish_to_selberg: profile grid too coarse for |Im nu|");
    cplx sum = 0.0;
    for (std::size_t k = 0; k < spec.h.size(); ++k) {
        if (spec.h[k] == 0.0) continue;
        const double x = spec.x0 + spec.dx * static_cast<double>(k);
        sum += spec.h[k] * std::exp(nu * x);
    }
    return sum * spec.dx; // profile vanishes at both ends
}

namespace {

// window kernel 2 sin(Tx)/x with its x -> 0 limit
double sinc_window(double T, double x) {
    if (std::abs(x) < 1e-12) return 2.0 * T;
    return 2.0 * std::sin(T * x) / x;
}

// sum over the profile grid of p(x) w(x) cos(t x), evaluated for a whole
// t-grid with rotation recurrences
std::vector<double> profile_cos_transform(const TestFunctionSpec& spec,
                                          const std::vector<double>& weight,
                                          const std::vector<double>& ts) {
    std::vector<double> out(ts.size(), 0.0);
    const std::size_t n = spec.h.size();
    for (std::size_t it = 0; it < ts.size(); ++it) {
        const double t = ts[it];
        const cplx rot = std::exp(cplx{0.0, t * spec.dx});
        cplx z = std::exp(cplx{0.0, t * spec.x0});
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            s += spec.h[k] * weight[k] * z.real();
            z *= rot;
        }
        out[it] = s * spec.dx;
    }
    return out;
}

std::vector<double> ones_weight(std::size_t n) { return std::vector<double>(n, 1.0); }

std::vector<double> window_weight(const TestFunctionSpec& spec, double T) {
    std::vector<double> w(spec.h.size());
    for (std::size_t k = 0; k < w.size(); ++k)
        w[k] = sinc_window(T, spec.x0 + spec.dx * static_cast<double>(k));
    return w;
}

// W(L) over an L-grid from sampled ghat values (trapezoid in t, exploiting
// evenness of ghat(it) t tanh(pi t) e^{-itL} in t -> cosine transform).
std::vector<double> weighted_fourier(const std::vector<double>& ghat, double t_step,
                                     const std::vector<double>& Ls) {
    const std::size_t n = ghat.size();
    const std::size_t mid = n / 2; // t = 0 node
    std::vector<double> wt(n - mid);
    for (std::size_t j = 0; j < wt.size(); ++j) {
        const double t = t_step * static_cast<double>(j);
        wt[j] = ghat[mid + j] * t * std::tanh(pi * t);
    }
    std::vector<double> out(Ls.size());
    for (std::size_t i = 0; i < Ls.size(); ++i) {
        const cplx rot = std::exp(cplx{0.0, -Ls[i] * t_step});
        cplx z = 1.0;
        double s = 0.0;
        for (std::size_t j = 0; j < wt.size(); ++j) {
            double w = (j == 0 || j + 1 == wt.size()) ? 0.5 : 1.0;
            s += w * wt[j] * z.real();
            z *= rot;
        }
        out[i] = 2.0 * s * t_step; // even integrand: twice the half-line
    }
    return out;
}

num::UniformSpline spline_of(double x0, double dx, std::vector<double> y, bool clamp) {
    return num::UniformSpline(x0, dx, std::move(y), clamp);
}

double theta_average_w(const TransformTable& table, const UpperHalfPoint& z, Kernel k) {
    // g(z) = (1/4pi^2) Integral_0^pi sqrt(y_theta) W(log y_theta) d theta
    const double d = sl2::hyperbolic_distance(z, UpperHalfPoint{0.0, 1.0});
    int n = 256;
    const double span = table.t_max * std::min(d, 0.35); // oscillation scale of W against theta
    n = std::clamp(static_cast<int>(64.0 + 6.0 * span), 256, 4096);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = pi * (static_cast<double>(j) + 0.5) / n;
        const double c = std::cos(th), s = std::sin(th);
        const double den = (c - z.u * s) * (c - z.u * s) + z.v * z.v * s * s;
        const double y = z.v / den;
        sum += std::sqrt(y) * table.w_value(std::log(y), k);
    }
    return sum / (4.0 * pi * static_cast<double>(n));
}

} // namespace

double TransformTable::ghat_interp(double t, Kernel k) const {
    const auto& g = (k == Kernel::smeared) ? ghat_T : ghat;
    const double a = std::abs(t);
    if (a >= t_max) return 0.0;
    const double pos = (a + t_max) / t_step;
    const auto i = std::min(static_cast<std::size_t>(pos), g.size() - 2);
    const double u = pos - static_cast<double>(i);
    return (1.0 - u) * g[i] + u * g[i + 1];
}

double TransformTable::w_value(double L, Kernel k) const {
    const double a = std::abs(L);
    const auto& core = (k == Kernel::smeared) ? w_core_smear : w_core_base;
    const auto& far = (k == Kernel::smeared) ? w_far_smear : w_far_base;
    if (a <= w_core_max) return core(a);
    if (a <= w_far_max) return far(a);
    return 0.0;
}

TransformTable build_transform_table(const TestFunctionSpec& spec, double T) {
    if (spec.h.empty()) throw validation_error("build_transform_table: empty profile");
    TransformTable table;
    table.spec = spec;
    table.T = T;

    // find where the transform has decayed; the profile grid resolves
    // oscillations only up to t_cap, and below ~1e-13 of the peak the sampled
    // sum is rounding noise anyway
    const double peak = std::abs(harish_to_selberg(spec, cplx{0.0, 0.0}));
    const double t_cap = 0.45 / spec.dx;
    double t_max = 50.0;
    while (t_max < t_cap - 50.0) {
        const double g = std::abs(harish_to_selberg(spec, cplx{0.0, t_max}));
        if (g < std::max(1e-11 * peak, 2e-12)) break;
        t_max += 50.0;
    }
    table.t_max = std::min(t_max + ((T > 0.0) ? T + 10.0 : 0.0), t_cap);
    const auto n_half = static_cast<std::size_t>(std::ceil(table.t_max / table.t_step));
    table.t_max = table.t_step * static_cast<double>(n_half);

    std::vector<double> ts(2 * n_half + 1);
    for (std::size_t i = 0; i < ts.size(); ++i)
        ts[i] = -table.t_max + table.t_step * static_cast<double>(i);

    table.ghat = profile_cos_transform(spec, ones_weight(spec.h.size()), ts);
    double gpeak = 0.0;
    for (double g : table.ghat) gpeak = std::max(gpeak, g);
    // clip trapezoid/rounding noise at the tails
    for (auto& g : table.ghat) g = (g < 1e-13 * gpeak) ? 0.0 : g;

    // exact renormalization on this grid: Integral ghat(it) dt = 1
    const double mass = num::trapezoid(table.ghat, table.t_step);
    for (auto& g : table.ghat) g /= mass;
    for (auto& h : table.spec.h) h /= mass;
    table.spec.normalization /= mass;

    if (T > 0.0) {
        table.ghat_T = profile_cos_transform(table.spec, window_weight(table.spec, T), ts);
        double tpeak = 0.0;
        for (double g : table.ghat_T) tpeak = std::max(tpeak, g);
        for (auto& g : table.ghat_T) g = (g < 1e-13 * tpeak) ? 0.0 : g;
    } else {
        table.ghat_T.assign(ts.size(), 0.0);
    }

    // weighted Fourier kernels W(L): dense core around the support, coarse far field
    table.w_core_max = std::max(2.0 * spec.sigma + 0.3, 0.5);
    table.w_far_max = std::max(4.0, table.w_core_max + 0.5);
    const double core_step = 5e-4, far_step = 2e-3;
    std::vector<double> Lc, Lf;
    for (double L = 0.0; L <= table.w_core_max + core_step; L += core_step) Lc.push_back(L);
    for (double L = table.w_core_max - far_step; L <= table.w_far_max + far_step; L += far_step)
        Lf.push_back(L);

    table.w_core_base = spline_of(0.0, core_step, weighted_fourier(table.ghat, table.t_step, Lc),
                                  false);
    table.w_far_base = spline_of(Lf.front(), far_step,
                                 weighted_fourier(table.ghat, table.t_step, Lf), false);
    if (T > 0.0) {
        table.w_core_smear =
            spline_of(0.0, core_step, weighted_fourier(table.ghat_T, table.t_step, Lc), false);
        table.w_far_smear = spline_of(Lf.front(), far_step,
                                      weighted_fourier(table.ghat_T, table.t_step, Lf), false);
    }

    // radial profiles g(d) on [0, sigma (1 + .05)]
    table.d_support = spec.sigma * 1.05;
    const int nd = 512;
    const double dd = table.d_support / nd;
    std::vector<double> rb(nd + 1), rs(nd + 1, 0.0);
    for (int i = 0; i <= nd; ++i) {
        const UpperHalfPoint zd{0.0, std::exp(dd * i)};
        rb[i] = theta_average_w(table, zd, Kernel::base);
        if (T > 0.0) rs[i] = theta_average_w(table, zd, Kernel::smeared);
    }
    table.radial_base = spline_of(0.0, dd, std::move(rb), true);
    table.radial_smear = spline_of(0.0, dd, std::move(rs), true);
    return table;
}

TransformTable smear(const TransformTable& table, double T) {
    if (T < 0.0) throw validation_error("smear: T must be nonnegative");
    if (T > 0.0 && table.t_max < T + 20.0)
        throw precision_error("smear: transform grid too short for the requested window");
    return build_transform_table(table.spec, T);
}

cplx ghat_at(const TransformTable& table, cplx nu, Kernel k) {
    if (k == Kernel::base) return harish_to_selberg(table.spec, nu);
    if (table.T == 0.0) return {0.0, 0.0};
    const auto& spec = table.spec;
    cplx sum = 0.0;
    for (std::size_t j = 0; j < spec.h.size(); ++j) {
        if (spec.h[j] == 0.0) continue;
        const double x = spec.x0 + spec.dx * static_cast<double>(j);
        sum += spec.h[j] * sinc_window(table.T, x) * std::exp(nu * x);
    }
    return sum * spec.dx;
}

double g_at_identity(const TransformTable& table, Kernel k) {
    const auto& g = (k == Kernel::smeared) ? table.ghat_T : table.ghat;
    std::vector<double> integrand(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double t = -table.t_max + table.t_step * static_cast<double>(i);
        integrand[i] = g[i] * t * std::tanh(pi * t);
    }
    return num::trapezoid(integrand, table.t_step) / (4.0 * pi);
}

cplx spherical_function(cplx s, const UpperHalfPoint& z) {
    const int n = std::clamp(static_cast<int>(64.0 * (1.0 + std::abs(s.imag()) / 8.0)), 128,
                             4096);
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = pi * (static_cast<double>(j) + 0.5) / n;
        const double c = std::cos(th), si = std::sin(th);
        const double den = (c - z.u * si) * (c - z.u * si) + z.v * z.v * si * si;
        sum += std::exp(s * std::log(z.v / den));
    }
    return sum / static_cast<double>(n);
}

double pointwise_from_transform(const TransformTable& table, const UpperHalfPoint& z, Kernel k) {
    if (k == Kernel::smeared && table.T == 0.0) return 0.0;
    return theta_average_w(table, z, k);
}

double radial_from_invariant(const TransformTable& table, double u_invariant, Kernel k) {
    const double d = std::acosh(1.0 + 0.5 * u_invariant);
    if (d >= table.d_support) return 0.0;
    return (k == Kernel::smeared) ? table.radial_smear(d) : table.radial_base(d);
}

cplx selberg_eigen_identity(const TransformTable& table, cplx nu, double tol) {
    if (std::abs(nu.real()) >= 0.5)
        throw validation_error("selberg_eigen_identity: require |Re nu| < 1/2");
    const double sigma = table.spec.sigma;
    const double v_lo = std::exp(-table.d_support), v_hi = std::exp(table.d_support);
    const double u_sigma = 4.0 * std::sinh(0.5 * sigma) * std::sinh(0.5 * sigma);
    const double a = std::sqrt(u_sigma * v_hi) * 1.05;

    auto inner = [&](double v) {
        auto r = num::integrate_c(
            [&](double u) -> cplx {
                const UpperHalfPoint z{u, v};
                const double uu = sl2::point_pair_u(z, UpperHalfPoint{0.0, 1.0});
                const double d = std::acosh(1.0 + 0.5 * uu);
                if (d >= table.d_support) return {0.0, 0.0};
                return table.radial_base(d) * std::exp((0.5 + nu) * std::log(v));
            },
            -a, a, tol * 0.05);
        return r.value / (v * v);
    };
    auto outer = num::integrate_c(inner, v_lo, v_hi, tol * 0.5);
    return outer.value;
}

} // namespace weyl::transform
