#include "weyl/eisenstein.hpp"
#include "weyl/bessel.hpp"
#include "weyl/errors.hpp"
#include "weyl/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace weyl::eis {

using num::pi;

EisensteinEvaluator::EisensteinEvaluator(cplx s, int fourier_depth, double tail_tol)
    : s_(s), nu_(s - 0.5), tail_tol_(tail_tol) {
    if (std::abs(s - 1.0) < 1e-3)
        throw pole_error("EisensteinEvaluator: pole of E_s at s = 1");
    phi_ = zeta::phi_scattering(s);
    coef_ = 4.0 / zeta::completed_zeta(2.0 * s);

    int N = fourier_depth;
    if (N <= 0) {
        // smallest depth whose tail bound at the domain floor clears tail_tol
        const double v0 = std::sqrt(3.0) / 2.0;
        const double a = std::abs(nu_.real());
        double bound;
        N = 2;
        do {
            ++N;
            bound = 3.0 * std::abs(coef_) * std::sqrt(v0) * 2.0 *
                    std::pow(static_cast<double>(N + 1), 0.5 + a) *
                    bessel::bessel_k_bound(nu_, 2.0 * pi * (N + 1) * v0);
        } while (bound > 0.1 * tail_tol && N < 64);
    }
    tau_.resize(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        cplx t = 0.0;
        for (int a = 1; a * a <= n; ++a) {
            if (n % a != 0) continue;
            const int b = n / a;
            t += std::exp(nu_ * std::log(static_cast<double>(a) / b));
            if (a != b) t += std::exp(nu_ * std::log(static_cast<double>(b) / a));
        }
        tau_[static_cast<std::size_t>(n - 1)] = t;
    }
}

cplx EisensteinEvaluator::constant_term(double v) const {
    const double lv = std::log(v);
    return std::exp(s_ * lv) + phi_ * std::exp((1.0 - s_) * lv);
}

cplx EisensteinEvaluator::fourier_coefficient(int n, double v) const {
    return coef_ * std::sqrt(v) * tau_[static_cast<std::size_t>(n - 1)] *
           bessel::bessel_k(nu_, 2.0 * pi * n * v);
}

std::vector<cplx> EisensteinEvaluator::fourier_coefficients(double v) const {
    std::vector<cplx> a(tau_.size());
    for (std::size_t n = 0; n < tau_.size(); ++n)
        a[n] = coef_ * std::sqrt(v) * tau_[n] *
               bessel::bessel_k(nu_, 2.0 * pi * static_cast<double>(n + 1) * v);
    return a;
}

double EisensteinEvaluator::tail_bound(double v) const {
    const auto N = static_cast<int>(tau_.size());
    const double a = std::abs(nu_.real());
    double sum = 0.0;
    for (int n = N + 1; n <= N + 40; ++n) {
        const double term = std::abs(coef_) * std::sqrt(v) * 2.0 *
                            std::pow(static_cast<double>(n), 0.5 + a) *
                            bessel::bessel_k_bound(nu_, 2.0 * pi * n * v);
        sum += term;
        if (term < 1e-25) break;
    }
    return 1.5 * sum;
}

cplx EisensteinEvaluator::value(const UpperHalfPoint& z, bool reduce_first) const {
    UpperHalfPoint w = z;
    if (reduce_first) w = sl2::reduce(z).first;
    if (tail_bound(w.v) > tail_tol_)
        throw precision_error("EisensteinEvaluator: Fourier depth insufficient at this height");
    cplx sum = constant_term(w.v);
    const auto a = fourier_coefficients(w.v);
    for (std::size_t n = 0; n < a.size(); ++n)
        sum += a[n] * std::cos(2.0 * pi * static_cast<double>(n + 1) * w.u);
    return sum;
}

cplx EisensteinEvaluator::truncated(const UpperHalfPoint& z, double C, bool reduce_first) const {
    UpperHalfPoint w = z;
    if (reduce_first) w = sl2::reduce(z).first;
    cplx val = value(w, false);
    if (w.v > C) val -= constant_term(w.v);
    return val;
}

cplx maass_selberg_closed(cplx s1, cplx s2, double C) {
    if (C < 1.0) throw validation_error("maass_selberg_closed: require C >= 1");
    const cplx d1 = s1 + s2 - 1.0, d2 = s1 - s2, d3 = s2 - s1, d4 = 1.0 - s1 - s2;
    for (const cplx& d : {d1, d2, d4})
        if (std::abs(d) < 1e-6)
            throw singularity_error(
                "maass_selberg_closed: removable singularity, use the critical-line limit");
    const double lc = std::log(C);
    const cplx p1 = zeta::phi_scattering(s1), p2 = zeta::phi_scattering(s2);
    return std::exp(d1 * lc) / d1 + p2 * std::exp(d2 * lc) / d2 + p1 * std::exp(d3 * lc) / d3 +
           p1 * p2 * std::exp(d4 * lc) / d4;
}

namespace {

double ms_critical_direct(double t, double C) {
    const double lc = std::log(C);
    const cplx phi_p = zeta::phi_scattering({0.5, t});
    const cplx phi_m = zeta::phi_scattering({0.5, -t});
    const cplx dphi = zeta::phi_log_derivative(t);
    const cplx rot = std::exp(cplx{0.0, 2.0 * t * lc});
    const cplx bracket = (rot * phi_m - phi_p / rot) / cplx{0.0, 2.0 * t};
    const cplx val = 2.0 * lc - dphi + bracket;
    return val.real();
}

} // namespace

double maass_selberg_critical(double t, double C) {
    if (C < 1.0) throw validation_error("maass_selberg_critical: require C >= 1");
    const double a = std::abs(t);
    if (a >= 1e-3) return ms_critical_direct(a, C);
    // removable t -> 0 limit: the norm is even and analytic in t^2
    const double t1 = 1.5e-3, t2 = 3e-3, t3 = 6e-3;
    const double v1 = ms_critical_direct(t1, C), v2 = ms_critical_direct(t2, C),
                 v3 = ms_critical_direct(t3, C);
    // quadratic interpolation in tau = t^2 evaluated at tau = t^2
    const double x1 = t1 * t1, x2 = t2 * t2, x3 = t3 * t3, x = a * a;
    return v1 * (x - x2) * (x - x3) / ((x1 - x2) * (x1 - x3)) +
           v2 * (x - x1) * (x - x3) / ((x2 - x1) * (x2 - x3)) +
           v3 * (x - x1) * (x - x2) / ((x3 - x1) * (x3 - x2));
}

namespace {

struct StripIntegrand {
    const EisensteinEvaluator& e1;
    const EisensteinEvaluator& e2;
    double C;
    bool one_sided;

    // Parseval in u on the full strip |u| <= 1/2:
    // Integral_0^1 f1 f2 du = c1 c2 + (1/2) sum_n a_n b_n
    cplx operator()(double v) const {
        const bool above = v > C;
        cplx c1 = above ? cplx{0.0, 0.0} : e1.constant_term(v);
        cplx c2 = (above && !one_sided) ? cplx{0.0, 0.0} : e2.constant_term(v);
        cplx sum = c1 * c2;
        const auto a = e1.fourier_coefficients(v);
        const auto b = e2.fourier_coefficients(v);
        for (std::size_t n = 0; n < std::min(a.size(), b.size()); ++n)
            sum += 0.5 * a[n] * b[n];
        return sum / (v * v);
    }
};

} // namespace

QuadOutcome ms_quadrature(cplx s1, cplx s2, double C, double abs_tol, bool one_sided) {
    if (C < 1.0) throw validation_error("ms_quadrature: require C >= 1");
    // both evaluators must carry the same Fourier depth: coefficients pair up
    const int depth = std::max(EisensteinEvaluator(s1).depth(), EisensteinEvaluator(s2).depth());
    const EisensteinEvaluator e1(s1, depth), e2(s2, depth);
    const double Y = C + 8.0;
    QuadOutcome out;

    // Arc region sqrt(3)/2 <= v < 1: genuine 2-D integration over F-slices.
    {
        auto inner = [&](double v) -> cplx {
            const auto a = e1.fourier_coefficients(v);
            const auto b = e2.fourier_coefficients(v);
            const cplx c1 = e1.constant_term(v), c2 = e2.constant_term(v);
            auto f = [&](double u) {
                cplx f1 = c1, f2 = c2;
                for (std::size_t n = 0; n < std::min(a.size(), b.size()); ++n) {
                    const double cn = std::cos(2.0 * pi * static_cast<double>(n + 1) * u);
                    f1 += a[n] * cn;
                    f2 += b[n] * cn;
                }
                return f1 * f2;
            };
            cplx s = 0.0;
            for (auto [lo, hi] : sl2::domain_slice(v, C)) {
                auto r = num::integrate_c(f, lo, hi, abs_tol * 0.02);
                s += r.value;
            }
            return s / (v * v);
        };
        auto r = num::integrate_c(inner, std::sqrt(3.0) / 2.0, 1.0, abs_tol * 0.3);
        out.value += r.value;
        out.error += r.error;
    }

    // Strip 1 <= v <= C (untouched) and C <= v <= Y (truncated): Parseval in u.
    {
        StripIntegrand low{e1, e2, C, one_sided};
        if (C > 1.0) {
            auto r = num::integrate_c([&](double v) { return low(std::min(v, C * (1 - 1e-14))); },
                                      1.0, C, abs_tol * 0.3);
            out.value += r.value;
            out.error += r.error;
        }
        if (!one_sided) {
            auto r = num::integrate_c([&](double v) { return low(std::max(v, C * (1 + 1e-14))); },
                                      C, Y, abs_tol * 0.3);
            out.value += r.value;
            out.error += r.error;
        } else {
            // honest 2-D check of the unfolding: Lambda E_{s1} times untruncated E_{s2}
            auto inner = [&](double v) -> cplx {
                const auto a = e1.fourier_coefficients(v);
                const auto b = e2.fourier_coefficients(v);
                const cplx c2 = e2.constant_term(v);
                auto f = [&](double u) {
                    cplx f1 = 0.0, f2 = c2;
                    for (std::size_t n = 0; n < std::min(a.size(), b.size()); ++n) {
                        const double cn = std::cos(2.0 * pi * static_cast<double>(n + 1) * u);
                        f1 += a[n] * cn;
                        f2 += b[n] * cn;
                    }
                    return f1 * f2;
                };
                auto r = num::integrate_c(f, -0.5, 0.5, abs_tol * 0.02);
                return r.value / (v * v);
            };
            auto r = num::integrate_c(inner, C, Y, abs_tol * 0.3);
            out.value += r.value;
            out.error += r.error;
        }
    }

    // Height tail above Y: bound by the Bessel decay of the coefficients.
    double tail = e1.tail_bound(Y) * e2.tail_bound(Y);
    {
        const auto a = e1.fourier_coefficients(Y);
        const auto b = e2.fourier_coefficients(Y);
        double s = 0.0;
        for (std::size_t n = 0; n < a.size(); ++n) s += std::abs(a[n]) * std::abs(b[n]);
        // coefficients decay at least like e^{-2 pi v} each beyond Y
        tail += s / (Y * Y) / (4.0 * pi);
        if (one_sided) {
            double sa = 0.0;
            for (const auto& an : a) sa += std::abs(an);
            tail += sa * std::abs(e2.constant_term(Y)) / (Y * Y);
        }
    }
    out.error += tail;
    return out;
}

MaassSelbergResult verify_general(cplx s1, cplx s2, double C, double rel_tol) {
    MaassSelbergResult res;
    res.s1 = s1;
    res.s2 = s2;
    res.C = C;
    res.closed_form = maass_selberg_closed(s1, s2, C);
    const double abs_tol = std::max(1e-12, rel_tol * std::abs(res.closed_form) * 0.3);
    auto q = ms_quadrature(s1, s2, C, abs_tol);
    res.quadrature = q.value;
    res.quadrature_error = q.error;
    res.has_quadrature = true;
    res.discrepancy = std::abs(res.closed_form - res.quadrature);
    return res;
}

MaassSelbergResult verify_critical(double t, double C, double rel_tol) {
    MaassSelbergResult res;
    res.s1 = {0.5, t};
    res.s2 = {0.5, -t};
    res.C = C;
    res.closed_form = maass_selberg_critical(t, C);
    const double abs_tol = std::max(1e-12, rel_tol * std::abs(res.closed_form) * 0.3);
    auto q = ms_quadrature(res.s1, res.s2, C, abs_tol);
    res.quadrature = q.value;
    res.quadrature_error = q.error;
    res.has_quadrature = true;
    res.discrepancy = std::abs(res.closed_form - res.quadrature);
    return res;
}

double eisenstein_band_integral(double T, double C, const transform::TransformTable& table) {
    if (table.T <= 0.0)
        throw validation_error("eisenstein_band_integral: table carries no smeared transform");
    // last height where the smeared transform still carries mass
    double t_hi = 1.0;
    for (double t = 0.0; t < table.t_max; t += 0.5)
        if (table.ghat_interp(t, transform::Kernel::smeared) >= 1e-9) t_hi = t;
    t_hi = std::min(t_hi + 1.0, table.t_max);

    const double step = 0.25;
    const auto n = static_cast<std::size_t>(std::ceil(t_hi / step));
    std::vector<double> y(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = step * static_cast<double>(i);
        const double g = table.ghat_interp(t, transform::Kernel::smeared);
        y[i] = (g > 0.0) ? g * maass_selberg_critical(t, C) : 0.0;
    }
    (void)T;
    return 2.0 * num::trapezoid(y, step); // even integrand
}

} // namespace weyl::eis
