#include "weyl/bessel.hpp"
#include "weyl/errors.hpp"
#include "weyl/zeta.hpp"

#include <cmath>

namespace weyl::bessel {

using num::pi;

namespace {

// 16-point Gauss-Legendre nodes/weights on [0, 1]
const double gl_x[16] = {
    0.0052995325041750337, 0.0277124884633837046, 0.0671843988060841224,
    0.1222977958224984868, 0.1910618777986781147, 0.2709916111713863151,
    0.3591982246103705422, 0.4524937450811812866, 0.5475062549188187134,
    0.6408017753896294578, 0.7290083888286136849, 0.8089381222013218853,
    0.8777022041775015132, 0.9328156011939158776, 0.9722875115366162954,
    0.9947004674958249663};
const double gl_w[16] = {
    0.0135762297058770482, 0.0311267619693239468, 0.0475792558412463928,
    0.0623144856277669384, 0.0747979944082883680, 0.0845782596975012679,
    0.0913017075224617918, 0.0947253052275342510, 0.0947253052275342510,
    0.0913017075224617918, 0.0845782596975012679, 0.0747979944082883680,
    0.0623144856277669384, 0.0475792558412463928, 0.0311267619693239468,
    0.0135762297058770482};

cplx asymptotic_series(cplx nu, double x) {
    // K_nu(x) ~ sqrt(pi/2x) e^{-x} sum_k a_k(nu)/x^k,
    // a_k = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (8^k k!)
    const cplx nu2 = 4.0 * nu * nu;
    cplx term = 1.0, sum = 1.0;
    for (int k = 1; k <= 30; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (nu2 - odd * odd) / (8.0 * x * static_cast<double>(k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::sqrt(pi / (2.0 * x)) * std::exp(-x) * sum;
}

// K_nu = pi (I_{-nu} - I_nu) / (2 sin(pi nu)).  For order it with x < t the
// real-axis integral cancels down from e^{-x} to e^{-pi t/2}; the ascending
// series has no such cancellation there.
cplx series_rep(cplx nu, double x) {
    const double lx = std::log(0.5 * x);
    const cplx t0p = std::exp(nu * lx - weyl::zeta::log_gamma(1.0 + nu));
    const cplx t0m = std::exp(-nu * lx - weyl::zeta::log_gamma(1.0 - nu));
    cplx sum_p = t0p, sum_m = t0m, term_p = t0p, term_m = t0m;
    const double x24 = 0.25 * x * x;
    for (int k = 1; k <= 400; ++k) {
        term_p *= x24 / (static_cast<double>(k) * (nu + static_cast<double>(k)));
        term_m *= x24 / (static_cast<double>(k) * (-nu + static_cast<double>(k)));
        sum_p += term_p;
        sum_m += term_m;
        if (std::abs(term_p) + std::abs(term_m) <
                1e-18 * (std::abs(sum_p) + std::abs(sum_m)) &&
            static_cast<double>(k) > 0.5 * x)
            break;
    }
    const cplx i{0.0, 1.0};
    const cplx sin_pi_nu = (std::exp(i * pi * nu) - std::exp(-i * pi * nu)) / (2.0 * i);
    return 0.5 * pi * (sum_m - sum_p) / sin_pi_nu;
}

cplx integral_rep(cplx nu, double x) {
    // panels of Gauss-Legendre on Integral_0^L e^{-x cosh u} cosh(nu u) du
    const double abs_re = std::abs(nu.real());
    double L = std::acosh(1.0 + (50.0 + 6.0 * abs_re) / x);
    // widen until the integrand is negligible relative to e^{-x}
    while (x * (std::cosh(L) - 1.0) - abs_re * L < 45.0) L += 0.5;
    const double h =
        std::min({0.5, 2.0 / (1.0 + std::abs(nu.imag())), 2.5 / std::sqrt(x)});
    const int panels = static_cast<int>(std::ceil(L / h));
    const double w = L / panels;
    cplx sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = w * p;
        for (int j = 0; j < 16; ++j) {
            const double u = a + w * gl_x[j];
            sum += gl_w[j] * w * std::exp(-x * std::cosh(u)) * std::cosh(nu * u);
        }
    }
    return sum;
}

} // namespace

cplx bessel_k(cplx nu, double x) {
    if (x < 0.05) throw validation_error("bessel_k: argument below supported domain");
    if (std::abs(nu.real()) > 3.0 || std::abs(nu.imag()) > 32.0)
        throw validation_error("bessel_k: order outside supported domain");
    const double n2 = std::norm(nu);
    if (x >= std::max(45.0, 2.0 * n2 + 30.0)) return asymptotic_series(nu, x);
    if (std::abs(nu.imag()) >= 6.0 && x < 0.75 * std::abs(nu.imag()))
        return series_rep(nu, x);
    return integral_rep(nu, x);
}

double bessel_k_bound(cplx nu, double x) {
    if (x < 1.0) x = 1.0;
    return std::sqrt(2.0 * pi / x) * std::exp(-x + nu.real() * nu.real() / (2.0 * x));
}

} // namespace weyl::bessel
