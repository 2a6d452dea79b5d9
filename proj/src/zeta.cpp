#include "weyl/zeta.hpp"
#include "weyl/errors.hpp"

#include <algorithm>
#include <cmath>

namespace weyl::zeta {

namespace {

using num::pi;
const double log_pi = std::log(pi);

// Lanczos g = 7, 9 coefficients (~14 correct digits).
const double lanczos_c[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx log_gamma_right(cplx z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    cplx sum = lanczos_c[0];
    for (int i = 1; i < 9; ++i) sum += lanczos_c[i] / (z + static_cast<double>(i));
    const cplx base = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(base) - base + std::log(sum);
}

cplx log_sin_pi(cplx z) {
    const double y = z.imag();
    if (std::abs(y) < 8.0) return std::log(std::sin(pi * z));
    if (y > 0.0) {
        // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i)
        const cplx i{0.0, 1.0};
        return -i * pi * z + std::log(1.0 - std::exp(2.0 * i * pi * z)) - std::log(2.0) +
               i * pi / 2.0;
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

// Bernoulli numbers B_{2k}, k = 1..15.
const double bern[15] = {1.0 / 6.0,
                         -1.0 / 30.0,
                         1.0 / 42.0,
                         -1.0 / 30.0,
                         5.0 / 66.0,
                         -691.0 / 2730.0,
                         7.0 / 6.0,
                         -3617.0 / 510.0,
                         43867.0 / 798.0,
                         -174611.0 / 330.0,
                         854513.0 / 138.0,
                         -236364091.0 / 2730.0,
                         8553103.0 / 6.0,
                         -23749461029.0 / 870.0,
                         8615841276005.0 / 14322.0};

// B_{2k} / (2k)! for the Euler-Maclaurin correction terms.
double bern_over_fact(int k) {
    static std::vector<double> table = [] {
        std::vector<double> t;
        double fact = 1.0;
        for (int k = 1; k <= 15; ++k) {
            fact *= (2.0 * k) * (2.0 * k - 1.0);
            t.push_back(bern[k - 1] / fact);
        }
        return t;
    }();
    return table[k - 1];
}

const std::vector<double>& log_table() {
    static std::vector<double> logs = [] {
        std::vector<double> l(1, 0.0);
        for (int n = 1; n <= 4096; ++n) l.push_back(std::log(static_cast<double>(n)));
        return l;
    }();
    return logs;
}

double log_n(std::int64_t n) {
    const auto& t = log_table();
    if (n < static_cast<std::int64_t>(t.size())) return t[n];
    return std::log(static_cast<double>(n));
}

} // namespace

cplx log_gamma(cplx z) {
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return log_pi - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx digamma(cplx z) {
    cplx shift = 0.0;
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        const cplx piz = pi * z;
        cplx cot;
        if (std::abs(piz.imag()) > 20.0)
            cot = (piz.imag() > 0.0) ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
        else
            cot = std::cos(piz) / std::sin(piz);
        return digamma(1.0 - z) - pi * cot;
    }
    while (std::abs(z) < 16.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const cplx inv2 = 1.0 / (z * z);
    cplx corr = 0.0;
    cplx p = inv2;
    for (int k = 1; k <= 7; ++k) {
        corr += bern[k - 1] / (2.0 * k) * p;
        p *= inv2;
    }
    return shift + std::log(z) - 0.5 / z - corr;
}

cplx gamma_r(cplx s) { return std::exp(-0.5 * s * log_pi) * gamma(0.5 * s); }

cplx gamma_r_log_derivative(cplx s) { return -0.5 * log_pi + 0.5 * digamma(0.5 * s); }

namespace {

// Shared Euler-Maclaurin core.  Returns zeta(s) and optionally zeta'(s).
void zeta_em(cplx s, double tol, const ZetaConfig& cfg, bool want_d, cplx& value, cplx& deriv) {
    if (std::abs(s - 1.0) < 1e-12) throw pole_error("riemann_zeta: pole at s = 1");
    if (tol <= 0.0) throw validation_error("riemann_zeta: tol must be positive");
    const double t = std::abs(s.imag());
    const int N = std::max(cfg.cut, static_cast<int>(std::ceil(0.55 * t + 20.0)));
    const int M = std::clamp(cfg.bernoulli_depth, 2, 14);

    cplx sum = 0.0, dsum = 0.0;
    for (int n = 1; n < N; ++n) {
        const double ln = log_n(n);
        const cplx term = std::exp(-s * ln);
        sum += term;
        if (want_d) dsum -= ln * term;
    }
    const double logN = log_n(N);
    const cplx Npow = std::exp(-s * logN); // N^{-s}
    sum += 0.5 * Npow;
    if (want_d) dsum -= 0.5 * logN * Npow;

    const cplx tail = Npow * static_cast<double>(N) / (s - 1.0); // N^{1-s}/(s-1)
    sum += tail;
    if (want_d) dsum += -logN * tail - tail / (s - 1.0);

    // correction terms T_k = B_{2k}/(2k)! * N^{1-s-2k} * prod_{j=0}^{2k-2}(s+j)
    cplx poch = s;                                    // prod so far (k = 1 -> just s)
    cplx dpoch = 1.0;                                 // d/ds of poch
    cplx npow = Npow / static_cast<double>(N);        // N^{-s-1}
    const double invN2 = 1.0 / (static_cast<double>(N) * static_cast<double>(N));
    double prev_mag = 1e300;
    double err_estimate = 1e300;
    for (int k = 1; k <= M; ++k) {
        const cplx term = bern_over_fact(k) * poch * npow;
        sum += term;
        if (want_d) dsum += bern_over_fact(k) * (dpoch * npow - logN * poch * npow);
        const double mag = std::abs(term);
        err_estimate = mag * 2.0;
        if (mag < tol * 1e-3 && mag < prev_mag) break;
        prev_mag = mag;
        // extend the pochhammer product by (s+2k-1)(s+2k)
        const cplx a = s + (2.0 * k - 1.0), b = s + (2.0 * k);
        dpoch = dpoch * a * b + poch * (a + b);
        poch *= a * b;
        npow *= invN2;
    }
    if (err_estimate > tol)
        throw precision_error("riemann_zeta: requested tolerance unreachable at configured depth");
    value = sum;
    deriv = dsum;
}

} // namespace

cplx riemann_zeta(cplx s, double tol, const ZetaConfig& cfg) {
    cplx v, d;
    zeta_em(s, tol, cfg, false, v, d);
    return v;
}

std::pair<cplx, cplx> riemann_zeta_d(cplx s, double tol, const ZetaConfig& cfg) {
    cplx v, d;
    zeta_em(s, tol, cfg, true, v, d);
    return {v, d};
}

cplx completed_zeta(cplx s) {
    if (std::abs(s) < 1e-3 || std::abs(s - 1.0) < 1e-3)
        throw pole_error("completed_zeta: inside the exclusion disk around s = 0 or 1");
    return gamma_r(s) * riemann_zeta(s);
}

cplx completed_zeta_log_derivative(cplx s) {
    if (std::abs(s) < 1e-3 || std::abs(s - 1.0) < 1e-3)
        throw pole_error("completed_zeta_log_derivative: pole at s = 0 or 1");
    const auto [z, dz] = riemann_zeta_d(s);
    return gamma_r_log_derivative(s) + dz / z;
}

namespace {

// log Z(s) up to an irrelevant multiple of 2 pi i; ratios of Z values are
// formed as exp of log differences so that the Gamma decay e^{-pi |t| / 4}
// cannot underflow them.
cplx log_completed_zeta(cplx s) {
    if (std::abs(s) < 1e-3 || std::abs(s - 1.0) < 1e-3)
        throw pole_error("completed_zeta: inside the exclusion disk around s = 0 or 1");
    return -0.5 * s * log_pi + log_gamma(0.5 * s) + std::log(riemann_zeta(s));
}

} // namespace

cplx scattering_ratio(cplx s) {
    if (std::abs(s) < 1e-8) return {-1.0, 0.0}; // removable: Z(s)/Z(s+1) -> -1
    if (std::abs(s - 1.0) < 1e-3) throw pole_error("scattering_ratio: pole at s = 1");
    if (std::abs(s + 1.0) < 1e-3) throw pole_error("scattering_ratio: Z(s+1) pole at s = -1");
    return std::exp(log_completed_zeta(s) - log_completed_zeta(s + 1.0));
}

cplx scattering_ratio_log_derivative(cplx s) {
    return completed_zeta_log_derivative(s) - completed_zeta_log_derivative(s + 1.0);
}

cplx phi_scattering(cplx s) {
    const cplx num = 2.0 * s - 1.0, den = 2.0 * s;
    if (std::abs(num) < 1e-3 || std::abs(num - 1.0) < 1e-3 || std::abs(den) < 1e-3 ||
        std::abs(den - 1.0) < 1e-3)
        throw pole_error("phi_scattering: Z argument inside an exclusion disk");
    return std::exp(log_completed_zeta(num) - log_completed_zeta(den));
}

cplx phi_log_derivative(double t) {
    if (std::abs(t) < 1e-6) throw singularity_error("phi_log_derivative: singular at t = 0");
    const cplx twoit{0.0, 2.0 * t};
    return 2.0 * (completed_zeta_log_derivative(twoit) -
                  completed_zeta_log_derivative(1.0 + twoit));
}

double hardy_theta(double t) {
    const cplx z{0.25, 0.5 * t};
    return std::imag(log_gamma(z)) - 0.5 * t * log_pi;
}

double hardy_z(double t) {
    const cplx zeta_val = riemann_zeta(cplx{0.5, t});
    const double theta = hardy_theta(t);
    return std::real(std::exp(cplx{0.0, theta}) * zeta_val);
}

ZeroCount count_critical_zeros(double center, double halfwidth) {
    if (center - halfwidth <= 0.0)
        throw validation_error("count_critical_zeros: window must stay above t = 0");
    const double a = center - halfwidth, b = center + halfwidth;
    const double step = 0.01;
    ZeroCount zc;
    double prev_t = a, prev_z = hardy_z(a);
    const int n = static_cast<int>(std::ceil((b - a) / step));
    for (int i = 1; i <= n; ++i) {
        const double t = std::min(a + i * step, b);
        const double z = hardy_z(t);
        if (prev_z == 0.0 || z == 0.0 || (prev_z < 0.0) != (z < 0.0)) {
            ++zc.count;
        } else if (std::min(std::abs(prev_z), std::abs(z)) < 0.05) {
            // possible tangency or close pair: refine this cell
            double pt = prev_t, pz = prev_z;
            int local = 0;
            for (int j = 1; j <= 10; ++j) {
                const double tt = prev_t + (t - prev_t) * j / 10.0;
                const double zz = hardy_z(tt);
                if ((pz < 0.0) != (zz < 0.0)) ++local;
                pt = tt;
                pz = zz;
            }
            (void)pt;
            if (local > 0) {
                zc.count += local;
                zc.refined = true;
            }
        }
        prev_t = t;
        prev_z = z;
    }
    return zc;
}

// --- Hecke data ----------------------------------------------------------------

void HeckeData::validate() const {
    if (alpha.empty()) throw validation_error("HeckeData: no Satake parameters");
    for (const auto& [p, a] : alpha) {
        if (p < 2) throw validation_error("HeckeData: invalid prime " + std::to_string(p));
        if (std::abs(a) == 0.0)
            throw validation_error("HeckeData: alpha_p = 0 at p = " + std::to_string(p));
        const double bound = std::pow(static_cast<double>(p), 5.0 / 28.0);
        if (std::abs(a) > bound * (1.0 + 1e-12))
            throw validation_error("HeckeData: |alpha_p| exceeds p^{5/28} at p = " +
                                   std::to_string(p));
    }
}

namespace {

// Rigorous tail majorant: sum_{n > P} n^{-sigma+5/28} log n weighted by 2.
double prime_tail(double sigma, double P, bool with_log) {
    const double e = sigma - 5.0 / 28.0 - 1.0;
    if (e <= 0.0) return 1e300; // outside absolute convergence
    const double Ppow = std::pow(P, -e);
    if (with_log) return 2.0 * Ppow * (std::log(P) / e + 1.0 / (e * e));
    return 2.0 * Ppow / e;
}

} // namespace

WithTail<cplx> hecke_l_log_derivative(cplx s, const HeckeData& data) {
    const double sigma = s.real();
    if (sigma <= 1.0 + 5.0 / 28.0)
        throw validation_error("hecke_l_log_derivative: outside absolute convergence");
    cplx sum = 0.0;
    for (const auto& [p, a] : data.alpha) {
        const double lp = std::log(static_cast<double>(p));
        const cplx pms = std::exp(-s * lp);
        cplx an = a, ain = 1.0 / a, pn = pms;
        for (int n = 1;; ++n) {
            sum -= (an + ain) * pn * lp;
            if (std::abs(pn) * (std::abs(an) + std::abs(ain)) < 1e-18) break;
            if (n > 60) break;
            an *= a;
            ain /= a;
            pn *= pms;
        }
    }
    return {sum, prime_tail(sigma, static_cast<double>(data.p_max), true)};
}

WithTail<cplx> hecke_lambda_log_derivative(cplx s, const HeckeData& data) {
    auto l = hecke_l_log_derivative(s, data);
    l.value += gamma_r_log_derivative(s + data.nu) + gamma_r_log_derivative(s - data.nu);
    return l;
}

WithTail<cplx> hecke_l_ratio(cplx s, const HeckeData& data, double tol) {
    if (s.real() < 1.5)
        throw validation_error("hecke_l_ratio: require Re s >= 3/2 (absolute convergence)");
    cplx log_ratio = 0.0; // log L(s) - log L(s+1)
    for (const auto& [p, a] : data.alpha) {
        const double lp = std::log(static_cast<double>(p));
        const cplx ps = std::exp(-s * lp), ps1 = ps / static_cast<double>(p);
        log_ratio -= std::log(1.0 - a * ps) + std::log(1.0 - ps / a);
        log_ratio += std::log(1.0 - a * ps1) + std::log(1.0 - ps1 / a);
    }
    const cplx gammas = gamma_r(s + data.nu) * gamma_r(s - data.nu) /
                        (gamma_r(s + 1.0 + data.nu) * gamma_r(s + 1.0 - data.nu));
    const cplx value = gammas * std::exp(log_ratio);
    const double tail =
        std::abs(value) * 2.0 * prime_tail(s.real(), static_cast<double>(data.p_max), false);
    if (tail > tol)
        throw precision_error("hecke_l_ratio: prime table too short for requested tolerance");
    return {value, tail};
}

WithTail<cplx> hecke_r_log_derivative(cplx s, const HeckeData& data) {
    const auto a = hecke_lambda_log_derivative(s, data);
    const auto b = hecke_lambda_log_derivative(s + 1.0, data);
    return {a.value - b.value, a.tail_bound + b.tail_bound};
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<bool> sieve(static_cast<std::size_t>(std::max<std::int64_t>(n + 1, 2)), true);
    sieve[0] = sieve[1] = false;
    for (std::int64_t i = 2; i * i <= n; ++i)
        if (sieve[static_cast<std::size_t>(i)])
            for (std::int64_t j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= n; ++i)
        if (sieve[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

} // namespace weyl::zeta
