#pragma once

#include "weyl/numeric.hpp"

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace weyl::zeta {

using num::cplx;

// --- complex gamma machinery -------------------------------------------------

// log Gamma via Lanczos (reflection below Re z = 1/2).  The imaginary part is
// continuous on Re z >= 1/2; elsewhere it is defined mod 2*pi, which is all
// the Hardy-function phase needs.
cplx log_gamma(cplx z);
cplx gamma(cplx z);
cplx digamma(cplx z);

// Gamma_R(s) = pi^{-s/2} Gamma(s/2) and its logarithmic derivative.
cplx gamma_r(cplx s);
cplx gamma_r_log_derivative(cplx s);

// --- Riemann zeta ------------------------------------------------------------

struct ZetaConfig {
    int cut = 50;             // Euler-Maclaurin cut N (auto-raised with |Im s|)
    int bernoulli_depth = 12; // correction terms M (<= 14)
};

// zeta(s) by Euler-Maclaurin summation, absolute error <= tol.
cplx riemann_zeta(cplx s, double tol = 1e-12, const ZetaConfig& cfg = {});
// zeta and zeta' together (term-wise differentiated sum).
std::pair<cplx, cplx> riemann_zeta_d(cplx s, double tol = 1e-12, const ZetaConfig& cfg = {});

// Completed zeta Z(s) = pi^{-s/2} Gamma(s/2) zeta(s), Z(s) = Z(1-s).
cplx completed_zeta(cplx s);
// Z'/Z(s)
cplx completed_zeta_log_derivative(cplx s);

// Scattering ratio R(s) = Z(s)/Z(s+1) and its logarithmic derivative.
// R has a removable value R(0) = -1 which is handled explicitly.
cplx scattering_ratio(cplx s);
cplx scattering_ratio_log_derivative(cplx s);

// phi(s) = Z(2s-1)/Z(2s), the constant-term scattering coefficient.
cplx phi_scattering(cplx s);
// phi'/phi(1/2 + it) = 2 (Z'/Z(2it) - Z'/Z(1+2it)); real for real t.
cplx phi_log_derivative(double t);

// --- Hardy function and zero counting ----------------------------------------

double hardy_theta(double t);
double hardy_z(double t);

struct ZeroCount {
    int count = 0;
    bool refined = false; // a near-tangency forced sub-grid refinement
};
// Sign changes of the Hardy function on [center-halfwidth, center+halfwidth]
// at resolution 0.01 (refined locally where |Z| dips near zero).
ZeroCount count_critical_zeros(double center, double halfwidth);

// --- Hecke L-functions from ingested Satake data -------------------------------

struct HeckeData {
    std::string symbol;
    cplx nu;                                     // Delta phi = (1/4 - nu^2) phi
    std::vector<std::pair<std::int64_t, cplx>> alpha; // (p, alpha_p), p <= p_max
    std::int64_t p_max = 0;

    void validate() const; // |alpha_p| <= p^{5/28}, alpha_p != 0
};

template <typename T>
struct WithTail {
    T value{};
    double tail_bound = 0.0; // prime-truncation error estimate
};

// L'/L(s, phi) from the Euler product, absolutely convergent Re s > 1 + 5/28.
WithTail<cplx> hecke_l_log_derivative(cplx s, const HeckeData& data);
// Lambda'/Lambda(s, phi) = Gamma_R'/Gamma_R(s+nu) + Gamma_R'/Gamma_R(s-nu) + L'/L(s, phi).
WithTail<cplx> hecke_lambda_log_derivative(cplx s, const HeckeData& data);
// R(s, phi) = Lambda(s, phi)/Lambda(s+1, phi); requires Re s >= 3/2 so both
// Dirichlet series are within the absolute-convergence region.  A finite tol
// requests that the prime-truncation tail stay below it.
WithTail<cplx> hecke_l_ratio(cplx s, const HeckeData& data,
                             double tol = std::numeric_limits<double>::infinity());
// R'/R(s, phi) = Lambda'/Lambda(s) - Lambda'/Lambda(s+1).
WithTail<cplx> hecke_r_log_derivative(cplx s, const HeckeData& data);

std::vector<std::int64_t> primes_up_to(std::int64_t n);

} // namespace weyl::zeta
