#pragma once

#include "weyl/numeric.hpp"
#include "weyl/zeta.hpp"

#include <array>
#include <string>
#include <vector>

namespace weyl::sl3 {

using num::cplx;

// Joint spectral parameter (l1, l2, l3), l1 + l2 + l3 = 0.
struct SpectralParameter3 {
    cplx l1{}, l2{}, l3{};

    SpectralParameter3() = default;
    SpectralParameter3(cplx a, cplx b, cplx c);
    static SpectralParameter3 tempered(double t1, double t2, double t3);

    std::array<cplx, 3> coords() const { return {l1, l2, l3}; }
    // |Re l_i| < 1/2 (the unitarity bound)
    bool within_unitary_bound(double tol = 0.0) const;
    bool is_imaginary(double tol = 1e-12) const;
};

// Permutation in one-line notation: perm[i] = s(i+1) - 1.
struct WeylElement {
    std::array<int, 3> perm{0, 1, 2};

    static const std::vector<WeylElement>& all(); // the 6 elements of S3
    WeylElement compose(const WeylElement& o) const;
    WeylElement inverse() const;
    bool operator==(const WeylElement& o) const { return perm == o.perm; }
    std::string name() const; // cycle notation
};

// (s lam)_i = lam_{s^{-1}(i)} -- permutes the standard basis vectors.
SpectralParameter3 weyl_act(const WeylElement& s, const SpectralParameter3& lam);

using Coroot = std::array<int, 3>;
inline constexpr Coroot alpha1_vee{1, -1, 0};
inline constexpr Coroot alpha2_vee{0, 1, -1};
inline constexpr Coroot alpha3_vee{1, 0, -1};

cplx pair_coroot(const SpectralParameter3& lam, const Coroot& coroot);

// Simple-root / rho data on a_0 = {(h1,h2,h3) : sum = 0}.
struct RootDatum3 {
    // alpha_1(H) = h1 - h2, alpha_2(H) = h2 - h3, alpha_3 = alpha_1 + alpha_2.
    static double alpha(int k, const std::array<double, 3>& H);
    // rho_0(H) = h1 - h3; rho_1, rho_2 are the restrictions (h,h,-2h) -> 3h
    // and (2h,-h,-h) -> 3h on the maximal-parabolic Cartan lines.
    static double rho0(const std::array<double, 3>& H) { return H[0] - H[2]; }
    static double rho1(double h) { return 3.0 * h; }
    static double rho2(double h) { return 3.0 * h; }
};

// Langlands truncation combinatorics: characteristic function of the cone
// {c1 a1^vee + c2 a2^vee : c_i > 0 for all alpha_i in Delta_P}.
enum class Parabolic { P0, P1, P2, G };
bool tau_hat(Parabolic P, const std::array<double, 3>& H);

// lambda(Delta) = 1 - (l1^2 + l2^2 + l3^2)/2.
cplx laplace_eigenvalue(const SpectralParameter3& lam);

// --- spectral density ---------------------------------------------------------

// Product kernel of the spectral density on the tempered axis:
// prod_k tau_k tanh(pi tau_k) with tau_k = Im lam(alpha_k^vee).
double beta_kernel(const SpectralParameter3& lam);
// Same product through |Gamma(1/2 + lam(a^vee)) / Gamma(lam(a^vee))|^2 (the
// dual evaluation route; identical by the reflection formula).
double beta_kernel_gamma_form(const SpectralParameter3& lam);

double c_beta();                        // stored normalization constant
double calibrate_c_beta(double T_cal);  // regeneration routine for c_beta
double beta_density(const SpectralParameter3& lam);

// Integral of beta over the eigenvalue ball lambda(Delta) <= T, i.e. over
// ||Im lam||^2 <= 2(T-1) in the orthonormal plane coordinates.
double beta_ball_integral(double T, double c_beta_override = -1.0);

// --- truncated-Eisenstein inner products ---------------------------------------

// M(s, lam) = prod_{i<j, s(i)>s(j)} R(l_i - l_j).
cplx intertwining_scalar(const WeylElement& s, const SpectralParameter3& lam);

struct LanglandsTerm {
    WeylElement s1, s2;
    cplx exponent;  // (s1 lam1 + s2 lam2)(C) with C = (c, 0, -c)
    cplx den1, den2;
    cplx m_factor; // M(s1, lam1) M(s2, lam2)
    cplx value;
};
struct LanglandsSum {
    cplx total{};
    std::vector<LanglandsTerm> terms;
};
// The 36-term minimal-parabolic inner-product sum, generated from the Weyl
// group.  Throws singularity_error when a denominator falls below den_floor.
LanglandsSum langlands_minimal_sum(const SpectralParameter3& lam1,
                                   const SpectralParameter3& lam2, double c,
                                   double den_floor = 1e-6);

// Closed form of the 6 diagonal contributions at the tempered point:
// 3c^2 - 2c sum R'/R(i t_i - i t_j) + pairwise products of the R'/R values.
double diagonal_terms(double t1, double t2, double t3, double c);
// The same 6 terms at finite regularization eps (lam1 shifted by eps(1,0,-1)).
cplx diagonal_sum_at_eps(double t1, double t2, double t3, double c, double eps);

// --- maximal parabolic ----------------------------------------------------------

struct MaxParabolicNorm {
    double value = 0.0;      // (3/2) c - Re R'/R at the evaluation point
    double gamma_part = 0.0; // Re of the Gamma_R-factor share of Lambda'/Lambda
    cplx l_part{};           // Dirichlet-series share
    double tail_bound = 0.0;
    cplx eval_point{};
};
// Cuspidal maximal-parabolic norm slope: (3/2) c - R'/R(s0, phi) with the
// logarithmic derivative taken at s0 = 3/2 + it, inside the region where the
// Dirichlet series converges absolutely (the spectral-parameter height it is
// kept, the real part is moved off the critical line).
MaxParabolicNorm max_parabolic_cuspidal_norm(double t, double c, const zeta::HeckeData& data);

// --- degenerate residue ----------------------------------------------------------

struct ResidueTerm {
    std::string label;
    cplx value;
};
struct ResidueNorm {
    double value = 0.0; // real part of the total; Im is a consistency check
    cplx total{};
    cplx pair_limit{}; // analytic limit of the (12)xe + (13)x(123) pair
    std::vector<ResidueTerm> terms;
};
// The 11-term norm of the truncated residual Eisenstein series E(P1, g, *, 1):
// nine terms evaluated at eps = 0 plus the analytic limit of the
// pole-cancelling pair, 2c + Z'/Z(3/2+3it) + Z'/Z(3/2-3it).
ResidueNorm degenerate_residue_norm(double t, double c);
// The cancelling pair at finite eps (for extrapolation cross-checks).
cplx degenerate_residue_pair_at_eps(double t, double c, double eps);

} // namespace weyl::sl3
