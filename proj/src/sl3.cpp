#include "weyl/sl3.hpp"
#include "weyl/errors.hpp"

#include <algorithm>
#include <cmath>

namespace weyl::sl3 {

using num::pi;

SpectralParameter3::SpectralParameter3(cplx a, cplx b, cplx c) : l1(a), l2(b), l3(c) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
    if (std::abs(a + b + c) > 1e-12 * scale)
        throw validation_error("SpectralParameter3: coordinates must sum to zero");
}

SpectralParameter3 SpectralParameter3::tempered(double t1, double t2, double t3) {
    return SpectralParameter3({0.0, t1}, {0.0, t2}, {0.0, t3});
}

bool SpectralParameter3::within_unitary_bound(double tol) const {
    return std::abs(l1.real()) < 0.5 + tol && std::abs(l2.real()) < 0.5 + tol &&
           std::abs(l3.real()) < 0.5 + tol;
}

bool SpectralParameter3::is_imaginary(double tol) const {
    return std::abs(l1.real()) <= tol && std::abs(l2.real()) <= tol &&
           std::abs(l3.real()) <= tol;
}

const std::vector<WeylElement>& WeylElement::all() {
    static const std::vector<WeylElement> elems = {
        WeylElement{{0, 1, 2}}, WeylElement{{1, 0, 2}}, WeylElement{{2, 1, 0}},
        WeylElement{{0, 2, 1}}, WeylElement{{1, 2, 0}}, WeylElement{{2, 0, 1}}};
    return elems;
}

WeylElement WeylElement::compose(const WeylElement& o) const {
    WeylElement r;
    for (int i = 0; i < 3; ++i) r.perm[i] = perm[o.perm[i]];
    return r;
}

WeylElement WeylElement::inverse() const {
    WeylElement r;
    for (int i = 0; i < 3; ++i) r.perm[perm[i]] = i;
    return r;
}

std::string WeylElement::name() const {
    if (perm == std::array<int, 3>{0, 1, 2}) return "e";
    if (perm == std::array<int, 3>{1, 0, 2}) return "(12)";
    if (perm == std::array<int, 3>{2, 1, 0}) return "(13)";
    if (perm == std::array<int, 3>{0, 2, 1}) return "(23)";
    if (perm == std::array<int, 3>{1, 2, 0}) return "(123)";
    return "(132)";
}

SpectralParameter3 weyl_act(const WeylElement& s, const SpectralParameter3& lam) {
    const auto inv = s.inverse();
    const auto c = lam.coords();
    return SpectralParameter3(c[static_cast<std::size_t>(inv.perm[0])],
                              c[static_cast<std::size_t>(inv.perm[1])],
                              c[static_cast<std::size_t>(inv.perm[2])]);
}

cplx pair_coroot(const SpectralParameter3& lam, const Coroot& coroot) {
    const auto c = lam.coords();
    return static_cast<double>(coroot[0]) * c[0] + static_cast<double>(coroot[1]) * c[1] +
           static_cast<double>(coroot[2]) * c[2];
}

double RootDatum3::alpha(int k, const std::array<double, 3>& H) {
    switch (k) {
        case 1: return H[0] - H[1];
        case 2: return H[1] - H[2];
        case 3: return H[0] - H[2];
        default: throw validation_error("RootDatum3::alpha: k must be 1, 2 or 3");
    }
}

bool tau_hat(Parabolic P, const std::array<double, 3>& H) {
    if (std::abs(H[0] + H[1] + H[2]) > 1e-9)
        throw validation_error("tau_hat: point must lie in the sum-zero plane");
    // H = c1 a1^vee + c2 a2^vee  =>  c1 = h1, c2 = -h3
    const double c1 = H[0], c2 = -H[2];
    switch (P) {
        case Parabolic::P0: return c1 > 0.0 && c2 > 0.0;
        case Parabolic::P1: return c2 > 0.0;
        case Parabolic::P2: return c1 > 0.0;
        case Parabolic::G: return true;
    }
    return false;
}

cplx laplace_eigenvalue(const SpectralParameter3& lam) {
    return 1.0 - 0.5 * (lam.l1 * lam.l1 + lam.l2 * lam.l2 + lam.l3 * lam.l3);
}

// --- spectral density -----------------------------------------------------------

namespace {

std::array<double, 3> wall_values(const SpectralParameter3& lam) {
    return {pair_coroot(lam, alpha1_vee).imag(), pair_coroot(lam, alpha2_vee).imag(),
            pair_coroot(lam, alpha3_vee).imag()};
}

void require_tempered(const SpectralParameter3& lam, const char* who) {
    if (!lam.is_imaginary(1e-10))
        throw validation_error(std::string(who) + ": defined on the imaginary axis only");
}

// orthonormal coordinates on the sum-zero plane
struct PlaneCoords {
    // lam = x e1 + y e2, e1 = (1,-1,0)/sqrt2, e2 = (1,1,-2)/sqrt6
    static std::array<double, 3> walls(double x, double y) {
        const double s2 = std::sqrt(2.0), s32 = std::sqrt(1.5);
        return {s2 * x, -x / s2 + s32 * y, x / s2 + s32 * y};
    }
};

// stored normalization, matched numerically at T = 10^4:
// Integral_{ball(T)} c_beta * kernel = T^{5/2} / (Gamma(7/2) (4 pi)^{5/2})
constexpr double c_beta_stored = 1.68016e-4;

double kernel_ball_integral(double T) {
    if (T <= 1.0) return 0.0;
    const double R = std::sqrt(2.0 * (T - 1.0));
    const int n_theta = 720;
    double total = 0.0;
    for (int j = 0; j < n_theta; ++j) {
        const double th = 2.0 * pi * (static_cast<double>(j) + 0.5) / n_theta;
        const double cth = std::cos(th), sth = std::sin(th);
        auto rho_integrand = [&](double rho) {
            const auto w = PlaneCoords::walls(rho * cth, rho * sth);
            double prod = rho;
            for (double tk : w) prod *= tk * std::tanh(pi * tk);
            return prod;
        };
        total += num::integrate(rho_integrand, 0.0, R, 1e-9 * std::pow(R, 5.0)).value;
    }
    return total * 2.0 * pi / n_theta;
}

} // namespace

double beta_kernel(const SpectralParameter3& lam) {
    require_tempered(lam, "beta_kernel");
    double prod = 1.0;
    for (double tk : wall_values(lam)) prod *= tk * std::tanh(pi * tk);
    return prod;
}

double beta_kernel_gamma_form(const SpectralParameter3& lam) {
    require_tempered(lam, "beta_kernel_gamma_form");
    double prod = 1.0;
    for (double tk : wall_values(lam)) {
        if (tk == 0.0) return 0.0; // 1/Gamma(0) = 0
        const cplx num_log = zeta::log_gamma({0.5, tk});
        const cplx den_log = zeta::log_gamma({0.0, tk});
        prod *= std::exp(2.0 * (num_log.real() - den_log.real()));
    }
    return prod;
}

double c_beta() { return c_beta_stored; }

double calibrate_c_beta(double T_cal) {
    if (T_cal <= 2.0) throw validation_error("calibrate_c_beta: calibration height too small");
    const double target =
        std::pow(T_cal, 2.5) / (std::tgamma(3.5) * std::pow(4.0 * pi, 2.5));
    return target / kernel_ball_integral(T_cal);
}

double beta_density(const SpectralParameter3& lam) { return c_beta_stored * beta_kernel(lam); }

double beta_ball_integral(double T, double c_beta_override) {
    if (T <= 0.0) throw validation_error("beta_ball_integral: require T > 0");
    const double c = (c_beta_override > 0.0) ? c_beta_override : c_beta_stored;
    return c * kernel_ball_integral(T);
}

// --- intertwining and inner products ----------------------------------------------

cplx intertwining_scalar(const WeylElement& s, const SpectralParameter3& lam) {
    const auto l = lam.coords();
    cplx prod = 1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (s.perm[i] > s.perm[j])
                prod *= zeta::scattering_ratio(l[static_cast<std::size_t>(i)] -
                                               l[static_cast<std::size_t>(j)]);
    return prod;
}

LanglandsSum langlands_minimal_sum(const SpectralParameter3& lam1,
                                   const SpectralParameter3& lam2, double c, double den_floor) {
    LanglandsSum out;
    for (const auto& s1 : WeylElement::all()) {
        const auto sl1 = weyl_act(s1, lam1);
        const cplx m1 = intertwining_scalar(s1, lam1);
        for (const auto& s2 : WeylElement::all()) {
            const auto sl2v = weyl_act(s2, lam2);
            LanglandsTerm term;
            term.s1 = s1;
            term.s2 = s2;
            const cplx x1 = sl1.l1 + sl2v.l1, x2 = sl1.l2 + sl2v.l2, x3 = sl1.l3 + sl2v.l3;
            term.den1 = x1 - x2;
            term.den2 = x2 - x3;
            if (std::abs(term.den1) < den_floor || std::abs(term.den2) < den_floor)
                throw singularity_error("langlands_minimal_sum: denominator below floor at (" +
                                        s1.name() + ", " + s2.name() +
                                        "); use the diagonal/limit routine");
            term.exponent = (x1 - x3) * c;
            term.m_factor = m1 * intertwining_scalar(s2, lam2);
            term.value = std::exp(term.exponent) / (term.den1 * term.den2) * term.m_factor;
            out.total += term.value;
            out.terms.push_back(term);
        }
    }
    return out;
}

double diagonal_terms(double t1, double t2, double t3, double c) {
    if (std::abs(t1 + t2 + t3) > 1e-9)
        throw validation_error("diagonal_terms: require t1 + t2 + t3 = 0");
    const double d12 = t1 - t2, d23 = t2 - t3, d13 = t1 - t3;
    for (double d : {d12, d23, d13})
        if (std::abs(d) < 1e-3)
            throw singularity_error("diagonal_terms: spectral parameter too close to a wall");
    const double r12 = zeta::scattering_ratio_log_derivative({0.0, d12}).real();
    const double r23 = zeta::scattering_ratio_log_derivative({0.0, d23}).real();
    const double r13 = zeta::scattering_ratio_log_derivative({0.0, d13}).real();
    return 3.0 * c * c - 2.0 * c * (r12 + r23 + r13) + r12 * r23 + r13 * r23 + r12 * r13;
}

cplx diagonal_sum_at_eps(double t1, double t2, double t3, double c, double eps) {
    if (eps <= 0.0) throw validation_error("diagonal_sum_at_eps: require eps > 0");
    const SpectralParameter3 lam1{cplx{eps, t1}, cplx{0.0, t2}, cplx{-eps, t3}};
    const SpectralParameter3 lam2 = SpectralParameter3::tempered(-t1, -t2, -t3);
    const auto sum = langlands_minimal_sum(lam1, lam2, c, 1e-12);
    cplx total = 0.0;
    for (const auto& term : sum.terms)
        if (term.s1 == term.s2) total += term.value;
    return total;
}

// --- maximal parabolic -------------------------------------------------------------

MaxParabolicNorm max_parabolic_cuspidal_norm(double t, double c, const zeta::HeckeData& data) {
    data.validate();
    MaxParabolicNorm out;
    out.eval_point = cplx{1.5, t};
    const cplx s0 = out.eval_point;
    const auto l0 = zeta::hecke_l_log_derivative(s0, data);
    const auto l1 = zeta::hecke_l_log_derivative(s0 + 1.0, data);
    const cplx gamma_share =
        zeta::gamma_r_log_derivative(s0 + data.nu) + zeta::gamma_r_log_derivative(s0 - data.nu) -
        zeta::gamma_r_log_derivative(s0 + 1.0 + data.nu) -
        zeta::gamma_r_log_derivative(s0 + 1.0 - data.nu);
    out.gamma_part = gamma_share.real();
    out.l_part = l0.value - l1.value;
    out.tail_bound = l0.tail_bound + l1.tail_bound;
    out.value = 1.5 * c - (gamma_share + out.l_part).real();
    return out;
}

// --- degenerate residue ---------------------------------------------------------------

namespace {

cplx R(cplx s) { return zeta::scattering_ratio(s); }

} // namespace

cplx degenerate_residue_pair_at_eps(double t, double c, double eps) {
    if (eps <= 0.0) throw validation_error("degenerate_residue_pair_at_eps: require eps > 0");
    const cplx i3t{0.0, 3.0 * t};
    const cplx q = R(0.5 + i3t + 3.0 * eps) * R(-0.5 + i3t + 3.0 * eps) * R(0.5 - i3t) *
                   R(-0.5 - i3t);
    return (std::exp(3.0 * eps * c) - std::exp(-3.0 * eps * c) * q) / (3.0 * eps);
}

ResidueNorm degenerate_residue_norm(double t, double c) {
    if (std::abs(t) < 1e-2)
        throw pole_error("degenerate_residue_norm: t too close to the degenerate point 0");
    if (c <= 0.0) throw validation_error("degenerate_residue_norm: require c > 0");
    const cplx i3t{0.0, 3.0 * t};
    const cplx rp = R(0.5 + i3t), rm = R(-0.5 + i3t);
    const cplx qp = R(0.5 - i3t), qm = R(-0.5 - i3t);
    const cplx six_it{0.0, 6.0 * t};

    ResidueNorm out;
    auto add = [&](const std::string& label, cplx v) {
        out.terms.push_back({label, v});
        out.total += v;
    };
    add("(12)x(12)", std::exp(cplx{-c, 0.0}) / cplx{-2.0, 0.0});
    add("(12)x(13)",
        std::exp((-1.0 + six_it) * c) / ((-0.5 + i3t) * (-0.5 + i3t)) * qp * qm);
    add("(12)x(321)", std::exp((-1.5 + i3t) * c) / ((-1.5 - i3t) * six_it) * qp);
    add("(13)x(12)",
        std::exp((-1.0 - six_it) * c) / ((-0.5 - i3t) * (-0.5 - i3t)) * rp * rm);
    add("(13)x(13)", std::exp(cplx{-c, 0.0}) / cplx{-2.0, 0.0} * rp * rm * qp * qm);
    add("(13)x(321)", std::exp((-1.5 - i3t) * c) / ((-six_it) * (-1.5 + i3t)) * rp * rm * qp);
    add("(321)x(12)", std::exp((-1.5 - i3t) * c) / ((-1.5 + i3t) * (-six_it)) * rp);
    add("(321)x(13)", std::exp((-1.5 + i3t) * c) / (six_it * (-1.5 - i3t)) * rp * qp * qm);
    add("(321)x(321)", rp * qp);

    // (12)xe + (13)x(123): the 1/(3 eps) poles cancel; the limit carries the
    // derivative of Z(3/2+3it+3eps)/Z(3/2+3it-3eps)-type ratios
    out.pair_limit = 2.0 * c + zeta::completed_zeta_log_derivative(1.5 + i3t) +
                     zeta::completed_zeta_log_derivative(1.5 - i3t);
    add("(12)xe + (13)x(123)", out.pair_limit);

    out.value = out.total.real();
    return out;
}

} // namespace weyl::sl3
