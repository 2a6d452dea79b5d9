#include "weyl/trace.hpp"
#include "weyl/errors.hpp"

#include <algorithm>
#include <cmath>

namespace weyl::trace {

using num::pi;
using sl2::UpperHalfPoint;
using transform::Kernel;

GeometricSide geometric_side(const transform::TransformTable& table, double C, double sigma,
                             double tol) {
    if (table.T <= 0.0)
        throw validation_error("geometric_side: table carries no smeared transform");
    if (std::abs(sigma - table.spec.sigma) > 1e-12)
        throw validation_error("geometric_side: sigma does not match the test-function support");

    GeometricSide side;
    side.identity = sl2::area_truncated(C) * transform::g_at_identity(table);

    const double u_sigma = 4.0 * std::sinh(0.5 * sigma) * std::sinh(0.5 * sigma);
    const auto elems = sl2::kernel_support_elements(C, sigma);
    const double v_floor = std::sqrt(3.0) / 2.0;

    for (const auto& el : elems) {
        // bounding box of {z in F_C : u(z, gamma z) <= u_sigma} by coarse scan
        double u_lo = el.z_u, u_hi = el.z_u, v_lo = el.z_v, v_hi = el.z_v;
        const int nv = 160, nu = 120;
        for (int i = 0; i <= nv; ++i) {
            const double v = v_floor * std::pow(C / v_floor, static_cast<double>(i) / nv);
            for (auto [a, b] : sl2::domain_slice(v, C))
                for (int j = 0; j <= nu; ++j) {
                    const double u = a + (b - a) * static_cast<double>(j) / nu;
                    const UpperHalfPoint z{u, v};
                    if (sl2::point_pair_u(z, sl2::moebius_act(el.gamma, z)) <= u_sigma) {
                        u_lo = std::min(u_lo, u);
                        u_hi = std::max(u_hi, u);
                        v_lo = std::min(v_lo, v);
                        v_hi = std::max(v_hi, v);
                    }
                }
        }
        const double pad_u = 0.02 + 2.0 * sigma, pad_v = 0.05 + 2.0 * sigma;
        auto integrand = [&](const UpperHalfPoint& z) {
            const double uu = sl2::point_pair_u(z, sl2::moebius_act(el.gamma, z));
            return transform::radial_from_invariant(table, uu);
        };
        auto r = sl2::integrate_over_truncated_box(integrand, C, u_lo - pad_u, u_hi + pad_u,
                                                   v_lo * (1.0 - pad_v), v_hi * (1.0 + pad_v),
                                                   tol);
        side.contributions.push_back({el.gamma, r.value, r.error});
        side.elliptic += r.value;
        side.elliptic_abs += std::abs(r.value);
        side.error += r.error;
    }
    return side;
}

double spectral_sum(const counting::SpectralDataset& ds,
                    const transform::TransformTable& table) {
    if (ds.kind != counting::DatasetKind::sl2)
        throw validation_error("spectral_sum: SL2 r-value datasets only");
    if (table.T <= 0.0)
        throw validation_error("spectral_sum: table carries no smeared transform");
    double sum = transform::ghat_at(table, {0.5, 0.0}).real(); // j = 0 constant
    for (double r : ds.r_values) sum += table.ghat_interp(r, Kernel::smeared);
    return sum;
}

double spectral_sum_noise(const counting::SpectralDataset& ds,
                          const transform::TransformTable& table) {
    double s2 = 0.0;
    for (double r : ds.r_values) {
        const double g = table.ghat_interp(r, Kernel::smeared);
        s2 += g * g;
    }
    return std::sqrt(s2);
}

double weyl_ratio(const counting::SpectralDataset& ds, double T_eig) {
    if (ds.kind != counting::DatasetKind::sl2)
        throw validation_error("weyl_ratio: SL2 datasets only");
    if (T_eig <= 0.0) throw validation_error("weyl_ratio: require T_eig > 0");
    if (ds.manifest.completeness_height < T_eig)
        throw validation_error("weyl_ratio: dataset not complete up to the requested height");
    std::int64_t n = 1; // lambda_0 = 0
    for (double r : ds.r_values)
        if (0.25 + r * r <= T_eig) ++n;
    return static_cast<double>(n) / (T_eig / 12.0);
}

PartialTraceReport lower_bound_check(const counting::SpectralDataset& ds,
                                     const transform::TransformTable& table, double C,
                                     double sigma) {
    PartialTraceReport rep;
    rep.T = table.T;
    rep.C = C;
    rep.sigma = sigma;

    const double g_i = transform::g_at_identity(table);
    const double quad_tol = std::max(1e-10, 1e-6 * std::abs(g_i));
    const auto geom = geometric_side(table, C, sigma, quad_tol);
    rep.identity_term = geom.identity;
    rep.elliptic_term = geom.elliptic;
    rep.elliptic_bound = geom.elliptic_abs;
    rep.eisenstein_term = eis::eisenstein_band_integral(table.T, C, table) / (4.0 * pi);
    rep.spectral_sum = spectral_sum(ds, table);
    rep.noise_sigma = spectral_sum_noise(ds, table);
    rep.c0_empirical = (g_i > 0.0) ? geom.elliptic_abs / (sigma * sigma * g_i) : 0.0;

    rep.inequality_slack =
        rep.spectral_sum + rep.eisenstein_term + rep.elliptic_bound - rep.identity_term;
    // spectral-side truncation: mass of ghat_T beyond the dataset's top r-value
    double tail = 0.0;
    if (ds.manifest.completeness_height > 0.25) {
        const double r_top = std::sqrt(ds.manifest.completeness_height - 0.25);
        for (double t = r_top; t < table.t_max; t += 0.25)
            tail += table.ghat_interp(t, Kernel::smeared) * 0.25;
    }
    rep.tolerance = 3.0 * (geom.error + 1e-4 * std::abs(rep.eisenstein_term) + tail);
    rep.violation = rep.inequality_slack < -rep.tolerance;
    return rep;
}

} // namespace weyl::trace
