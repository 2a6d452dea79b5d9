#include "weyl/counting.hpp"
#include "weyl/errors.hpp"

#include <algorithm>
#include <cmath>

namespace weyl::counting {

using num::pi;

void SpectralDataset::validate() const {
    if (kind == DatasetKind::sl3) {
        for (const auto& lam : sl3_entries)
            if (!lam.within_unitary_bound(1e-12))
                throw validation_error("SpectralDataset: entry violates |Re l_i| < 1/2");
    }
}

RegionSpec RegionSpec::ball(double r, double scale) {
    RegionSpec s;
    s.shape = Shape::ball;
    s.radius = r;
    s.scale = scale;
    return s;
}

RegionSpec RegionSpec::annulus(double r_in, double r_out, double scale) {
    if (r_in >= r_out) throw validation_error("RegionSpec::annulus: need r_in < r_out");
    RegionSpec s;
    s.shape = Shape::annulus;
    s.inner = r_in;
    s.radius = r_out;
    s.scale = scale;
    return s;
}

RegionSpec RegionSpec::wall_band(double dist, double within_r, double scale) {
    RegionSpec s;
    s.shape = Shape::wall_band;
    s.wall_distance = dist;
    s.radius = within_r;
    s.scale = scale;
    return s;
}

RegionSpec RegionSpec::ball_minus_wall_band(double dist, double r, double scale) {
    RegionSpec s;
    s.shape = Shape::ball_minus_wall_band;
    s.wall_distance = dist;
    s.radius = r;
    s.scale = scale;
    return s;
}

namespace {

struct PlanePoint {
    double rho;       // euclidean norm of Im(lam) in C^3
    double wall_dist; // min euclidean distance to the three walls
};

PlanePoint plane_point(const sl3::SpectralParameter3& lam) {
    const double t1 = lam.l1.imag(), t2 = lam.l2.imag(), t3 = lam.l3.imag();
    PlanePoint p;
    p.rho = std::sqrt(t1 * t1 + t2 * t2 + t3 * t3);
    p.wall_dist = std::min({std::abs(t1 - t2), std::abs(t2 - t3), std::abs(t1 - t3)}) /
                  std::sqrt(2.0);
    return p;
}

constexpr double edge = 1e-10;

// walls of the unit-norm point at plane angle theta (orthonormal coordinates)
std::array<double, 3> unit_walls(double theta) {
    const double x = std::cos(theta), y = std::sin(theta);
    const double s2 = std::sqrt(2.0), s32 = std::sqrt(1.5);
    return {s2 * x, -x / s2 + s32 * y, x / s2 + s32 * y};
}

} // namespace

bool RegionSpec::contains(const sl3::SpectralParameter3& lam) const {
    const auto p = plane_point(lam);
    const double R = radius * scale, rin = inner * scale, wd = wall_distance * scale;
    switch (shape) {
        case Shape::ball: return p.rho <= R + edge;
        case Shape::annulus: return p.rho >= rin - edge && p.rho <= R + edge;
        case Shape::wall_band: return p.rho <= R + edge && p.wall_dist <= wd + edge;
        case Shape::ball_minus_wall_band:
            // complement shares the band predicate so that band + complement
            // partition the ball exactly
            return p.rho <= R + edge && !(p.wall_dist <= wd + edge);
    }
    return false;
}

std::int64_t count_in_region(const SpectralDataset& ds, const RegionSpec& region) {
    if (ds.kind != DatasetKind::sl3)
        throw validation_error("count_in_region: SL3 datasets only (SL2 uses interval counts)");
    std::int64_t n = 0;
    for (const auto& lam : ds.sl3_entries)
        if (region.contains(lam)) ++n;
    return n;
}

double region_beta_integral(const RegionSpec& region) {
    const double R = region.radius * region.scale;
    const double rin = region.inner * region.scale;
    const double wd = region.wall_distance * region.scale;
    const int n_theta = 720;
    double total = 0.0;
    for (int j = 0; j < n_theta; ++j) {
        const double th = 2.0 * pi * (static_cast<double>(j) + 0.5) / n_theta;
        const auto w = unit_walls(th);
        // euclidean wall distance at radius rho is rho * m
        const double m = std::min({std::abs(w[0]), std::abs(w[1]), std::abs(w[2])}) /
                         std::sqrt(2.0);
        double lo = 0.0, hi = R;
        switch (region.shape) {
            case RegionSpec::Shape::ball: break;
            case RegionSpec::Shape::annulus: lo = rin; break;
            case RegionSpec::Shape::wall_band:
                hi = (m > 0.0) ? std::min(R, wd / m) : R;
                break;
            case RegionSpec::Shape::ball_minus_wall_band:
                lo = (m > 0.0) ? std::min(R, wd / m) : R;
                break;
        }
        if (hi <= lo) continue;
        auto rho_integrand = [&](double rho) {
            double prod = rho;
            for (double f : w) {
                const double tau = rho * f;
                prod *= tau * std::tanh(pi * tau);
            }
            return prod;
        };
        total += num::integrate(rho_integrand, lo, hi, 1e-8 * (1.0 + std::pow(R, 5.0))).value;
    }
    return sl3::c_beta() * total * 2.0 * pi / n_theta;
}

double equidistribution_ratio(const SpectralDataset& ds, const RegionSpec& region,
                              double volume) {
    if (volume <= 0.0) throw validation_error("equidistribution_ratio: volume must be positive");
    const double mass = region_beta_integral(region);
    if (mass <= 0.0)
        throw precision_error("equidistribution_ratio: region carries no beta mass");
    return static_cast<double>(count_in_region(ds, region)) / (volume * mass);
}

bool classify_tempered(const sl3::SpectralParameter3& lam, double tol) {
    return std::max({std::abs(lam.l1.real()), std::abs(lam.l2.real()),
                     std::abs(lam.l3.real())}) <= tol;
}

bool classify_self_dual(const sl3::SpectralParameter3& lam, double tol) {
    const auto c = lam.coords();
    for (int k = 0; k < 3; ++k) {
        const int i = (k + 1) % 3, j = (k + 2) % 3;
        if (std::abs(c[static_cast<std::size_t>(k)]) <= tol &&
            std::abs(c[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(j)]) <= tol)
            return true;
    }
    return false;
}

} // namespace weyl::counting
