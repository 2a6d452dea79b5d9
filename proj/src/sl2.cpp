#include "weyl/sl2.hpp"
#include "weyl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

namespace weyl::sl2 {

using num::pi;

IntegerMatrix2::IntegerMatrix2(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1)
        throw validation_error("IntegerMatrix2: determinant must be exactly 1");
}

IntegerMatrix2 IntegerMatrix2::operator*(const IntegerMatrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

UpperHalfPoint moebius_act(const IntegerMatrix2& g, const UpperHalfPoint& z) {
    const double cu_d = static_cast<double>(g.c) * z.u + static_cast<double>(g.d);
    const double cv = static_cast<double>(g.c) * z.v;
    const double den = cu_d * cu_d + cv * cv;
    const double au_b = static_cast<double>(g.a) * z.u + static_cast<double>(g.b);
    const double av = static_cast<double>(g.a) * z.v;
    // (az+b)(conj(cz+d)) / |cz+d|^2
    return {(au_b * cu_d + av * cv) / den, z.v / den};
}

std::pair<UpperHalfPoint, IntegerMatrix2> reduce(const UpperHalfPoint& z) {
    if (!(z.v > 0.0)) throw validation_error("reduce: point not in the upper half-plane");
    UpperHalfPoint w = z;
    IntegerMatrix2 g; // accumulates gamma with w = gamma z
    for (int iter = 0; iter < 10000; ++iter) {
        const double n = std::floor(w.u + 0.5); // sends Re into [-1/2, 1/2)
        if (n != 0.0) {
            const auto ni = static_cast<std::int64_t>(n);
            w.u -= n;
            g = IntegerMatrix2{1, -ni, 0, 1} * g;
        }
        const double r2 = w.u * w.u + w.v * w.v;
        if (r2 < 1.0 - 1e-15) {
            // invert: z -> -1/z
            w = UpperHalfPoint{-w.u / r2, w.v / r2};
            g = IntegerMatrix2{0, -1, 1, 0} * g;
            continue;
        }
        if (r2 <= 1.0 + 1e-14 && w.u > 1e-15) {
            // boundary arc: prefer Re <= 0
            w = UpperHalfPoint{-w.u / r2, w.v / r2};
            g = IntegerMatrix2{0, -1, 1, 0} * g;
        }
        return {w, g};
    }
    throw validation_error("reduce: no convergence after 10^4 steps (corrupt input?)");
}

double area_truncated(double C) {
    if (C < 1.0) throw validation_error("area_truncated: require C >= 1");
    return pi / 3.0 - 1.0 / C;
}

double point_pair_u(const UpperHalfPoint& z, const UpperHalfPoint& w) {
    const double du = z.u - w.u, dv = z.v - w.v;
    return (du * du + dv * dv) / (z.v * w.v);
}

double hyperbolic_distance(const UpperHalfPoint& z, const UpperHalfPoint& w) {
    return std::acosh(1.0 + 0.5 * point_pair_u(z, w));
}

std::vector<std::pair<double, double>> domain_slice(double v, double C) {
    std::vector<std::pair<double, double>> out;
    const double v_floor = std::sqrt(3.0) / 2.0;
    if (v < v_floor || v > C) return out;
    if (v >= 1.0) {
        out.emplace_back(-0.5, 0.5);
    } else {
        const double ub = std::sqrt(1.0 - v * v);
        out.emplace_back(-0.5, -ub);
        out.emplace_back(ub, 0.5);
    }
    return out;
}

namespace {

DomainIntegral integrate_slabs(const std::function<double(const UpperHalfPoint&)>& f, double C,
                               double u_lo, double u_hi, double v_lo, double v_hi, double tol) {
    const double v_floor = std::sqrt(3.0) / 2.0;
    v_lo = std::max(v_lo, v_floor);
    v_hi = std::min(v_hi, C);
    if (v_hi <= v_lo) return {};
    const double inner_tol = std::max(tol * 0.02, 1e-14);
    double inner_err_acc = 0.0;

    auto slice_integral = [&](double v) {
        double s = 0.0;
        for (auto [a, b] : domain_slice(v, C)) {
            a = std::max(a, u_lo);
            b = std::min(b, u_hi);
            if (b <= a) continue;
            auto r = num::integrate([&](double u) { return f(UpperHalfPoint{u, v}); }, a, b,
                                    inner_tol);
            s += r.value;
            inner_err_acc += r.error;
        }
        return s / (v * v);
    };

    // Split the v-range at 1 (slice shape changes) and at the box corners.
    std::vector<double> knots{v_lo, v_hi};
    if (v_lo < 1.0 && 1.0 < v_hi) knots.push_back(1.0);
    std::sort(knots.begin(), knots.end());
    DomainIntegral total;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        auto r = num::integrate(slice_integral, knots[i], knots[i + 1], tol * 0.5);
        total.value += r.value;
        total.error += r.error;
    }
    total.error += inner_err_acc * (v_hi - v_lo) * 0.1; // crude propagation of inner noise
    return total;
}

} // namespace

DomainIntegral integrate_over_truncated(const std::function<double(const UpperHalfPoint&)>& f,
                                        double C, double tol) {
    if (C < 1.0) throw validation_error("integrate_over_truncated: require C >= 1");
    if (tol <= 0.0) throw validation_error("integrate_over_truncated: tol must be positive");
    return integrate_slabs(f, C, -0.5, 0.5, 0.0, C, tol);
}

DomainIntegral integrate_over_truncated_box(const std::function<double(const UpperHalfPoint&)>& f,
                                            double C, double u_lo, double u_hi, double v_lo,
                                            double v_hi, double tol) {
    if (C < 1.0) throw validation_error("integrate_over_truncated_box: require C >= 1");
    return integrate_slabs(f, C, u_lo, u_hi, v_lo, v_hi, tol);
}

SupportElement min_displacement(const IntegerMatrix2& gamma, double C) {
    const double v_floor = std::sqrt(3.0) / 2.0;
    SupportElement best;
    best.gamma = gamma;
    best.min_displacement = 1e300;
    // log-spaced v grid, uniform u grid on each slice
    const int nv = 80, nu = 48;
    for (int i = 0; i <= nv; ++i) {
        const double v = v_floor * std::pow(C / v_floor, static_cast<double>(i) / nv);
        for (auto [a, b] : domain_slice(std::min(v, C), C)) {
            for (int j = 0; j <= nu; ++j) {
                const double u = a + (b - a) * static_cast<double>(j) / nu;
                const UpperHalfPoint z{u, std::min(v, C)};
                const double disp = point_pair_u(z, moebius_act(gamma, z));
                if (disp < best.min_displacement) {
                    best.min_displacement = disp;
                    best.z_u = z.u;
                    best.z_v = z.v;
                }
            }
        }
    }
    // local coordinate-descent refinement
    double step_u = 0.02, step_v = 0.02;
    for (int it = 0; it < 60; ++it) {
        bool improved = false;
        for (int dir = 0; dir < 4; ++dir) {
            const double du = (dir == 0) ? step_u : (dir == 1) ? -step_u : 0.0;
            const double dv = (dir == 2) ? step_v : (dir == 3) ? -step_v : 0.0;
            UpperHalfPoint z{best.z_u + du, best.z_v + dv};
            z.u = std::clamp(z.u, -0.5, 0.5);
            z.v = std::clamp(z.v, v_floor, C);
            if (z.u * z.u + z.v * z.v < 1.0) continue;
            const double disp = point_pair_u(z, moebius_act(gamma, z));
            if (disp < best.min_displacement) {
                best.min_displacement = disp;
                best.z_u = z.u;
                best.z_v = z.v;
                improved = true;
            }
        }
        if (!improved) {
            step_u *= 0.5;
            step_v *= 0.5;
            if (step_u < 1e-9) break;
        }
    }
    return best;
}

std::vector<SupportElement> kernel_support_elements(double C, double sigma) {
    if (C < 1.0) throw validation_error("kernel_support_elements: require C >= 1");
    if (sigma <= 0.0) throw validation_error("kernel_support_elements: require sigma > 0");
    if (sigma > 0.5)
        throw validation_error(
            "kernel_support_elements: sigma too large, distinct translates overlap");

    const double u_sigma = 4.0 * std::sinh(0.5 * sigma) * std::sinh(0.5 * sigma);
    // |cz+d|^2 is confined to [1/beta, beta] wherever u(z, gamma z) <= u_sigma
    const double beta = 1.0 + 0.5 * u_sigma + std::sqrt(u_sigma + 0.25 * u_sigma * u_sigma);
    const double v_min = std::sqrt(3.0) / 2.0;
    const auto c_max = static_cast<std::int64_t>(std::floor(std::sqrt(beta) / v_min)) + 1;
    const double Rz = std::sqrt(0.25 + C * C);

    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> seen;
    std::vector<SupportElement> out;

    auto consider = [&](IntegerMatrix2 g) {
        if (g.is_identity_up_to_sign()) return;
        // normalize sign in PSL2: c > 0, or c == 0 and a > 0
        if (g.c < 0 || (g.c == 0 && g.a < 0)) g = IntegerMatrix2{-g.a, -g.b, -g.c, -g.d};
        if (!seen.insert({g.a, g.b, g.c, g.d}).second) return;
        auto m = min_displacement(g, C);
        if (m.min_displacement <= u_sigma * (1.0 + 1e-9) + 1e-13) out.push_back(m);
    };

    // translations (c = 0): u(z, z+b) = b^2/v^2, minimal at v = C
    const auto b_max = static_cast<std::int64_t>(std::floor(C * std::sqrt(u_sigma))) + 1;
    for (std::int64_t b = 1; b <= b_max; ++b) {
        consider(IntegerMatrix2{1, b, 0, 1});
        consider(IntegerMatrix2{1, -b, 0, 1});
    }

    for (std::int64_t c = 1; c <= c_max; ++c) {
        const auto d_max = static_cast<std::int64_t>(std::ceil(std::sqrt(beta) + 0.5 * c)) + 1;
        for (std::int64_t d = -d_max; d <= d_max; ++d) {
            if (std::gcd(c, std::abs(d)) != 1) continue;
            // base solution of a*d - b*c = 1
            std::int64_t a0, b0;
            if (d == 0) {
                a0 = 0;
                b0 = -1; // (0,-1;c,0) needs c = 1; other c have gcd > 1
                if (c != 1) continue;
            } else {
                // extended gcd for a*d - b*c = 1
                std::int64_t x = 0, y = 0, g = 0;
                std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t&,
                                           std::int64_t&)>
                    ext = [&](std::int64_t p, std::int64_t q, std::int64_t& xo,
                              std::int64_t& yo) -> std::int64_t {
                    if (q == 0) {
                        xo = 1;
                        yo = 0;
                        return p;
                    }
                    std::int64_t x1, y1;
                    const std::int64_t r = ext(q, p % q, x1, y1);
                    xo = y1;
                    yo = x1 - (p / q) * y1;
                    return r;
                };
                g = ext(d, c, x, y);
                if (g < 0) {
                    g = -g;
                    x = -x;
                    y = -y;
                }
                // x*d + y*c = 1  ->  a0 = x, b0 = -y
                a0 = x;
                b0 = -y;
            }
            // displacement bound confines |a - d|; scan a generous shift window
            const double E = std::sqrt(beta) * std::sqrt(u_sigma) * C * std::sqrt(beta);
            const auto k_span = static_cast<std::int64_t>(
                std::ceil((static_cast<double>(c) * (1.0 + 2.0 * Rz) + E + 2.0 +
                           std::abs(static_cast<double>(a0 - d))) /
                          static_cast<double>(c)));
            for (std::int64_t k = -k_span; k <= k_span; ++k)
                consider(IntegerMatrix2{a0 + k * c, b0 + k * d, c, d});
        }
    }
    return out;
}

} // namespace weyl::sl2
