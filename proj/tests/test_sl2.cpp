#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weyl/errors.hpp"
#include "weyl/sl2.hpp"

#include <cmath>
#include <random>
#include <set>
#include <tuple>

using namespace weyl;
using sl2::IntegerMatrix2;
using sl2::UpperHalfPoint;
using num::pi;

namespace {

// deterministic random words in S, T for group-action tests
IntegerMatrix2 random_word(std::mt19937_64& rng, int len = 6) {
    IntegerMatrix2 g;
    const IntegerMatrix2 S{0, -1, 1, 0};
    for (int i = 0; i < len; ++i) {
        if (rng() & 1) {
            const auto n = static_cast<std::int64_t>(rng() % 5) - 2;
            g = g * IntegerMatrix2{1, n, 0, 1};
        } else {
            g = g * S;
        }
    }
    return g;
}

} // namespace

TEST_CASE("moebius action basics") {
    const UpperHalfPoint z{0.3, 1.7};
    const auto id = sl2::moebius_act(IntegerMatrix2{}, z);
    CHECK(id.u == doctest::Approx(z.u).epsilon(1e-15));
    CHECK(id.v == doctest::Approx(z.v).epsilon(1e-15));

    const auto t = sl2::moebius_act(IntegerMatrix2{1, 1, 0, 1}, UpperHalfPoint{0.0, 1.0});
    CHECK(t.u == doctest::Approx(1.0));
    CHECK(t.v == doctest::Approx(1.0));

    const auto s = sl2::moebius_act(IntegerMatrix2{0, -1, 1, 0}, UpperHalfPoint{0.0, 2.0});
    CHECK(s.u == doctest::Approx(0.0));
    CHECK(s.v == doctest::Approx(0.5));

    CHECK_THROWS_AS(IntegerMatrix2(1, 1, 1, 1), validation_error);
}

TEST_CASE("action composes") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        const auto g = random_word(rng), h = random_word(rng);
        const UpperHalfPoint z{-0.37, 0.9};
        const auto lhs = sl2::moebius_act(g * h, z);
        const auto rhs = sl2::moebius_act(g, sl2::moebius_act(h, z));
        CHECK(std::abs(lhs.u - rhs.u) < 1e-12);
        CHECK(std::abs(lhs.v - rhs.v) < 1e-12);
    }
}

TEST_CASE("reduction to the fundamental domain") {
    auto [zi, gi] = sl2::reduce(UpperHalfPoint{0.0, 1.0});
    CHECK(zi.u == doctest::Approx(0.0));
    CHECK(zi.v == doctest::Approx(1.0));
    CHECK(gi.is_identity_up_to_sign());

    auto [zt, gt] = sl2::reduce(UpperHalfPoint{5.0, 1.0});
    CHECK(zt.u == doctest::Approx(0.0));
    CHECK(zt.v == doctest::Approx(1.0));
    CHECK(gt.b == -5);

    const UpperHalfPoint z{0.3, 0.1};
    auto [zr, gr] = sl2::reduce(z);
    CHECK(zr.u * zr.u + zr.v * zr.v >= 1.0 - 1e-12);
    CHECK(std::abs(zr.u) <= 0.5 + 1e-12);
    const auto back = sl2::moebius_act(gr, z);
    CHECK(std::abs(back.u - zr.u) < 1e-12);
    CHECK(std::abs(back.v - zr.v) < 1e-12);

    // idempotent up to +-1
    auto [zr2, gr2] = sl2::reduce(zr);
    CHECK(gr2.is_identity_up_to_sign());
    CHECK(std::abs(zr2.u - zr.u) < 1e-14);
}

TEST_CASE("truncated area and quadrature oracle") {
    CHECK(sl2::area_truncated(1.0) == doctest::Approx(pi / 3.0 - 1.0));
    CHECK(sl2::area_truncated(2.0) == doctest::Approx(pi / 3.0 - 0.5));
    CHECK_THROWS_AS(sl2::area_truncated(0.5), validation_error);

    auto one = sl2::integrate_over_truncated([](const UpperHalfPoint&) { return 1.0; }, 2.0,
                                             1e-10);
    CHECK(std::abs(one.value - (pi / 3.0 - 0.5)) < 1e-8);

    // f(z) = v against the semi-analytic slice integral
    auto fv = sl2::integrate_over_truncated([](const UpperHalfPoint& z) { return z.v; }, 3.0,
                                            1e-10);
    auto arc = num::integrate(
        [](double v) { return (1.0 - 2.0 * std::sqrt(1.0 - v * v)) / v; }, std::sqrt(3.0) / 2.0,
        1.0, 1e-12);
    const double expect = arc.value + std::log(3.0);
    CHECK(std::abs(fv.value - expect) < 1e-8);

    // odd integrand vanishes by u -> -u symmetry
    auto odd = sl2::integrate_over_truncated(
        [](const UpperHalfPoint& z) { return z.u * std::exp(z.v); }, 2.0, 1e-9);
    CHECK(std::abs(odd.value) < 1e-8);
}

TEST_CASE("point-pair invariant") {
    const UpperHalfPoint z{0.2, 1.4}, w{-0.1, 0.8};
    CHECK(sl2::point_pair_u(z, z) == doctest::Approx(0.0));
    CHECK(sl2::point_pair_u(UpperHalfPoint{0.0, 1.0}, UpperHalfPoint{0.0, 2.0}) ==
          doctest::Approx(0.5));
    CHECK(sl2::point_pair_u(z, w) == doctest::Approx(sl2::point_pair_u(w, z)));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const auto g = random_word(rng);
        const double u0 = sl2::point_pair_u(z, w);
        const double u1 = sl2::point_pair_u(sl2::moebius_act(g, z), sl2::moebius_act(g, w));
        CHECK(std::abs(u0 - u1) < 1e-12);
    }
}

TEST_CASE("kernel support elements: torsion only for small sigma") {
    const double sigma = 0.01, C = 2.0;
    auto elems = sl2::kernel_support_elements(C, sigma);

    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> got;
    for (const auto& e : elems) {
        got.insert({e.gamma.a, e.gamma.b, e.gamma.c, e.gamma.d});
        // all survivors are elliptic here
        CHECK(std::abs(e.gamma.a + e.gamma.d) < 2);
        CHECK(e.min_displacement <= 4.0 * std::sinh(sigma / 2) * std::sinh(sigma / 2) * 1.01);
    }

    // brute-force oracle: scan all matrices with small entries on a fine grid
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> expect;
    const double u_sigma = 4.0 * std::sinh(sigma / 2) * std::sinh(sigma / 2);
    for (std::int64_t c = 0; c <= 10; ++c)
        for (std::int64_t d = -10; d <= 10; ++d)
            for (std::int64_t a = -10; a <= 10; ++a) {
                if (c == 0 && a != 1) continue; // PSL2 normal form
                const std::int64_t det_rhs = a * d - 1;
                std::int64_t b;
                if (c == 0) {
                    if (a * d != 1) continue;
                    // translations: any b in range
                    for (b = -10; b <= 10; ++b) {
                        if (b == 0) continue;
                        IntegerMatrix2 g{a, b, c, d};
                        if (sl2::min_displacement(g, C).min_displacement <= u_sigma * 1.01)
                            expect.insert({g.a, g.b, g.c, g.d});
                    }
                    continue;
                }
                if (det_rhs % c != 0) continue;
                b = det_rhs / c;
                if (std::abs(b) > 10) continue;
                IntegerMatrix2 g{a, b, c, d};
                if (g.is_identity_up_to_sign()) continue;
                if (g.c < 0 || (g.c == 0 && g.a < 0)) g = IntegerMatrix2{-g.a, -g.b, -g.c, -g.d};
                if (sl2::min_displacement(g, C).min_displacement <= u_sigma * 1.01)
                    expect.insert({g.a, g.b, g.c, g.d});
            }

    CHECK(got == expect);
    CHECK(got.size() == 5); // S and the four order-3 stabilizer elements at the corners

    CHECK_THROWS_AS(sl2::kernel_support_elements(C, 0.6), validation_error);
}

TEST_CASE("translations enter the support set once C sigma is large") {
    // u(z, z+1) = 1/v^2 <= u_sigma at v = C = 10 for sigma = 0.2
    auto elems = sl2::kernel_support_elements(10.0, 0.2);
    bool has_translation = false;
    for (const auto& e : elems)
        if (e.gamma.c == 0) has_translation = true;
    CHECK(has_translation);
}
