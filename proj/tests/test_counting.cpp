#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weyl/counting.hpp"
#include "weyl/errors.hpp"
#include "weyl/io.hpp"

#include <cmath>
#include <random>

using namespace weyl;
using counting::DatasetKind;
using counting::RegionSpec;
using sl3::SpectralParameter3;

namespace {
counting::SpectralDataset synthetic(double T_max, double volume, std::uint64_t seed) {
    return io::synthesize_weyl_spectrum(DatasetKind::sl3, T_max, volume, seed);
}
} // namespace

TEST_CASE("region membership and counting") {
    const auto ds = synthetic(200.0, 3.0, 11);
    REQUIRE(ds.sl3_entries.size() > 50);

    // region disjoint from the data counts zero
    const double r_all = std::sqrt(2.0 * (200.0 - 1.0));
    CHECK(counting::count_in_region(ds, RegionSpec::annulus(2.0 * r_all, 3.0 * r_all)) == 0);
    // ball containing everything counts everything
    CHECK(counting::count_in_region(ds, RegionSpec::ball(r_all * 1.01)) ==
          static_cast<std::int64_t>(ds.sl3_entries.size()));

    counting::SpectralDataset sl2;
    sl2.kind = DatasetKind::sl2;
    CHECK_THROWS_AS(counting::count_in_region(sl2, RegionSpec::ball(1.0)), validation_error);
}

TEST_CASE("mass conservation is exact for band partitions") {
    const auto ds = synthetic(400.0, 2.0, 13);
    const double R = std::sqrt(2.0 * 399.0);
    for (double d : {0.5, 2.0, 5.0}) {
        const auto band = RegionSpec::wall_band(d, R);
        const auto comp = RegionSpec::ball_minus_wall_band(d, R);
        CHECK(counting::count_in_region(ds, band) + counting::count_in_region(ds, comp) ==
              counting::count_in_region(ds, RegionSpec::ball(R)));
    }
}

TEST_CASE("equidistribution ratio against the generator") {
    const double volume = 4.0;
    const auto ds = synthetic(500.0, volume, 17);
    const double R = std::sqrt(2.0 * 499.0);
    const auto ball = RegionSpec::ball(R);
    const double ratio = counting::equidistribution_ratio(ds, ball, volume);
    const double expected_count = volume * counting::region_beta_integral(ball);
    const double sigma3 = 3.0 / std::sqrt(expected_count); // Poisson noise
    CHECK(std::abs(ratio - 1.0) < sigma3);

    // nested-ball stabilization: ratios settle as the ball grows
    double prev_gap = 1e9;
    for (double frac : {0.4, 0.6, 0.9}) {
        const double r = counting::equidistribution_ratio(ds, RegionSpec::ball(frac * R), volume);
        const double gap = std::abs(r - 1.0);
        CHECK(gap < std::max(prev_gap * 2.5, 0.3)); // loose monotone-stabilizing check
        prev_gap = gap;
    }
}

TEST_CASE("wall bands capture a vanishing fraction at growing scale") {
    const auto ds = synthetic(1500.0, 2.0, 19);
    const double d = 1.0;
    std::vector<double> fractions;
    for (double scale : {10.0, 22.0, 50.0}) {
        const auto band = RegionSpec::wall_band(d, scale);
        const auto ball = RegionSpec::ball(scale);
        const double frac =
            static_cast<double>(counting::count_in_region(ds, band)) /
            static_cast<double>(std::max<std::int64_t>(counting::count_in_region(ds, ball), 1));
        fractions.push_back(frac);
    }
    CHECK(fractions[1] < fractions[0]);
    CHECK(fractions[2] < fractions[1]);
}

TEST_CASE("temperedness classification") {
    CHECK(counting::classify_tempered(SpectralParameter3::tempered(2.0, -2.0, 0.0)));
    CHECK(!counting::classify_tempered(
        SpectralParameter3{{0.1, 1.0}, {0.1, -1.0}, {-0.2, 0.0}}, 1e-8));

    // nontempered unitary parameters obeying {l} = {-conj l} sit on a wall
    const SpectralParameter3 nont{{0.3, 1.2}, {-0.3, 1.2}, {0.0, -2.4}};
    CHECK(!counting::classify_tempered(nont));
    const double t1 = nont.l1.imag(), t2 = nont.l2.imag(), t3 = nont.l3.imag();
    const double wall_dist =
        std::min({std::abs(t1 - t2), std::abs(t2 - t3), std::abs(t1 - t3)}) / std::sqrt(2.0);
    CHECK(wall_dist <= 0.5);
}

TEST_CASE("self-duality classification") {
    CHECK(counting::classify_self_dual(SpectralParameter3::tempered(3.0, 0.0, -3.0)));
    CHECK(!counting::classify_self_dual(SpectralParameter3::tempered(1.0, 2.0, -3.0)));

    std::mt19937_64 rng(29);
    auto uni = [&](double a, double b) {
        return a + (b - a) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < 100; ++i) {
        SpectralParameter3 lam;
        if (i % 3 == 0) {
            const double mu = uni(0.5, 4.0);
            lam = SpectralParameter3::tempered(mu, 0.0, -mu);
        } else {
            const double t1 = uni(0.3, 4.0), t2 = uni(-4.0, -0.3);
            lam = SpectralParameter3::tempered(t1, t2, -t1 - t2);
        }
        const bool sd = counting::classify_self_dual(lam);
        const bool tp = counting::classify_tempered(lam);
        for (const auto& s : sl3::WeylElement::all()) {
            CHECK(counting::classify_self_dual(sl3::weyl_act(s, lam)) == sd);
            CHECK(counting::classify_tempered(sl3::weyl_act(s, lam)) == tp);
        }
    }

    // injecting a real displacement flips exactly the tempered classification
    const auto ds = synthetic(300.0, 2.0, 31);
    std::size_t flipped = 0;
    for (const auto& lam : ds.sl3_entries) {
        CHECK(counting::classify_tempered(lam));
        const SpectralParameter3 shifted{lam.l1 + 0.3, lam.l2 - 0.3, lam.l3};
        if (!counting::classify_tempered(shifted)) ++flipped;
    }
    CHECK(flipped == ds.sl3_entries.size());
}
