#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weyl/errors.hpp"
#include "weyl/io.hpp"
#include "weyl/trace.hpp"

#include <cmath>

using namespace weyl;
using counting::DatasetKind;
using counting::SpectralDataset;
using num::pi;
using transform::Kernel;

TEST_CASE("geometric side: identity term and sigma^2 elliptic scaling") {
    std::vector<double> lsig, lratio;
    for (double sigma : {0.4, 0.2, 0.1, 0.05}) {
        const auto table =
            transform::build_transform_table(transform::build_base_bump(sigma), 10.0);
        const auto side = trace::geometric_side(table, 2.0, sigma, 1e-9);
        const double gi = transform::g_at_identity(table);
        CHECK(std::abs(side.identity - sl2::area_truncated(2.0) * gi) <= 1e-12 * side.identity);
        CHECK(!side.contributions.empty());
        lsig.push_back(std::log(sigma));
        lratio.push_back(std::log(std::abs(side.elliptic) / side.identity));
    }
    const double slope = num::fit_slope(lsig, lratio);
    CHECK(slope > 1.8);
    CHECK(slope < 2.2);
}

TEST_CASE("spectral sum") {
    const auto spec_w = transform::build_base_bump(4.0);
    const auto table = transform::build_transform_table(spec_w, 15.0);

    SpectralDataset empty;
    empty.kind = DatasetKind::sl2;
    empty.manifest.kind = "SL2";
    const double const_only = trace::spectral_sum(empty, table);
    CHECK(const_only == doctest::Approx(transform::ghat_at(table, {0.5, 0.0}).real()));

    // a single synthetic point in the window interior picks up weight ~ 1
    SpectralDataset one = empty;
    one.r_values.push_back(7.5);
    CHECK(trace::spectral_sum(one, table) - const_only == doctest::Approx(1.0).epsilon(1e-4));

    // Poisson draw from the Weyl density: sum over the window counts the points
    const auto ds = io::synthesize_weyl_spectrum(DatasetKind::sl2, 1e4, pi / 3.0, 41);
    const double sum = trace::spectral_sum(ds, table) - const_only;
    double count_expect = 0.0;
    for (double r : ds.r_values) count_expect += table.ghat_interp(r, Kernel::smeared);
    CHECK(sum == doctest::Approx(count_expect)); // definition
    // and the window-weighted count tracks the sharp count inside the window
    std::int64_t sharp = 0;
    for (double r : ds.r_values)
        if (r <= 15.0) ++sharp;
    CHECK(sum == doctest::Approx(static_cast<double>(sharp)).epsilon(0.05));
}

TEST_CASE("weyl ratio") {
    SpectralDataset empty;
    empty.kind = DatasetKind::sl2;
    empty.manifest.kind = "SL2";
    empty.manifest.completeness_height = 100.0;
    CHECK(trace::weyl_ratio(empty, 100.0) == doctest::Approx(12.0 / 100.0));
    CHECK_THROWS_AS(trace::weyl_ratio(empty, 200.0), validation_error);

    const auto ds = io::synthesize_weyl_spectrum(DatasetKind::sl2, 1e4, pi / 3.0, 7);
    const double ratio = trace::weyl_ratio(ds, 1e4);
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.1);
}

TEST_CASE("partial trace lower bound") {
    const auto table = transform::build_transform_table(transform::build_base_bump(0.2), 15.0);
    const auto ds = io::synthesize_weyl_spectrum(DatasetKind::sl2, 1e4, pi / 3.0, 3);

    const auto rep = trace::lower_bound_check(ds, table, 3.0, 0.2);
    CHECK(rep.identity_term > 0.0);
    CHECK(rep.spectral_sum > 0.0);
    CHECK(rep.eisenstein_term > 0.0);
    CHECK(!rep.violation);
    CHECK(rep.inequality_slack > -2.0 * rep.noise_sigma);

    // ablation: dropping every other eigenvalue halves the spectral side and
    // must flag a violation once the window is wide enough for the identity
    // term to dominate the Eisenstein cushion
    const auto table40 = transform::build_transform_table(transform::build_base_bump(0.2), 40.0);
    const auto ds2 = io::synthesize_weyl_spectrum(DatasetKind::sl2, 2e4, pi / 3.0, 3);
    CHECK(!trace::lower_bound_check(ds2, table40, 6.0, 0.2).violation);
    SpectralDataset half = ds2;
    half.r_values.clear();
    for (std::size_t i = 0; i < ds2.r_values.size(); i += 2)
        half.r_values.push_back(ds2.r_values[i]);
    const auto rep2 = trace::lower_bound_check(half, table40, 6.0, 0.2);
    CHECK(rep2.violation);

    // small-T regime: constant-term dominated, no violation
    const auto table1 = transform::build_transform_table(transform::build_base_bump(0.2), 1.0);
    const auto rep3 = trace::lower_bound_check(ds, table1, 3.0, 0.2);
    CHECK(!rep3.violation);
}

TEST_CASE("eisenstein share of the identity term decays as T doubles") {
    // needs T well beyond the spectral width of the profile, so use the
    // concentrated window profile
    const auto spec = transform::build_base_bump(4.0);
    std::vector<double> share;
    for (double T : {10.0, 20.0, 40.0}) {
        const auto table = transform::build_transform_table(spec, T);
        const double id = sl2::area_truncated(2.0) * transform::g_at_identity(table);
        share.push_back(eis::eisenstein_band_integral(T, 2.0, table) / (4.0 * pi) / id);
    }
    // halves when T doubles, up to log factors
    CHECK(share[1] < 0.8 * share[0]);
    CHECK(share[2] < 0.8 * share[1]);
}
