#pragma once

#include "weyl/sl3.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weyl::counting {

enum class DatasetKind { sl2, sl3 };

struct Manifest {
    std::string kind; // "SL2" | "SL3" | "hecke"
    std::string provenance;
    double completeness_height = 0.0;
    std::optional<std::int64_t> seed;
    std::optional<double> volume;
};

struct SpectralDataset {
    DatasetKind kind = DatasetKind::sl2;
    std::vector<double> r_values;                    // SL2: Delta phi = (1/4 + r^2) phi
    std::vector<sl3::SpectralParameter3> sl3_entries;
    Manifest manifest;

    std::size_t size() const {
        return kind == DatasetKind::sl2 ? r_values.size() : sl3_entries.size();
    }
    void validate() const; // unitary-range check on SL3 entries
};

// Weyl-invariant region in i a_0^*, described through the invariant radius
// and the minimum euclidean distance to the three walls; scaled by `scale`.
struct RegionSpec {
    enum class Shape { ball, annulus, wall_band, ball_minus_wall_band };
    Shape shape = Shape::ball;
    double radius = 1.0;        // outer radius (container radius for bands)
    double inner = 0.0;         // inner radius (annulus)
    double wall_distance = 0.0; // band half-width
    double scale = 1.0;

    static RegionSpec ball(double r, double scale = 1.0);
    static RegionSpec annulus(double r_in, double r_out, double scale = 1.0);
    static RegionSpec wall_band(double dist, double within_r, double scale = 1.0);
    static RegionSpec ball_minus_wall_band(double dist, double r, double scale = 1.0);

    // membership of Im(lam); boundary points within 1e-10 count as inside
    bool contains(const sl3::SpectralParameter3& lam) const;
};

std::int64_t count_in_region(const SpectralDataset& ds, const RegionSpec& region);

// Integral of beta over the region (orthonormal plane measure).
double region_beta_integral(const RegionSpec& region);

// count / (volume * Integral_region beta)
double equidistribution_ratio(const SpectralDataset& ds, const RegionSpec& region,
                              double volume);

bool classify_tempered(const sl3::SpectralParameter3& lam, double tol = 1e-8);
bool classify_self_dual(const sl3::SpectralParameter3& lam, double tol = 1e-8);

} // namespace weyl::counting
