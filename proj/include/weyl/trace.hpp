#pragma once

#include "weyl/counting.hpp"
#include "weyl/eisenstein.hpp"
#include "weyl/sl2.hpp"
#include "weyl/transform.hpp"

#include <vector>

namespace weyl::trace {

// One elliptic-class contribution to the geometric side.
struct EllipticContribution {
    sl2::IntegerMatrix2 gamma;
    double integral = 0.0;
    double error = 0.0;
};

struct GeometricSide {
    double identity = 0.0;     // area(F_C) * g_T(i)
    double elliptic = 0.0;     // signed sum over the support elements
    double elliptic_abs = 0.0; // sum of absolute values (the inequality bound)
    double error = 0.0;
    std::vector<EllipticContribution> contributions;
};

GeometricSide geometric_side(const transform::TransformTable& table, double C, double sigma,
                             double tol);

// Sum of ghat_T over the dataset plus the constant-eigenfunction term
// ghat_T(1/2) (the j = 0 eigenvalue nu = 1/2 sits off the imaginary axis).
double spectral_sum(const counting::SpectralDataset& ds, const transform::TransformTable& table);

// Poisson-noise scale of the spectral sum: sqrt(sum ghat_T(i r_j)^2).
double spectral_sum_noise(const counting::SpectralDataset& ds,
                          const transform::TransformTable& table);

// N(T_eig) / (T_eig / 12); requires the dataset manifest to certify
// completeness up to T_eig.
double weyl_ratio(const counting::SpectralDataset& ds, double T_eig);

struct PartialTraceReport {
    double T = 0.0, C = 0.0, sigma = 0.0;
    double identity_term = 0.0;
    double elliptic_term = 0.0;   // signed measured value
    double elliptic_bound = 0.0;  // absolute bound entering the inequality
    double eisenstein_term = 0.0; // band integral / 4 pi
    double spectral_sum = 0.0;
    double inequality_slack = 0.0; // spectral + eisenstein + elliptic_bound - identity
    double tolerance = 0.0;        // 3x the combined quadrature / tail error estimates
    double noise_sigma = 0.0;      // Poisson scale of the spectral sum
    double c0_empirical = 0.0;     // |elliptic| / (sigma^2 g_T(i))
    bool violation = false;
};

PartialTraceReport lower_bound_check(const counting::SpectralDataset& ds,
                                     const transform::TransformTable& table, double C,
                                     double sigma);

} // namespace weyl::trace
