#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Evaluation requested too close to a pole of the underlying function.
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Requested accuracy cannot be met within the configured budget
// (series depth, refinement cap, Fourier depth, prime table, grid length).
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// A denominator or limit configuration that must be handled by a
// dedicated limit routine instead of direct evaluation.
struct singularity_error : std::domain_error {
    explicit singularity_error(const std::string& what) : std::domain_error(what) {}
};

// Malformed or inconsistent input data (datasets, manifests, parameters).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace weyl
