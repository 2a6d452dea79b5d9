#pragma once

#include "weyl/counting.hpp"
#include "weyl/zeta.hpp"

#include <cstdint>
#include <string>

namespace weyl::io {

// Deterministic splitmix64 stream; the only randomness source in the project.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform01(); // in [0, 1)
    std::int64_t poisson(double mean);

private:
    std::uint64_t state_;
};

struct Config {
    double sigma = 0.2;
    double t_grid_step = 0.05;
    double kappa = 0.1; // zero-free-region width parameter (configurable, not asserted)
    double ms_rel_tol = 1e-4;
    double quad_tol = 1e-8;
    int profile_grid = 4096;
};

// Loads the JSON config at `path`; empty path consults $WEYLBENCH_CONFIG
// and falls back to the defaults above.
Config load_config(const std::string& path = "");

// Datasets are a CSV ("r" or "l1_re,...,l3_im") plus a JSON manifest sidecar
// obtained by swapping the extension for .json.
counting::SpectralDataset load_dataset(const std::string& csv_path);
void save_dataset(const counting::SpectralDataset& ds, const std::string& csv_path);

// Hecke data: CSV "p,alpha_re,alpha_im" plus sidecar {symbol, nu_re, nu_im, p_max}.
zeta::HeckeData load_hecke(const std::string& csv_path);
void save_hecke(const zeta::HeckeData& data, const std::string& csv_path);

// Poisson draw from the Weyl density: SL2 intensity volume/(4 pi) d lambda on
// [1/4, T_max]; SL3 intensity volume * beta on the tempered plane with
// lambda(Delta) <= T_max.  Deterministic given the seed.
counting::SpectralDataset synthesize_weyl_spectrum(counting::DatasetKind kind, double T_max,
                                                   double volume, std::uint64_t seed);

} // namespace weyl::io
