#include "weyl/io.hpp"
#include "weyl/errors.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace weyl::io {

using nlohmann::json;
using num::pi;

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::int64_t Rng::poisson(double mean) {
    if (mean < 0.0) throw validation_error("Rng::poisson: negative mean");
    // exponential inter-arrival times; fine at desk scale
    std::int64_t k = 0;
    double acc = 0.0;
    while (true) {
        acc += -std::log(1.0 - uniform01());
        if (acc >= mean) return k;
        ++k;
    }
}

Config load_config(const std::string& path) {
    std::string p = path;
    if (p.empty()) {
        if (const char* env = std::getenv("WEYLBENCH_CONFIG")) p = env;
    }
    Config cfg;
    if (p.empty()) return cfg;
    std::ifstream in(p);
    if (!in) throw validation_error("load_config: cannot open " + p);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw validation_error("load_config: " + std::string(e.what()));
    }
    cfg.sigma = j.value("sigma", cfg.sigma);
    cfg.t_grid_step = j.value("t_grid_step", cfg.t_grid_step);
    cfg.kappa = j.value("kappa", cfg.kappa);
    cfg.ms_rel_tol = j.value("ms_rel_tol", cfg.ms_rel_tol);
    cfg.quad_tol = j.value("quad_tol", cfg.quad_tol);
    cfg.profile_grid = j.value("profile_grid", cfg.profile_grid);
    return cfg;
}

namespace {

std::string sidecar_path(const std::string& csv_path) {
    const auto dot = csv_path.find_last_of('.');
    return (dot == std::string::npos ? csv_path : csv_path.substr(0, dot)) + ".json";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open manifest " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw validation_error("manifest parse error in " + path + ": " + e.what());
    }
    return j;
}

std::vector<double> parse_row(const std::string& line, std::size_t expect, int line_no,
                              const std::string& path) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            out.push_back(std::stod(field));
        } catch (...) {
            throw validation_error("parse error at " + path + ":" + std::to_string(line_no) +
                                   ": bad number '" + field + "'");
        }
    }
    if (out.size() != expect)
        throw validation_error("parse error at " + path + ":" + std::to_string(line_no) +
                               ": expected " + std::to_string(expect) + " fields");
    return out;
}

} // namespace

counting::SpectralDataset load_dataset(const std::string& csv_path) {
    const json man = load_json(sidecar_path(csv_path));
    counting::SpectralDataset ds;
    const std::string kind = man.value("kind", "");
    if (kind == "SL2")
        ds.kind = counting::DatasetKind::sl2;
    else if (kind == "SL3")
        ds.kind = counting::DatasetKind::sl3;
    else
        throw validation_error("manifest kind must be SL2 or SL3, got '" + kind + "'");
    ds.manifest.kind = kind;
    ds.manifest.provenance = man.value("provenance", "");
    ds.manifest.completeness_height = man.value("completeness_height", 0.0);
    if (man.contains("seed")) ds.manifest.seed = man["seed"].get<std::int64_t>();
    if (man.contains("volume")) ds.manifest.volume = man["volume"].get<double>();

    std::ifstream in(csv_path);
    if (!in) throw validation_error("cannot open dataset " + csv_path);
    std::string line;
    int line_no = 0;
    std::vector<std::string> bad_rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (line_no == 1 && !line.empty() &&
            !(std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '-'))
            continue; // header
        if (ds.kind == counting::DatasetKind::sl2) {
            ds.r_values.push_back(parse_row(line, 1, line_no, csv_path)[0]);
        } else {
            const auto f = parse_row(line, 6, line_no, csv_path);
            try {
                sl3::SpectralParameter3 lam({f[0], f[1]}, {f[2], f[3]}, {f[4], f[5]});
                if (!lam.within_unitary_bound(1e-12))
                    throw validation_error("unitary bound");
                ds.sl3_entries.push_back(lam);
            } catch (const validation_error&) {
                bad_rows.push_back(std::to_string(line_no));
            }
        }
    }
    if (!bad_rows.empty()) {
        std::string msg = "validation failed in " + csv_path + " at rows:";
        for (const auto& r : bad_rows) msg += " " + r;
        throw validation_error(msg);
    }
    ds.validate();
    return ds;
}

void save_dataset(const counting::SpectralDataset& ds, const std::string& csv_path) {
    std::ofstream out(csv_path);
    if (!out) throw validation_error("cannot write " + csv_path);
    char buf[256];
    if (ds.kind == counting::DatasetKind::sl2) {
        out << "r\n";
        for (double r : ds.r_values) {
            std::snprintf(buf, sizeof buf, "%.17g\n", r);
            out << buf;
        }
    } else {
        out << "l1_re,l1_im,l2_re,l2_im,l3_re,l3_im\n";
        for (const auto& lam : ds.sl3_entries) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                          lam.l1.real(), lam.l1.imag(), lam.l2.real(), lam.l2.imag(),
                          lam.l3.real(), lam.l3.imag());
            out << buf;
        }
    }
    json man;
    man["kind"] = ds.manifest.kind.empty()
                      ? (ds.kind == counting::DatasetKind::sl2 ? "SL2" : "SL3")
                      : ds.manifest.kind;
    man["provenance"] = ds.manifest.provenance;
    man["completeness_height"] = ds.manifest.completeness_height;
    if (ds.manifest.seed) man["seed"] = *ds.manifest.seed;
    if (ds.manifest.volume) man["volume"] = *ds.manifest.volume;
    std::ofstream mout(sidecar_path(csv_path));
    mout << man.dump(2) << "\n";
}

zeta::HeckeData load_hecke(const std::string& csv_path) {
    const json man = load_json(sidecar_path(csv_path));
    zeta::HeckeData data;
    data.symbol = man.value("symbol", "");
    data.nu = {man.value("nu_re", 0.0), man.value("nu_im", 0.0)};
    data.p_max = man.value("p_max", std::int64_t{0});

    std::ifstream in(csv_path);
    if (!in) throw validation_error("cannot open hecke data " + csv_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (line_no == 1 && !std::isdigit(static_cast<unsigned char>(line[0]))) continue;
        const auto f = parse_row(line, 3, line_no, csv_path);
        data.alpha.emplace_back(static_cast<std::int64_t>(f[0]), zeta::cplx{f[1], f[2]});
    }
    data.validate();
    return data;
}

void save_hecke(const zeta::HeckeData& data, const std::string& csv_path) {
    std::ofstream out(csv_path);
    if (!out) throw validation_error("cannot write " + csv_path);
    out << "p,alpha_re,alpha_im\n";
    char buf[160];
    for (const auto& [p, a] : data.alpha) {
        std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n", static_cast<long long>(p), a.real(),
                      a.imag());
        out << buf;
    }
    json man;
    man["symbol"] = data.symbol;
    man["nu_re"] = data.nu.real();
    man["nu_im"] = data.nu.imag();
    man["p_max"] = data.p_max;
    std::ofstream mout(sidecar_path(csv_path));
    mout << man.dump(2) << "\n";
}

counting::SpectralDataset synthesize_weyl_spectrum(counting::DatasetKind kind, double T_max,
                                                   double volume, std::uint64_t seed) {
    if (T_max <= 1.0) throw validation_error("synthesize_weyl_spectrum: require T_max > 1");
    if (volume <= 0.0) throw validation_error("synthesize_weyl_spectrum: volume must be positive");
    Rng rng(seed);
    counting::SpectralDataset ds;
    ds.kind = kind;
    ds.manifest.kind = (kind == counting::DatasetKind::sl2) ? "SL2" : "SL3";
    ds.manifest.provenance = "synthetic Poisson draw from the Weyl density";
    ds.manifest.completeness_height = T_max;
    ds.manifest.seed = static_cast<std::int64_t>(seed);
    ds.manifest.volume = volume;

    if (kind == counting::DatasetKind::sl2) {
        const double mean = volume * (T_max - 0.25) / (4.0 * pi);
        const std::int64_t n = rng.poisson(mean);
        ds.r_values.reserve(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) {
            const double lam = 0.25 + rng.uniform01() * (T_max - 0.25);
            ds.r_values.push_back(std::sqrt(lam - 0.25));
        }
        std::sort(ds.r_values.begin(), ds.r_values.end());
        return ds;
    }

    // SL3: dominate beta by c_beta * rho^3 * Fbar and thin by rejection
    const double R = std::sqrt(2.0 * (T_max - 1.0));
    double fbar = 0.0;
    for (int j = 0; j < 2000; ++j) {
        const double th = 2.0 * pi * j / 2000.0;
        const double x = std::cos(th), y = std::sin(th);
        const double s2 = std::sqrt(2.0), s32 = std::sqrt(1.5);
        const double f = std::abs(s2 * x) * std::abs(-x / s2 + s32 * y) *
                         std::abs(x / s2 + s32 * y);
        fbar = std::max(fbar, f);
    }
    fbar *= 1.0001;
    const double mean = volume * sl3::c_beta() * fbar * 2.0 * pi * std::pow(R, 5.0) / 5.0;
    const std::int64_t n = rng.poisson(mean);
    for (std::int64_t i = 0; i < n; ++i) {
        const double rho = R * std::pow(rng.uniform01(), 0.2);
        const double th = 2.0 * pi * rng.uniform01();
        const double accept = rng.uniform01();
        const double x = rho * std::cos(th), y = rho * std::sin(th);
        const double s2 = std::sqrt(2.0), s32 = std::sqrt(1.5);
        const std::array<double, 3> walls{s2 * x, -x / s2 + s32 * y, x / s2 + s32 * y};
        double p = 1.0;
        for (double w : walls) p *= std::abs(w) * std::tanh(pi * std::abs(w));
        if (accept * fbar * rho * rho * rho > p) continue;
        const double t1 = x / s2 + y / std::sqrt(6.0);
        const double t2 = -x / s2 + y / std::sqrt(6.0);
        const double t3 = -2.0 * y / std::sqrt(6.0);
        ds.sl3_entries.push_back(sl3::SpectralParameter3::tempered(t1, t2, t3));
    }
    return ds;
}

} // namespace weyl::io
