// weylbench: verification suites and sweeps for the spectral workbench.
// Subcommands emit a JSON report on stdout; --out adds a CSV dump.  Exit code
// 0 = all checks passed, 1 = a verification failed, 2 = usage error.

#include "weyl/counting.hpp"
#include "weyl/eisenstein.hpp"
#include "weyl/errors.hpp"
#include "weyl/io.hpp"
#include "weyl/sl3.hpp"
#include "weyl/trace.hpp"
#include "weyl/transform.hpp"
#include "weyl/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>

using namespace weyl;
using nlohmann::json;
using num::cplx;
using num::pi;

namespace {

std::string fmt_cplx(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
    return buf;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_zeta_check() {
    double worst_fe = 0.0, worst_conj = 0.0, worst_r = 0.0, worst_phi = 0.0;
    for (int i = 0; i < 10; ++i)
        for (int k = 0; k < 10; ++k) {
            const cplx s{-1.0 + 3.0 * i / 9.0, -50.0 + 100.0 * k / 9.0};
            if (std::abs(s) < 2e-3 || std::abs(s - 1.0) < 2e-3) continue;
            worst_fe = std::max(worst_fe, std::abs(zeta::completed_zeta(s) -
                                                   zeta::completed_zeta(1.0 - s)));
            worst_conj = std::max(worst_conj, std::abs(std::conj(zeta::completed_zeta(s)) -
                                                       zeta::completed_zeta(std::conj(s))));
        }
    for (double t = 0.5; t <= 50.0; t += 2.475) {
        worst_r = std::max(worst_r, std::abs(zeta::scattering_ratio({0.0, t}) *
                                                 zeta::scattering_ratio({0.0, -t}) -
                                             1.0));
        worst_phi = std::max(worst_phi,
                             std::abs(std::abs(zeta::phi_scattering({0.5, t})) - 1.0));
    }
    const bool ok = worst_fe < 1e-10 && worst_conj < 1e-10 && worst_r < 1e-10 &&
                    worst_phi < 1e-10;
    emit(json{{"check", "zeta"},
              {"functional_equation_residual", worst_fe},
              {"conjugation_residual", worst_conj},
              {"reflection_residual", worst_r},
              {"unitarity_residual", worst_phi},
              {"tolerance", 1e-10},
              {"status", ok ? "pass" : "fail"}});
    return ok ? 0 : 1;
}

int run_ms2(double t, double C, double tol, const std::string& out) {
    const auto res = eis::verify_critical(t, C, tol);
    const double rel = res.discrepancy / std::abs(res.closed_form);
    const bool ok = rel <= tol;
    emit(json{{"check", "ms2"},
              {"t", t},
              {"C", C},
              {"closed_form", res.closed_form.real()},
              {"quadrature", res.quadrature.real()},
              {"quadrature_error", res.quadrature_error},
              {"discrepancy", res.discrepancy},
              {"relative_discrepancy", rel},
              {"tolerance", tol},
              {"status", ok ? "pass" : "fail"}});
    if (!out.empty()) {
        std::ofstream f(out);
        f << "t,ms_closed,ms_quadrature,discrepancy\n";
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", t, res.closed_form.real(),
                      res.quadrature.real(), res.discrepancy);
        f << buf;
    }
    return ok ? 0 : 1;
}

int run_transform(double sigma, double T, const std::string& out) {
    const auto spec = transform::build_base_bump(sigma);
    const auto table = transform::build_transform_table(spec, T);
    json report{{"check", "transform"}, {"sigma", sigma}, {"T", T}};

    double worst = 0.0;
    for (const cplx nu :
         {cplx{0.0, 0.0}, cplx{0.3, 0.0}, cplx{-0.3, 0.0}, cplx{0.0, 2.0}, cplx{0.25, 3.0}}) {
        const cplx direct = transform::harish_to_selberg(spec, nu);
        const cplx via_quad = transform::selberg_eigen_identity(table, nu, 1e-7);
        worst = std::max(worst, std::abs(direct - via_quad));
    }
    report["roundtrip_residual"] = worst;
    report["roundtrip_tolerance"] = 1e-4;
    bool ok = worst <= 1e-4;

    if (T > 0.0) {
        double inside = 0.0, outside = 0.0;
        for (double t = 0.0; t <= T - 5.0; t += 0.25)
            inside = std::max(inside,
                              std::abs(table.ghat_interp(t, transform::Kernel::smeared) - 1.0));
        for (double t = T + 5.0; t <= table.t_max; t += 0.25)
            outside = std::max(outside, table.ghat_interp(t, transform::Kernel::smeared));
        report["window_inside_residual"] = inside;
        report["window_outside_residual"] = outside;
        report["window_concentrated"] = (inside <= 0.01 && outside <= 0.01);
    }
    report["status"] = ok ? "pass" : "fail";
    emit(report);

    if (!out.empty()) {
        std::ofstream f(out);
        f << "t,ghat,ghat_T\n";
        char buf[160];
        for (std::size_t i = 0; i < table.ghat.size(); ++i) {
            const double t = -table.t_max + table.t_step * static_cast<double>(i);
            std::snprintf(buf, sizeof buf, "%.10g,%.17g,%.17g\n", t, table.ghat[i],
                          table.ghat_T[i]);
            f << buf;
        }
    }
    return ok ? 0 : 1;
}

int run_trace(double T, double C, double sigma, const std::string& dataset) {
    const auto ds = io::load_dataset(dataset);
    const auto table = transform::build_transform_table(transform::build_base_bump(sigma), T);
    const auto rep = trace::lower_bound_check(ds, table, C, sigma);
    emit(json{{"check", "trace"},
              {"T", rep.T},
              {"C", rep.C},
              {"sigma", rep.sigma},
              {"identity_term", rep.identity_term},
              {"elliptic_term", rep.elliptic_term},
              {"elliptic_bound", rep.elliptic_bound},
              {"eisenstein_term", rep.eisenstein_term},
              {"spectral_sum", rep.spectral_sum},
              {"inequality_slack", rep.inequality_slack},
              {"tolerance", rep.tolerance},
              {"noise_sigma", rep.noise_sigma},
              {"c0_empirical", rep.c0_empirical},
              {"status", rep.violation ? "fail" : "pass"}});
    return rep.violation ? 1 : 0;
}

int run_weyl_sweep(const std::string& dataset, double tmax, const std::string& out) {
    const auto ds = io::load_dataset(dataset);
    const double top = std::min(tmax, ds.manifest.completeness_height);
    json rows = json::array();
    std::vector<std::pair<double, double>> csv;
    for (int i = 1; i <= 20; ++i) {
        const double T = top * i / 20.0;
        if (T <= 1.0) continue;
        const double ratio = trace::weyl_ratio(ds, T);
        rows.push_back(json{{"T", T}, {"ratio", ratio}});
        csv.emplace_back(T, ratio);
    }
    const double final_ratio = trace::weyl_ratio(ds, top);
    emit(json{{"check", "weyl_sweep"},
              {"completeness_height", ds.manifest.completeness_height},
              {"top_ratio", final_ratio},
              {"rows", rows},
              {"status", (final_ratio > 0.8 && final_ratio < 1.2) ? "pass" : "fail"}});
    if (!out.empty()) {
        std::ofstream f(out);
        f << "T,ratio\n";
        for (auto [T, r] : csv) f << T << "," << r << "\n";
    }
    return (final_ratio > 0.8 && final_ratio < 1.2) ? 0 : 1;
}

int run_sl3_diagonal(double t1, double t2, double c, const std::string& out) {
    const double t3 = -t1 - t2;
    const double closed = sl3::diagonal_terms(t1, t2, t3, c);
    std::vector<double> eps{2e-2, 1e-2, 5e-3, 2.5e-3, 1.25e-3};
    std::vector<cplx> vals;
    for (double e : eps) vals.push_back(sl3::diagonal_sum_at_eps(t1, t2, t3, c, e));
    double conv = 0.0;
    const cplx lim = num::richardson_c(eps, vals, &conv);
    const double diff = std::abs(lim - closed);
    const bool ok = diff <= 1e-6;
    emit(json{{"check", "sl3_diagonal"},
              {"t", {t1, t2, t3}},
              {"c", c},
              {"closed_form", closed},
              {"extrapolated", lim.real()},
              {"extrapolation_im", lim.imag()},
              {"convergence_estimate", conv},
              {"difference", diff},
              {"tolerance", 1e-6},
              {"status", ok ? "pass" : "fail"}});
    if (!out.empty()) {
        // term-by-term dump of the 36-term sum at the smallest regularization
        const sl3::SpectralParameter3 lam1{cplx{eps.back(), t1}, cplx{0.0, t2},
                                           cplx{-eps.back(), t3}};
        const auto lam2 = sl3::SpectralParameter3::tempered(-t1, -t2, -t3);
        const auto sum = sl3::langlands_minimal_sum(lam1, lam2, c, 1e-12);
        std::ofstream f(out);
        f << "s1,s2,exponent,denominator,m_factor,value\n";
        for (const auto& term : sum.terms)
            f << term.s1.name() << "," << term.s2.name() << "," << fmt_cplx(term.exponent)
              << "," << fmt_cplx(term.den1 * term.den2) << "," << fmt_cplx(term.m_factor) << ","
              << fmt_cplx(term.value) << "\n";
    }
    return ok ? 0 : 1;
}

int run_sl3_residue(double t, double c, const std::string& out) {
    const auto rn = sl3::degenerate_residue_norm(t, c);
    std::vector<double> eps{4e-3, 2e-3, 1e-3, 5e-4};
    std::vector<cplx> vals;
    for (double e : eps) vals.push_back(sl3::degenerate_residue_pair_at_eps(t, c, e));
    const cplx pair_lim = num::richardson_c(eps, vals);
    const double pair_diff = std::abs(pair_lim - rn.pair_limit);
    const bool ok = std::abs(rn.total.imag()) <= 1e-8 && pair_diff <= 1e-6;
    json terms = json::array();
    for (const auto& term : rn.terms)
        terms.push_back(json{{"label", term.label},
                             {"re", term.value.real()},
                             {"im", term.value.imag()}});
    emit(json{{"check", "sl3_residue"},
              {"t", t},
              {"c", c},
              {"value", rn.value},
              {"imaginary_residual", rn.total.imag()},
              {"pair_limit", rn.pair_limit.real()},
              {"pair_extrapolation_difference", pair_diff},
              {"terms", terms},
              {"status", ok ? "pass" : "fail"}});
    if (!out.empty()) {
        std::ofstream f(out);
        f << "s1,s2,exponent,denominator,m_factor,value\n";
        for (const auto& term : rn.terms) {
            auto x = term.label.find('x');
            const std::string s1 = (x == std::string::npos) ? term.label
                                                            : term.label.substr(0, x);
            const std::string s2 = (x == std::string::npos) ? "" : term.label.substr(x + 1);
            f << s1 << "," << s2 << ",,," << "," << fmt_cplx(term.value) << "\n";
        }
    }
    return ok ? 0 : 1;
}

int run_sl3_beta(double T) {
    const double value = sl3::beta_ball_integral(T);
    const double target = std::pow(T, 2.5) / (std::tgamma(3.5) * std::pow(4.0 * pi, 2.5));
    const double doubling = sl3::beta_ball_integral(2.0 * T) / value;
    emit(json{{"check", "sl3_beta"},
              {"T", T},
              {"ball_integral", value},
              {"target", target},
              {"ratio", value / target},
              {"doubling", doubling},
              {"doubling_target", std::pow(2.0, 2.5)},
              {"c_beta", sl3::c_beta()},
              {"status",
               (std::abs(value / target - 1.0) < 0.05 &&
                std::abs(doubling / std::pow(2.0, 2.5) - 1.0) < 0.02)
                   ? "pass"
                   : "fail"}});
    return 0;
}

int run_count(const std::string& dataset, const std::string& region_spec, double scale,
              double volume) {
    const auto ds = io::load_dataset(dataset);
    counting::RegionSpec region;
    double a = 0.0, b = 0.0;
    if (std::sscanf(region_spec.c_str(), "ball:%lf", &a) == 1)
        region = counting::RegionSpec::ball(a, scale);
    else if (std::sscanf(region_spec.c_str(), "annulus:%lf,%lf", &a, &b) == 2)
        region = counting::RegionSpec::annulus(a, b, scale);
    else if (std::sscanf(region_spec.c_str(), "wallband:%lf,%lf", &a, &b) == 2)
        region = counting::RegionSpec::wall_band(a, b, scale);
    else if (std::sscanf(region_spec.c_str(), "complement:%lf,%lf", &a, &b) == 2)
        region = counting::RegionSpec::ball_minus_wall_band(a, b, scale);
    else
        throw CLI::ValidationError("--region",
                                   "expected ball:R | annulus:a,b | wallband:d,R | complement:d,R");
    const auto n = counting::count_in_region(ds, region);
    json rep{{"check", "count"},
             {"region", region_spec},
             {"scale", scale},
             {"count", n},
             {"beta_mass", counting::region_beta_integral(region)},
             {"status", "pass"}};
    if (volume > 0.0)
        rep["equidistribution_ratio"] = counting::equidistribution_ratio(ds, region, volume);
    emit(rep);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical workbench for truncated-spectral identities on SL2/SL3"};
    app.require_subcommand(1);
    app.fallthrough(); // parent options may follow the subcommand
    std::string out;
    app.add_option("--out", out, "write a CSV dump next to the JSON report")->capture_default_str();

    const auto cfg = io::load_config();

    auto* zeta_cmd = app.add_subcommand("zeta", "completed-zeta identity suites");
    zeta_cmd->add_subcommand("check", "functional equations and scattering identities");

    auto* ms2 = app.add_subcommand("ms2", "truncated Eisenstein inner products");
    auto* ms2v = ms2->add_subcommand("verify", "closed form vs direct quadrature");
    double t = 5.0, C = 2.0, tol = cfg.ms_rel_tol;
    ms2v->add_option("--t", t, "spectral height");
    ms2v->add_option("--C", C, "truncation height")->check(CLI::Range(1.0, 1e6));
    ms2v->add_option("--tol", tol, "relative tolerance");

    auto* tr = app.add_subcommand("transform", "test-function transforms");
    auto* trr = tr->add_subcommand("roundtrip", "Mellin route vs eigen-identity quadrature");
    double sigma = cfg.sigma, T = 0.0;
    trr->add_option("--sigma", sigma, "support radius");
    trr->add_option("--T", T, "smear half-width (0 = base transform only)");

    auto* trace_cmd = app.add_subcommand("trace", "partial-trace assembly");
    auto* trrep = trace_cmd->add_subcommand("report", "geometric vs spectral side report");
    double trT = 15.0, trC = 3.0, trs = cfg.sigma;
    std::string dataset;
    trrep->add_option("--T", trT, "smear half-width");
    trrep->add_option("--C", trC, "truncation height");
    trrep->add_option("--sigma", trs, "kernel support radius");
    trrep->add_option("--dataset", dataset, "SL2 dataset CSV")->required();

    auto* weyl_cmd = app.add_subcommand("weyl", "eigenvalue counting");
    auto* sweep = weyl_cmd->add_subcommand("sweep", "N(T)/(T/12) over heights");
    std::string wds;
    double tmax = 1e4;
    sweep->add_option("--dataset", wds, "SL2 dataset CSV")->required();
    sweep->add_option("--tmax", tmax, "top eigenvalue");

    auto* sl3_cmd = app.add_subcommand("sl3", "rank-two inner products and density");
    auto* diag = sl3_cmd->add_subcommand("diagonal", "diagonal terms vs extrapolated sum");
    double dt1 = 2.0, dt2 = 3.0, dc = 1.0;
    diag->add_option("--t1", dt1);
    diag->add_option("--t2", dt2);
    diag->add_option("--c", dc);
    auto* resid = sl3_cmd->add_subcommand("residue", "11-term degenerate residue norm");
    double rt = 5.0, rc = 1.0;
    resid->add_option("--t", rt);
    resid->add_option("--c", rc);
    auto* beta = sl3_cmd->add_subcommand("beta", "spectral-density ball integral");
    double bT = 400.0;
    beta->add_option("--T", bT);

    auto* count_cmd = app.add_subcommand("count", "window counting on SL3 datasets");
    std::string cds, region = "ball:10";
    double cscale = 1.0, cvolume = 0.0;
    count_cmd->add_option("--dataset", cds, "SL3 dataset CSV")->required();
    count_cmd->add_option("--region", region, "ball:R | annulus:a,b | wallband:d,R | complement:d,R");
    count_cmd->add_option("--scale", cscale, "region scale factor");
    count_cmd->add_option("--volume", cvolume, "volume for the equidistribution ratio");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors are exit code 2 by contract
    }

    try {
        if (zeta_cmd->parsed()) return run_zeta_check();
        if (ms2v->parsed()) return run_ms2(t, C, tol, out);
        if (trr->parsed()) return run_transform(sigma, T, out);
        if (trrep->parsed()) return run_trace(trT, trC, trs, dataset);
        if (sweep->parsed()) return run_weyl_sweep(wds, tmax, out);
        if (diag->parsed()) return run_sl3_diagonal(dt1, dt2, dc, out);
        if (resid->parsed()) return run_sl3_residue(rt, rc, out);
        if (beta->parsed()) return run_sl3_beta(bT);
        if (count_cmd->parsed()) return run_count(cds, region, cscale, cvolume);
    } catch (const validation_error& e) {
        emit(json{{"status", "error"}, {"kind", "validation"}, {"message", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        emit(json{{"status", "error"}, {"message", e.what()}});
        return 1;
    }
    std::cerr << app.help() << "\n";
    return 2;
}
