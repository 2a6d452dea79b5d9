#pragma once

#include "weyl/numeric.hpp"
#include "weyl/sl2.hpp"
#include "weyl/transform.hpp"

#include <vector>

namespace weyl::eis {

using num::cplx;
using sl2::UpperHalfPoint;

// Evaluator for E_s(z) through the Fourier expansion
//   E_s(z) = v^s + phi(s) v^{1-s}
//          + (4/Z(2s)) sqrt(v) sum_{n>=1} tau_{s-1/2}(n) K_{s-1/2}(2 pi n v) cos(2 pi n u),
// tau_nu(n) = sum_{ab=n} (a/b)^nu.  Evaluation reduces z to the fundamental
// domain first unless asked not to.
class EisensteinEvaluator {
public:
    EisensteinEvaluator(cplx s, int fourier_depth = 0, double tail_tol = 1e-10);

    cplx s() const { return s_; }
    int depth() const { return static_cast<int>(tau_.size()); }
    cplx phi() const { return phi_; }

    cplx constant_term(double v) const;
    // coefficient of cos(2 pi n u), n >= 1
    cplx fourier_coefficient(int n, double v) const;
    std::vector<cplx> fourier_coefficients(double v) const;
    // bound on the dropped tail sum_{n > depth} |a_n(v)|
    double tail_bound(double v) const;

    cplx value(const UpperHalfPoint& z, bool reduce_first = true) const;
    // Lambda^C E_s: subtract the constant term above height C (after reduction)
    cplx truncated(const UpperHalfPoint& z, double C, bool reduce_first = true) const;

private:
    cplx s_, nu_, phi_, coef_; // coef = 4 / Z(2s)
    std::vector<cplx> tau_;
    double tail_tol_;
};

struct MaassSelbergResult {
    cplx closed_form{};
    cplx quadrature{};
    bool has_quadrature = false;
    double discrepancy = 0.0;      // |closed_form - quadrature|
    double quadrature_error = 0.0; // estimate including the height-tail bound
    double C = 0.0;
    cplx s1{}, s2{};
};

// Closed form
//   C^{s1+s2-1}/(s1+s2-1) + phi(s2) C^{s1-s2}/(s1-s2)
//   + phi(s1) C^{s2-s1}/(s2-s1) + phi(s1) phi(s2) C^{1-s1-s2}/(1-s1-s2).
cplx maass_selberg_closed(cplx s1, cplx s2, double C);

// || Lambda^C E_{1/2+it} ||^2 = 2 log C - phi'/phi(1/2+it)
//   + [C^{2it} phi(1/2-it) - C^{-2it} phi(1/2+it)] / (2it),
// with the removable t -> 0 limit built in.
double maass_selberg_critical(double t, double C);

// Direct quadrature of Integral_F Lambda^C E_{s1} (Lambda^C) E_{s2} dA.  The
// bilinear pairing carries no conjugation; pass s2 = conj(1 - ...) = 1/2 - t i
// to obtain the critical-line norm.  one_sided leaves E_{s2} untruncated.
struct QuadOutcome {
    cplx value{};
    double error = 0.0;
};
QuadOutcome ms_quadrature(cplx s1, cplx s2, double C, double abs_tol, bool one_sided = false);

// Closed form vs quadrature at relative tolerance rel_tol.
MaassSelbergResult verify_general(cplx s1, cplx s2, double C, double rel_tol = 1e-4);
MaassSelbergResult verify_critical(double t, double C, double rel_tol = 1e-4);

// Integral over t of ghat_T(it) * ||Lambda^C E_{1/2+it}||^2, the Maass-Selberg
// upper bound for the truncated-domain Eisenstein mass (caller divides by 4 pi
// for the spectral-expansion normalization).
double eisenstein_band_integral(double T, double C, const transform::TransformTable& table);

} // namespace weyl::eis
