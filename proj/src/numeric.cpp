#include "weyl/numeric.hpp"
#include "weyl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace weyl::num {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1,1] with the embedded 7-point
// Gauss rule (standard QUADPACK constants).
const double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

const double xg16[8] = {
    0.989400934991649932596154173450333, 0.944575023073232576077988415534608,
    0.865631202387831743880467897712393, 0.755404408355003033895101194847442,
    0.617876244402643748446671764048791, 0.458016777657227386342419442983577,
    0.281603550779258913230460501460496, 0.095012509837637440185319335424958};
const double wg16[8] = {
    0.027152459411754094851780572456018, 0.062253523938647892862843836994378,
    0.095158511682492784809925107602246, 0.124628971255533872052476282192016,
    0.149595988816576732081501730547478, 0.169156519395002538189312079030360,
    0.182603415044923588866763667969220, 0.189450610455068496285396723208283};

template <typename T>
void gk15(const std::function<T(double)>& f, double a, double b, T& result, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T resk = wgk[7] * f(c);
    T resg = wg[3] * f(c);
    for (int j = 0; j < 7; ++j) {
        const T f1 = f(c - h * xgk[j]);
        const T f2 = f(c + h * xgk[j]);
        resk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    result = resk * h;
    const double diff = std::abs(resk - resg) * std::abs(h);
    err = diff;
    if (diff > 0.0) {
        // QUADPACK-style sharpening of the raw difference
        const double scale = std::pow(200.0 * diff / (std::abs(resk) * std::abs(h) + 1e-300), 1.5);
        if (scale < 1.0) err = diff * scale;
    }
}

struct Seg {
    double a, b, err;
};

template <typename T>
void adaptive(const std::function<T(double)>& f, double a, double b, double tol,
              int max_intervals, T& value, double& error) {
    T total;
    double toterr;
    gk15(f, a, b, total, toterr);
    int n = 1;
    std::vector<T> vals{total};
    std::vector<Seg> segs{{a, b, toterr}};
    // parallel arrays; the total is re-summed after every split to avoid drift
    while (toterr > tol && n < max_intervals) {
        // split the worst segment
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        const Seg s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        T v1, v2;
        double e1, e2;
        gk15(f, s.a, mid, v1, e1);
        gk15(f, mid, s.b, v2, e2);
        segs[worst] = {s.a, mid, e1};
        vals[worst] = v1;
        segs.push_back({mid, s.b, e2});
        vals.push_back(v2);
        ++n;
        total = T{};
        toterr = 0.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += vals[i];
            toterr += segs[i].err;
        }
    }
    if (toterr > tol)
        throw precision_error("adaptive quadrature: refinement cap hit before tolerance");
    value = total;
    error = toterr;
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol, int max_intervals) {
    QuadResult r;
    adaptive<double>(f, a, b, tol, max_intervals, r.value, r.error);
    return r;
}

QuadResultC integrate_c(const std::function<cplx(double)>& f, double a, double b,
                        double tol, int max_intervals) {
    QuadResultC r;
    adaptive<cplx>(f, a, b, tol, max_intervals, r.value, r.error);
    return r;
}

double gauss16(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int j = 0; j < 8; ++j)
        s += wg16[j] * (f(c - h * xg16[j]) + f(c + h * xg16[j]));
    return s * h;
}

cplx gauss16_c(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx s = 0.0;
    for (int j = 0; j < 8; ++j)
        s += wg16[j] * (f(c - h * xg16[j]) + f(c + h * xg16[j]));
    return s * h;
}

double trapezoid(const std::vector<double>& y, double h) {
    if (y.size() < 2) return 0.0;
    double s = 0.5 * (y.front() + y.back());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
    return s * h;
}

UniformSpline::UniformSpline(double x0, double dx, std::vector<double> y, bool clamp_zero)
    : x0_(x0), dx_(dx), y_(std::move(y)), clamp_zero_(clamp_zero) {
    const std::size_t n = y_.size();
    m_.assign(n, 0.0);
    if (n < 3) return;
    // Tridiagonal solve for natural-spline second derivatives (uniform grid).
    std::vector<double> c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (dx_ * dx_);
    // forward sweep: diag = 4, off = 1
    c[1] = 1.0 / 4.0;
    d[1] = d[1] / 4.0;
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double m = 4.0 - c[i - 1];
        c[i] = 1.0 / m;
        d[i] = (d[i] - d[i - 1]) / m;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = d[i] - c[i] * m_[i + 1];
        if (i == 1) break;
    }
}

double UniformSpline::operator()(double x) const {
    if (y_.empty()) return 0.0;
    const double n1 = static_cast<double>(y_.size()) - 1.0;
    double t = (x - x0_) / dx_;
    if (t < 0.0 || t > n1) {
        if (clamp_zero_) return 0.0;
        t = std::clamp(t, 0.0, n1);
    }
    std::size_t i = std::min(static_cast<std::size_t>(t), y_.size() - 2);
    const double u = t - static_cast<double>(i);
    const double a = 1.0 - u;
    return a * y_[i] + u * y_[i + 1] +
           dx_ * dx_ / 6.0 * ((a * a * a - a) * m_[i] + (u * u * u - u) * m_[i + 1]);
}

namespace {
template <typename T>
T neville(const std::vector<double>& eps, std::vector<T> col, double* order_estimate) {
    const std::size_t n = col.size();
    T prev = col.back();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i + k < n; ++i) {
            // value at 0 of the polynomial through points i..i+k
            col[i] = (eps[i + k] * col[i] - eps[i] * col[i + 1]) / (eps[i + k] - eps[i]);
        }
        if (k == n - 2) prev = col[0];
    }
    if (order_estimate) *order_estimate = std::abs(col[0] - prev);
    return col[0];
}
} // namespace

double richardson(const std::vector<double>& eps, const std::vector<double>& val,
                  double* order_estimate) {
    if (eps.size() != val.size() || eps.size() < 2)
        throw validation_error("richardson: need at least two (eps, value) samples");
    return neville<double>(eps, val, order_estimate);
}

cplx richardson_c(const std::vector<double>& eps, const std::vector<cplx>& val,
                  double* order_estimate) {
    if (eps.size() != val.size() || eps.size() < 2)
        throw validation_error("richardson: need at least two (eps, value) samples");
    return neville<cplx>(eps, val, order_estimate);
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace weyl::num
