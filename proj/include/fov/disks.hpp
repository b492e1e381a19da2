#pragma once

// Inscribed disks of symmetric trigonometric curves and the pseudohyperbolic
// disk criterion verdict.

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "blaschke.hpp"
#include "errors.hpp"
#include "modelspace.hpp"
#include "numrange.hpp"

namespace fov {

namespace detail {

inline double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                              double step_tol = 1e-12) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > step_tol) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

/// Global minimum of f over [0, 2pi): coarse grid then golden-section polish.
inline double periodic_minimize(const std::function<double(double)>& f, int grid = 2048) {
    int best = 0;
    double fbest = f(0.0);
    for (int i = 1; i < grid; ++i) {
        const double v = f(kTwoPi * i / grid);
        if (v < fbest) { fbest = v; best = i; }
    }
    const double h = kTwoPi / grid;
    const double s = golden_minimize(f, best * h - h, best * h + h);
    return std::min(fbest, f(s));
}

}  // namespace detail

/// Midpoint center (f(0) + f(pi)) / 2; real for conjugate-symmetric curves.
inline cdouble inscribed_center(const TrigCurve& curve) {
    const cdouble c = 0.5 * (curve.eval(0.0) + curve.eval(std::numbers::pi));
    if (std::abs(c.imag()) > 1e-10)
        raise(errc::non_symmetric_curve, "curve is not symmetric across the real axis");
    return cdouble(c.real(), 0.0);
}

/// Largest R with D(c, R) inside the convex hull of the curve: the minimum of
/// |f(s) - c| over s, located on a 2048-point grid and polished to |ds| <= 1e-12.
inline double inscribed_radius(const TrigCurve& curve, cdouble center) {
    const double r2 = detail::periodic_minimize(
        [&](double s) { return std::norm(curve.eval(s) - center); });
    const double r = std::sqrt(std::max(0.0, r2));
    if (r <= 1e-10) raise(errc::center_outside_curve, "center lies on or outside the curve");
    return r;
}

/// (1/2)^{1/(n-1)}.
inline double criterion_threshold(int n) {
    if (n < 2) raise(errc::parameter_out_of_range, "criterion threshold requires n >= 2");
    return std::pow(0.5, 1.0 / (n - 1));
}

/// Alternate threshold cos(pi/(n+1)) for the conjectured sharper radius.
inline double conjectured_threshold(int n) {
    if (n < 2) raise(errc::parameter_out_of_range, "threshold requires n >= 2");
    return std::cos(std::numbers::pi / (n + 1));
}

struct DiskCriterionReport {
    MatrixFamilySpec spec;
    std::string curve_id;
    cdouble center;            // curve-frame center c(t)
    double euclid_radius = 0;  // curve-frame radius R(t)
    bool shifted = false;      // disk mapped by t + (1 - t^2) * (.)
    EuclideanDisk disk;        // the disk actually tested, in unit-disk coordinates
    PseudoDisk pseudo;         // (z_0(t), r(t))
    double threshold = 0;
    bool satisfied = false;
    double margin = 0;  // r - threshold
};

/// Full criterion pipeline: curve -> midpoint center -> inscribed radius ->
/// optional shift into the model-matrix range -> pseudohyperbolic radius.
inline DiskCriterionReport check_criterion(const MatrixFamilySpec& spec, const VectorPath& path,
                                           bool shift) {
    spec.validate();
    const SquareMatrix a = build_matrix(spec);
    const TrigCurve curve = curve_from_path(a, path);

    DiskCriterionReport rep;
    rep.spec = spec;
    rep.curve_id = std::string(family_name(spec.family)) + "(n=" + std::to_string(a.size()) +
                   ",t=" + std::to_string(spec.t) + ")";
    rep.center = inscribed_center(curve);
    rep.euclid_radius = inscribed_radius(curve, rep.center);
    rep.shifted = shift;
    if (shift) {
        const double f = 1.0 - spec.t * spec.t;
        rep.disk = {spec.t + f * rep.center, f * rep.euclid_radius};
    } else {
        rep.disk = {rep.center, rep.euclid_radius};
    }
    rep.pseudo = euclid_to_pseudo(rep.disk);
    rep.threshold = criterion_threshold(a.size());
    rep.margin = rep.pseudo.radius - rep.threshold;
    rep.satisfied = rep.margin > -tol::structural_zero;
    return rep;
}

/// 1-D refinement of the midpoint center along the real axis; returns the
/// center maximizing the inscribed radius near the midpoint choice.
inline cdouble refine_center(const TrigCurve& curve, cdouble start, double span = 0.2) {
    auto neg_radius = [&](double c) {
        return -detail::periodic_minimize(
            [&](double s) { return std::norm(curve.eval(s) - cdouble(c, 0.0)); }, 512);
    };
    const double c = detail::golden_minimize(neg_radius, start.real() - span,
                                             start.real() + span, 1e-10);
    // keep the midpoint center when the coarse search gained nothing
    if (inscribed_radius(curve, cdouble(c, 0.0)) <= inscribed_radius(curve, start))
        return start;
    return cdouble(c, 0.0);
}

}  // namespace fov
