#pragma once

// Registry of the explicit center / radius / pseudo-radius formulas for the
// studied curve families, used as oracles against the numeric pipeline.
//
//   kms5-*     degree-5 repeated-zero family, canonical curve (nilpotent frame)
//   kms11-*    degree-11 repeated-zero family, canonical curve
//   phi-*      zeros (t, t, t^{1/m}), canonical curve
//   phi-alt-*  zeros (t, t, t^{1/m}), weights (sqrt(11)/6, 2/3, 1/2)
//   psi-*      zeros (t, t, t, sqrt(t)), canonical curve

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace fov {

namespace forms {

inline constexpr double sqrt3 = 1.7320508075688772;
inline constexpr double sqrt5 = 2.23606797749979;
inline constexpr double sqrt11 = 3.3166247903554;

inline double kms5_center(double t) { return -(t / 12.0) * (t * t + 7.0); }

inline double kms5_radius_sq(double t) {
    const double t2 = t * t;
    return t2 * t2 / 12.0 + t2 / 2.0 + 0.75;
}

inline double kms5_g(double t, double x) {
    const double t2 = t * t;
    return (1.0 / 36.0) * t2 * (1.0 - x * x) *
           (4.0 * t2 * t2 * x * x + 28.0 * t2 * x * x - 4.0 * sqrt3 * t2 * t * x -
            16.0 * sqrt3 * t * x + 13.0);
}

inline double kms5_g1(double t) {
    const double t2 = t * t;
    const double t4 = t2 * t2;
    return sqrt3 * (t4 * t4 + t4 * t2 - t4 + 83.0 * t2 + 252.0);
}

inline double kms5_g2(double t) {
    const double t2 = t * t;
    const double t4 = t2 * t2;
    const double t6 = t4 * t2;
    const double t8 = t4 * t4;
    return 3.0 * t8 * t8 + 6.0 * t8 * t6 - 3.0 * t8 * t4 + 492.0 * t8 * t2 + 2013.0 * t8 +
           1014.0 * t6 - 1581.0 * t4 + 1080.0 * t2 + 3888.0;
}

inline double kms5_g3(double t) { return 144.0 * (t * t + 3.0); }

inline double kms5_pseudo_radius(double t) {
    return (kms5_g1(t) - std::sqrt(kms5_g2(t))) / kms5_g3(t);
}

inline double kms11_center(double t) {
    const double t2 = t * t;
    const double t4 = t2 * t2;
    const double t6 = t4 * t2;
    const double t8 = t4 * t4;
    return (t / 24.0) * ((sqrt3 - 2.0) * t8 + (1.0 - 2.0 * sqrt3) * t6 -
                         2.0 * (sqrt3 + 2.0) * t4 - (2.0 * sqrt3 + 11.0) * t2 -
                         11.0 * sqrt3 - 2.0);
}

inline double kms11_h(double t) {
    const double t2 = t * t;
    double p = 1.0;  // powers of t^2
    double acc = 504.0 - 288.0 * sqrt3;
    const double coef[] = {484.0 - 242.0 * sqrt3,  // t^2
                           396.0 * sqrt3 - 396.0,  // t^4
                           632.0,                  // t^6
                           252.0 * sqrt3 + 472.0,  // t^8
                           410.0 * sqrt3 + 244.0,  // t^10
                           96.0 * sqrt3 + 584.0,   // t^12
                           170.0 * sqrt3 + 148.0,  // t^14
                           60.0 * sqrt3 + 88.0,    // t^16
                           56.0,                   // t^18
                           12.0 * sqrt3 - 12.0,    // t^20
                           4.0 - 2.0 * sqrt3};     // t^22
    for (double c : coef) {
        p *= t2;
        acc += c * p;
    }
    return acc;
}

inline double kms11_euclid_radius(double t) {
    return (36.0 * std::sqrt(2.0) + 6.0 * std::sqrt(6.0) - std::sqrt(kms11_h(t))) /
           (24.0 * (sqrt3 + 1.0));
}

inline double cross_defect(double t, int m) {  // sqrt(1-t^2) sqrt(1-t^{2/m})
    return std::sqrt(1.0 - t * t) * std::sqrt(1.0 - std::pow(t, 2.0 / m));
}

inline double phi_center(double t, int m) {
    return 0.25 * (std::pow(t, 1.0 / m) + t * (3.0 - cross_defect(t, m)));
}

inline double phi_radius(double t, int m) {
    const double s = cross_defect(t, m);
    return std::sqrt((1.0 / 8.0) * (1.0 - t * t) *
                     (2.0 * s + 2.0 - t * t - std::pow(t, 2.0 / m)));
}

inline double phi_alt_center(double t, int m) {
    return (1.0 / 12.0) *
           (3.0 * std::pow(t, 1.0 / m) + t * (9.0 - sqrt11 * cross_defect(t, m)));
}

inline double phi_alt_radius(double t, int m) {
    const double s = cross_defect(t, m);
    return std::sqrt((1.0 / 324.0) * (1.0 - t * t) *
                     (80.0 + 24.0 * sqrt11 * s - 36.0 * std::pow(t, 2.0 / m) - 44.0 * t * t));
}

/// Smaller root of r + 1/r = (R^2 - c^2 + 1) / R written explicitly.
inline double pseudo_radius_from(double c, double r_euclid) {
    const double k = 1.0 - c * c + r_euclid * r_euclid;
    return (k - std::sqrt(std::max(0.0, k * k - 4.0 * r_euclid * r_euclid))) / (2.0 * r_euclid);
}

inline double phi_alt_pseudo_radius(double t, int m) {
    return pseudo_radius_from(phi_alt_center(t, m), phi_alt_radius(t, m));
}

inline double phi_alt_glimit(double m) {
    return std::sqrt(2.0 * m * (88.0 * m + 72.0 + 48.0 * std::sqrt(11.0 * m))) / 9.0;
}

inline double phi_alt_hlimit(double m) {
    return 0.5 * (3.0 * m + 1.0) + std::sqrt(11.0 * m) / 3.0;
}

/// Limit of the pseudo radius along t -> 1 for the phi-alt disk.
inline double phi_alt_limit(double m) {
    const double s = std::sqrt(11.0 * m);
    const double num =
        9.0 + 6.0 * s + 27.0 * m -
        std::sqrt(81.0 + 108.0 * s + 306.0 * m - 60.0 * m * s + 25.0 * m * m);
    return num / (8.0 * std::sqrt(m * (9.0 + 6.0 * s + 11.0 * m)));
}

inline double psi_center(double t) {
    const double rt = std::sqrt(t);
    const double w = std::sqrt(t + 1.0);
    return (1.0 / 20.0) * (2.0 * sqrt5 * t * t * t + 2.0 * sqrt5 * w * t * t -
                           (2.0 * sqrt5 * w + sqrt5 - 15.0) * t - (sqrt5 - 5.0) * rt);
}

inline double psi_radius_sq(double t) {
    const double w = std::sqrt(t + 1.0);
    const double t2 = t * t;
    const double bracket = sqrt5 * t2 * t2 - 3.0 * t2 * t2 - 4.0 * t2 * t - 8.0 * w * t2 -
                           2.0 * (-2.0 * t + sqrt5 * w - 3.0 * w + sqrt5 - 5.0) * t2 -
                           8.0 * t2 - 3.0 * sqrt5 * t - 7.0 * t - 2.0 * sqrt5 * w - 6.0 * w -
                           3.0 * sqrt5 - 8.5;
    return -(1.0 / 40.0) * (t - 1.0) * (t - 1.0) * (t + 1.0) * bracket;
}

inline double psi_g(double t, double x) {
    const double w = std::sqrt(1.0 + t);
    return 8.0 * t * t * (1.0 - x * x) *
               (5.0 - sqrt5 + 2.0 * t + 3.0 * w - sqrt5 * w + 2.0 * t * x -
                2.0 * sqrt5 * t * x + 2.0 * t * x * w - 2.0 * sqrt5 * t * x * w) +
           1.0;
}

}  // namespace forms

/// Named formula lookup. `m` is required by the phi families; `x` by the
/// two-variable identities.
inline double closed_form(std::string_view name, double t, std::optional<int> m = {},
                          std::optional<double> x = {}) {
    auto need_m = [&]() -> int {
        if (!m || *m < 2) raise(errc::parameter_out_of_range, "formula requires m >= 2");
        return *m;
    };
    auto need_x = [&]() -> double {
        if (!x) raise(errc::parameter_out_of_range, "formula requires the x argument");
        return *x;
    };

    if (name == "kms5-center") return forms::kms5_center(t);
    if (name == "kms5-radius-sq") return forms::kms5_radius_sq(t);
    if (name == "kms5-g") return forms::kms5_g(t, need_x());
    if (name == "kms5-g1") return forms::kms5_g1(t);
    if (name == "kms5-g2") return forms::kms5_g2(t);
    if (name == "kms5-g3") return forms::kms5_g3(t);
    if (name == "kms5-pseudo-radius") return forms::kms5_pseudo_radius(t);
    if (name == "kms11-center") return forms::kms11_center(t);
    if (name == "kms11-h") return forms::kms11_h(t);
    if (name == "kms11-euclid-radius") return forms::kms11_euclid_radius(t);
    if (name == "phi-center") return forms::phi_center(t, need_m());
    if (name == "phi-radius") return forms::phi_radius(t, need_m());
    if (name == "phi-alt-center") return forms::phi_alt_center(t, need_m());
    if (name == "phi-alt-radius") return forms::phi_alt_radius(t, need_m());
    if (name == "phi-alt-pseudo-radius") return forms::phi_alt_pseudo_radius(t, need_m());
    if (name == "phi-alt-limit") return forms::phi_alt_limit(need_m());
    if (name == "phi-alt-glimit") return forms::phi_alt_glimit(need_m());
    if (name == "phi-alt-hlimit") return forms::phi_alt_hlimit(need_m());
    if (name == "psi-center") return forms::psi_center(t);
    if (name == "psi-radius-sq") return forms::psi_radius_sq(t);
    if (name == "psi-g") return forms::psi_g(t, need_x());
    raise(errc::unknown_formula, "no formula named '" + std::string(name) + "'");
}

}  // namespace fov
