#pragma once

// Finite Blaschke products, the pseudohyperbolic metric and conversion
// between Euclidean and pseudohyperbolic disks inside the unit disk.

#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace fov {

class BlaschkeProduct {
  public:
    explicit BlaschkeProduct(cvector zeros, cdouble unimodular = 1.0)
        : zeros_(std::move(zeros)), unimodular_(unimodular) {
        for (const cdouble& a : zeros_)
            if (std::abs(a) > 1.0 - 1e-9)
                raise(errc::zero_outside_disk, "Blaschke zeros must satisfy |a| <= 1 - 1e-9");
        if (std::abs(std::abs(unimodular_) - 1.0) > tol::structural_zero)
            raise(errc::parameter_out_of_range, "front factor must be unimodular");
    }

    int degree() const { return static_cast<int>(zeros_.size()); }
    const cvector& zeros() const { return zeros_; }
    cdouble unimodular() const { return unimodular_; }

    cdouble evaluate(cdouble z) const {
        cdouble w = unimodular_;
        for (const cdouble& a : zeros_) {
            const cdouble den = 1.0 - std::conj(a) * z;
            if (std::abs(den) <= 1e-14)
                raise(errc::pole_proximity, "evaluation point too close to a pole");
            w *= (z - a) / den;
        }
        return w;
    }

    double abs_at(cdouble z) const { return std::abs(evaluate(z)); }

  private:
    cvector zeros_;
    cdouble unimodular_;
};

/// |(z - w) / (1 - conj(w) z)| for z, w in the open unit disk.
inline double pseudo_distance(cdouble z, cdouble w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
        raise(errc::outside_disk, "pseudo_distance requires |z|, |w| < 1");
    return std::abs((z - w) / (1.0 - std::conj(w) * z));
}

struct EuclideanDisk {
    cdouble center;
    double radius = 0.0;
};

struct PseudoDisk {
    cdouble center;   // |center| < 1
    double radius = 0.0;  // in [0, 1)
};

namespace detail {
// Smaller root of r^2 - k r + 1 = 0 for k >= 2, via the conjugate-root form
// 2 / (k + sqrt(k^2 - 4)) which avoids cancellation for large k.
inline double smaller_quadratic_root(double k) {
    const double disc = std::max(0.0, k * k - 4.0);
    return 2.0 / (k + std::sqrt(disc));
}
}  // namespace detail

inline PseudoDisk euclid_to_pseudo(const EuclideanDisk& d) {
    const double c = std::abs(d.center);
    if (d.radius <= 0.0) raise(errc::parameter_out_of_range, "disk radius must be positive");
    if (c + d.radius >= 1.0)
        raise(errc::not_inside_unit_disk, "disk must lie strictly inside the unit disk");
    if (c == 0.0) return {cdouble(0.0), d.radius};

    const double r = detail::smaller_quadratic_root((d.radius * d.radius - c * c + 1.0) / d.radius);
    const double z0 = detail::smaller_quadratic_root((c * c - d.radius * d.radius + 1.0) / c);
    return {z0 * (d.center / c), r};
}

inline EuclideanDisk pseudo_to_euclid(const PseudoDisk& d) {
    const double z0 = std::abs(d.center);
    if (z0 >= 1.0 || d.radius < 0.0 || d.radius >= 1.0)
        raise(errc::parameter_out_of_range, "invalid pseudohyperbolic disk");
    const double den = 1.0 - d.radius * d.radius * z0 * z0;
    return {d.center * ((1.0 - d.radius * d.radius) / den),
            d.radius * (1.0 - z0 * z0) / den};
}

}  // namespace fov
