#pragma once

// Numerical range machinery: single range points, support-function boundary
// sweeps, and exact trigonometric curves traced by unit-vector paths.

#include <cmath>
#include <complex>
#include <future>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "modelspace.hpp"

namespace fov {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// s -> sum_k coeffs[k] e^{iks} on [0, 2pi).
struct TrigCurve {
    cvector coeffs;

    cdouble eval(double s) const {
        const cdouble z = std::polar(1.0, s);
        cdouble v = 0.0;
        for (size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
        return v;
    }

    bool real_coefficients(double tolerance = tol::structural_zero) const {
        for (const cdouble& c : coeffs)
            if (std::abs(c.imag()) > tolerance) return false;
        return true;
    }
};

/// Unit-norm weight vector with integer frequencies: x_l(s) = w_l e^{i f_l s}.
struct VectorPath {
    std::vector<double> weights;
    std::vector<int> frequencies;

    VectorPath(std::vector<double> w, std::vector<int> f)
        : weights(std::move(w)), frequencies(std::move(f)) {
        if (weights.size() != frequencies.size())
            raise(errc::dimension_mismatch, "weights and frequencies differ in length");
        double s = 0.0;
        for (double x : weights) {
            if (x < 0.0) raise(errc::parameter_out_of_range, "path weights must be nonnegative");
            s += x * x;
        }
        if (std::abs(s - 1.0) > tol::structural_zero)
            raise(errc::not_unit_vector, "path weights must have unit norm");
    }

    /// w_l = sqrt(2/(n+1)) sin(l pi / (n+1)), frequencies 0..n-1.
    static VectorPath canonical(int n) {
        std::vector<double> w(n);
        std::vector<int> f(n);
        double s = 0.0;
        for (int l = 1; l <= n; ++l) {
            w[l - 1] = std::sqrt(2.0 / (n + 1)) * std::sin(l * std::numbers::pi / (n + 1));
            f[l - 1] = l - 1;
            s += w[l - 1] * w[l - 1];
        }
        for (double& x : w) x /= std::sqrt(s);  // remove rounding drift
        return VectorPath(std::move(w), std::move(f));
    }

    /// Normalized weights with default frequencies 0..n-1.
    static VectorPath from_weights(std::vector<double> w) {
        double s = 0.0;
        for (double x : w) s += x * x;
        if (s <= 0.0) raise(errc::parameter_out_of_range, "path weights must not all vanish");
        for (double& x : w) x /= std::sqrt(s);
        std::vector<int> f(w.size());
        for (size_t i = 0; i < f.size(); ++i) f[i] = static_cast<int>(i);
        return VectorPath(std::move(w), std::move(f));
    }

    cvector at(double s) const {
        cvector x(weights.size());
        for (size_t l = 0; l < weights.size(); ++l)
            x[l] = weights[l] * std::polar(1.0, frequencies[l] * s);
        return x;
    }
};

struct RangeBoundary {
    std::vector<double> angles;
    cvector points;
    std::vector<double> support_values;

    /// Signed violation of the supporting half-planes: <= 0 means inside.
    double halfplane_violation(cdouble z) const {
        double worst = -1e300;
        for (size_t i = 0; i < angles.size(); ++i) {
            const double proj = (z * std::polar(1.0, -angles[i])).real();
            worst = std::max(worst, proj - support_values[i]);
        }
        return worst;
    }

    bool contains(cdouble z, double tolerance = 1e-9) const {
        return halfplane_violation(z) <= tolerance;
    }
};

/// <A x, x> for a unit vector x.
inline cdouble range_point(const SquareMatrix& a, const cvector& x) {
    if (std::abs(norm2(x) - 1.0) > 1e-10)
        raise(errc::not_unit_vector, "range_point requires a unit vector");
    return inner(a.apply(x), x);
}

namespace detail {

// Boundary point in direction theta: top eigenvector of the rotated Hermitian
// part. A repeated top eigenvalue (flat edge) is resolved by maximizing the
// rotated skew part over the top eigenspace, which picks the counterclockwise
// endpoint of the edge deterministically.
inline void boundary_point(const SquareMatrix& a, const SquareMatrix& adj, double theta,
                           cdouble& point, double& support) {
    const int n = a.size();
    const cdouble u = std::polar(1.0, -theta);
    SquareMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (u * a(i, j) + std::conj(u) * adj(i, j));

    const HermitianSpectrum spec = hermitian_eig(h, 1e-9);
    support = spec.eigenvalues.front();

    int cluster = 1;
    const double ctol = 1e-8 * (1.0 + std::abs(support));
    while (cluster < n && spec.eigenvalues[cluster] > support - ctol) ++cluster;

    cvector x;
    if (cluster == 1) {
        x = spec.eigenvector(0);
    } else {
        SquareMatrix skew(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                skew(i, j) = (u * a(i, j) - std::conj(u) * adj(i, j)) / cdouble(0.0, 2.0);
        SquareMatrix p(cluster);
        for (int r = 0; r < cluster; ++r) {
            const cvector vr = spec.eigenvector(r);
            const cvector sv = skew.apply(vr);
            for (int c = 0; c < cluster; ++c) p(c, r) = inner(sv, spec.eigenvector(c));
        }
        const HermitianSpectrum ps = hermitian_eig(p, 1e-8);
        x.assign(n, 0.0);
        for (int c = 0; c < cluster; ++c) {
            const cvector vc = spec.eigenvector(c);
            for (int r = 0; r < n; ++r) x[r] += ps.eigenvectors(c, 0) * vc[r];
        }
        const double nx = norm2(x);
        for (cdouble& z : x) z /= nx;
    }
    point = inner(a.apply(x), x);
}

template <typename Fn>
void parallel_for(int count, int threads, Fn&& body) {
    if (threads <= 1 || count < 2) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    const int workers = std::min(threads, count);
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (int w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (int i = w; i < count; i += workers) body(i);
        }));
    for (auto& f : futures) f.get();
}

}  // namespace detail

/// Support-function sweep over uniformly spaced angles.
inline RangeBoundary boundary(const SquareMatrix& a, int samples, int threads = 1) {
    if (samples < 8) raise(errc::parameter_out_of_range, "boundary requires samples >= 8");
    const SquareMatrix adj = a.adjoint();
    RangeBoundary b;
    b.angles.resize(samples);
    b.points.resize(samples);
    b.support_values.resize(samples);
    detail::parallel_for(samples, threads, [&](int i) {
        const double theta = kTwoPi * i / samples;
        b.angles[i] = theta;
        detail::boundary_point(a, adj, theta, b.points[i], b.support_values[i]);
    });
    return b;
}

/// Uniform sweep plus midpoint refinement wherever adjacent boundary points
/// are farther apart than `gap`.
inline RangeBoundary boundary_adaptive(const SquareMatrix& a, int samples, double gap = 1e-3,
                                       int max_points = 1 << 15) {
    RangeBoundary b = boundary(a, samples);
    const SquareMatrix adj = a.adjoint();
    bool grew = true;
    while (grew && static_cast<int>(b.angles.size()) < max_points) {
        grew = false;
        RangeBoundary next;
        for (size_t i = 0; i < b.angles.size(); ++i) {
            const size_t j = (i + 1) % b.angles.size();
            next.angles.push_back(b.angles[i]);
            next.points.push_back(b.points[i]);
            next.support_values.push_back(b.support_values[i]);
            if (std::abs(b.points[j] - b.points[i]) > gap) {
                const double hi = (j == 0) ? kTwoPi : b.angles[j];
                const double mid = 0.5 * (b.angles[i] + hi);
                cdouble p;
                double s;
                detail::boundary_point(a, adj, mid, p, s);
                next.angles.push_back(mid);
                next.points.push_back(p);
                next.support_values.push_back(s);
                grew = true;
            }
        }
        b = std::move(next);
    }
    return b;
}

/// Exact Fourier coefficients of s -> <A x(s), x(s)>: entry (i, j) contributes
/// weights[i] weights[j] A_ij at frequency f_j - f_i. No sampling involved.
inline TrigCurve curve_from_path(const SquareMatrix& a, const VectorPath& path, int harmonics = -1) {
    const int n = a.size();
    if (static_cast<int>(path.weights.size()) != n)
        raise(errc::dimension_mismatch, "path length must equal the matrix dimension");

    int fmax = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a(i, j) != 0.0) fmax = std::max(fmax, path.frequencies[j] - path.frequencies[i]);
    if (harmonics < 0) harmonics = std::max(1, fmax);

    TrigCurve c;
    c.coeffs.assign(harmonics + 1, 0.0);
    const double scale = std::max(1.0, a.max_abs());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cdouble term = a(i, j) * path.weights[i] * path.weights[j];
            if (term == 0.0) continue;
            const int k = path.frequencies[j] - path.frequencies[i];
            if (k < 0 || k > harmonics) {
                if (std::abs(term) > 1e-14 * scale)
                    raise(errc::parameter_out_of_range,
                          "curve has a component outside frequencies [0, harmonics]");
                continue;
            }
            c.coeffs[k] += term;
        }
    return c;
}

/// Curve coefficients a_{n,k} (-t)^{k-1} for the banded nilpotent family with
/// the canonical path; c_0 = 0.
inline TrigCurve kms_curve(int n, double t) {
    if (n < 2) raise(errc::parameter_out_of_range, "kms_curve requires n >= 2");
    if (t < 0.0 || t > kMaxT) raise(errc::parameter_out_of_range, "t must lie in [0, 1 - 1e-6]");
    const double phi = std::numbers::pi / (n + 1);
    TrigCurve c;
    c.coeffs.assign(n, 0.0);
    double tk = 1.0;  // (-t)^{k-1}
    for (int k = 1; k <= n - 1; ++k) {
        const double ank =
            ((n - k) * std::cos(k * phi) * std::sin(phi) + std::sin((n - k) * phi)) /
            ((n + 1) * std::sin(phi));
        c.coeffs[k] = ank * tk;
        tk *= -t;
    }
    return c;
}

inline cdouble curve_eval(const TrigCurve& c, double s) { return c.eval(s); }

}  // namespace fov
