#pragma once

// Polynomial-norm certificates for the nilpotent families: the curve viewed
// as a power series F, its compositional inverse, B = G(A) with F(B) = A, the
// Jordan similarity B = X J X^{-1}, and condition-number certificates
// ||X|| ||X^{-1}|| <= 2 that imply the two-times polynomial bound.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "modelspace.hpp"
#include "numrange.hpp"

namespace fov {

/// Truncated power series; c[k] is the coefficient of z^k.
struct PowerSeries {
    cvector c;

    int order() const { return static_cast<int>(c.size()) - 1; }

    cdouble coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : cdouble(0.0);
    }
};

namespace detail {

/// Product truncated at `order`.
inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b, int order) {
    PowerSeries r;
    r.c.assign(order + 1, 0.0);
    for (int i = 0; i <= order && i < static_cast<int>(a.c.size()); ++i) {
        if (a.c[i] == 0.0) continue;
        for (int j = 0; j + i <= order && j < static_cast<int>(b.c.size()); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

/// F(G(z)) truncated at `order`; requires G(0) = 0.
inline PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g, int order) {
    PowerSeries r;
    r.c.assign(order + 1, 0.0);
    for (int k = std::min<int>(order, f.order()); k >= 0; --k) {
        r = series_mul(r, g, order);
        r.c[0] += f.coeff(k);
    }
    return r;
}

}  // namespace detail

/// Compositional inverse: G with F(G(z)) = z + O(z^{order+1}). Coefficients
/// are matched one order at a time; g_k enters F(G) linearly through f_1 g_k.
inline PowerSeries series_revert(const PowerSeries& f, int order) {
    if (order < 1) raise(errc::parameter_out_of_range, "reversion order must be >= 1");
    if (std::abs(f.coeff(0)) > tol::structural_zero || std::abs(f.coeff(1)) <= 1e-12)
        raise(errc::not_invertible_at_zero, "series must satisfy F(0) = 0 and F'(0) != 0");

    PowerSeries g;
    g.c.assign(order + 1, 0.0);
    g.c[1] = 1.0 / f.coeff(1);
    for (int k = 2; k <= order; ++k) {
        const PowerSeries h = detail::series_compose(f, g, k);
        g.c[k] = -h.c[k] / f.coeff(1);
    }
    return g;
}

inline PowerSeries curve_to_series(const TrigCurve& curve) { return {curve.coeffs}; }

struct BtResult {
    SquareMatrix a;  // the family matrix
    SquareMatrix b;  // B with F(B) = A
    PowerSeries f;   // curve as a power series
    PowerSeries g;   // truncated inverse of f
};

/// Steps 1-3 of the certificate construction for the nilpotent families.
inline BtResult build_bt(const MatrixFamilySpec& spec, const VectorPath& path) {
    spec.validate();
    if (spec.family == Family::mtheta)
        raise(errc::method_unavailable, "build_bt requires a nilpotent family (kms or atm)");

    BtResult r;
    r.a = build_matrix(spec);
    const int n = r.a.size();
    const TrigCurve curve = curve_from_path(r.a, path, n - 1);
    r.f = curve_to_series(curve);
    if (std::abs(r.f.c[0]) > 1e-14)
        raise(errc::numeric_failure, "nilpotent curve must have zero mean");
    r.f.c[0] = 0.0;
    r.g = series_revert(r.f, n - 1);
    r.b = matrix_polynomial(r.g.c, r.a);

    const SquareMatrix back = matrix_polynomial(r.f.c, r.b);
    if ((back - r.a).max_abs() > tol::residual * std::max(1.0, r.a.max_abs()))
        raise(errc::numeric_failure, "F(B) does not reproduce A within tolerance");
    return r;
}

/// Jordan similarity for a single-block nilpotent B built kernel-upward:
/// column 1 spans ker B, and each next column solves B x_{k+1} = x_k with
/// vanishing first component. The result is upper triangular and reproduces
/// the closed-form similarity matrices of the n = 4 families exactly.
inline SquareMatrix jordan_chain_kernel_up(const SquareMatrix& b) {
    detail::require_single_block(b);
    const int n = b.size();
    SquareMatrix x(n);
    cvector col(n, 0.0), next(n, 0.0);
    col[0] = 1.0;
    x(0, 0) = 1.0;
    for (int k = 1; k < n; ++k) {
        std::fill(next.begin(), next.end(), cdouble(0.0));
        for (int i = n - 2; i >= 0; --i) {
            cdouble rhs = col[i];
            for (int j = i + 2; j < n; ++j) rhs -= b(i, j) * next[j];
            next[i + 1] = rhs / b(i, i + 1);
        }
        for (int r = 0; r < n; ++r) x(r, k) = next[r];
        col = next;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Trigonometric solver for real cubics.

struct CubicSpectrum {
    double a = 0, b = 0, c = 0, d = 0;  // input cubic a x^3 + b x^2 + c x + d
    double p = 0, q = 0;                // depressed cubic x^3 + p x + q
    double g = 0;                       // cosine argument, in [-1, 1]
    std::array<double, 3> z{};          // depressed roots, z[k]
    std::array<double, 3> x{};          // roots of the input, x[2] <= x[1] <= x[0]
};

/// Three real roots via the cosine parameterization of the depressed cubic.
inline CubicSpectrum cubic_roots(double a, double b, double c, double d) {
    if (a == 0.0) raise(errc::parameter_out_of_range, "leading coefficient must be nonzero");
    CubicSpectrum s;
    s.a = a; s.b = b; s.c = c; s.d = d;
    s.p = (3.0 * a * c - b * b) / (3.0 * a * a);
    s.q = (2.0 * b * b * b - 9.0 * a * b * c + 27.0 * a * a * d) / (27.0 * a * a * a);
    if (std::abs(s.p) <= 1e-14)
        raise(errc::degenerate_cubic, "depressed cubic has vanishing linear term");
    if (s.p > 0.0) raise(errc::complex_roots, "cubic has complex roots (p > 0)");

    s.g = 1.5 * s.q * std::sqrt(-3.0 / s.p) / s.p;
    if (std::abs(s.g) > 1.0 + 1e-9)
        raise(errc::complex_roots, "cubic has complex roots (|G| > 1)");
    s.g = std::clamp(s.g, -1.0, 1.0);

    const double rho = 2.0 * std::sqrt(-s.p / 3.0);
    const double phi = std::acos(s.g) / 3.0;
    const double shift = b / (3.0 * a);
    for (int k = 0; k < 3; ++k) {
        s.z[k] = rho * std::cos(phi - kTwoPi * k / 3.0);
        s.x[k] = s.z[k] - shift;
    }
    return s;
}

/// Characteristic polynomial of a Hermitian matrix by the trace recursion;
/// returns real coefficients (leading 1) of x^n + c1 x^{n-1} + ... + cn.
inline std::vector<double> char_poly_hermitian(const SquareMatrix& m) {
    const int n = m.size();
    std::vector<double> coef(n + 1, 0.0);
    coef[0] = 1.0;
    SquareMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += mk(i, i).real();
        coef[k] = -tr / k;
        if (k < n) {
            SquareMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted(i, i) += coef[k];
            mk = m * shifted;
        }
    }
    return coef;
}

/// Synthetic division of a monic quartic by (x - 1) after checking the root.
inline std::array<double, 4> deflate_at_one(const std::vector<double>& quartic) {
    if (quartic.size() != 5) raise(errc::dimension_mismatch, "expected a quartic");
    double scale = 0.0, at_one = 0.0;
    for (double c : quartic) { scale = std::max(scale, std::abs(c)); at_one += c; }
    if (std::abs(at_one) > 1e-8 * std::max(1.0, scale))
        raise(errc::numeric_failure, "x = 1 is not a root of the quartic");
    std::array<double, 4> cubic{};
    cubic[0] = quartic[0];
    for (int k = 1; k < 4; ++k) cubic[k] = quartic[k] + cubic[k - 1];
    return cubic;
}

// ---------------------------------------------------------------------------
// Closed-form similarity matrices for the n = 4 families.

inline bool has_closed_form_xt(const MatrixFamilySpec& spec) {
    return spec.n == 4 &&
           (spec.family == Family::kms || (spec.family == Family::atm && spec.m >= 2));
}

inline SquareMatrix closed_form_xt(const MatrixFamilySpec& spec) {
    spec.validate();
    if (!has_closed_form_xt(spec))
        raise(errc::method_unavailable, "closed-form X exists only for the n = 4 families");
    const double s5 = std::sqrt(5.0);
    const double t = spec.t;
    SquareMatrix x(4);
    x(0, 0) = 1.0;
    x(1, 1) = (1.0 + s5) / 4.0;
    x(2, 2) = (3.0 + s5) / 8.0;
    x(3, 3) = (2.0 + s5) / 8.0;
    if (spec.family == Family::kms) {
        x(1, 2) = -(3.0 / 40.0) * (s5 - 5.0) * t;
        x(1, 3) = -t * t / (8.0 * s5);
        x(2, 3) = 3.0 * t / (4.0 * s5);
    } else {
        x(1, 2) = (3.0 / 40.0) * (s5 - 5.0) * t;
        x(1, 3) = (6.0 * t * t - 7.0 * std::pow(t, spec.m)) / (8.0 * s5);
        x(2, 3) = -3.0 * t / (4.0 * s5);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Certificates.

enum class CertMethod { cubic, eig, closed_form };

inline const char* cert_method_name(CertMethod m) {
    switch (m) {
        case CertMethod::cubic: return "cubic";
        case CertMethod::eig: return "eig";
        case CertMethod::closed_form: return "closed_form";
    }
    return "?";
}

struct CrouzeixCertificate {
    MatrixFamilySpec spec;
    double norm_x = 0;
    double norm_x_inv = 0;
    double product = 0;
    bool conjecture_certified = false;
    CertMethod method = CertMethod::eig;
};

namespace detail {

inline CrouzeixCertificate finish_certificate(const MatrixFamilySpec& spec, CertMethod method,
                                              double nx, double nxi) {
    CrouzeixCertificate cert;
    cert.spec = spec;
    cert.method = method;
    cert.norm_x = nx;
    cert.norm_x_inv = nxi;
    cert.product = nx * nxi;
    cert.conjecture_certified = cert.product <= 2.0 + tol::norm_accuracy;
    return cert;
}

}  // namespace detail

/// ||X|| ||X^{-1}|| certificate. `cubic` and `closed_form` use the
/// closed-form X of the n = 4 families; `eig` builds X from the kernel-up
/// Jordan chain of B (any family dimension).
inline CrouzeixCertificate condition_product(const MatrixFamilySpec& spec, CertMethod method) {
    spec.validate();
    if (method == CertMethod::eig) {
        const BtResult bt = build_bt(spec, VectorPath::canonical(spec.dimension()));
        const SquareMatrix x = jordan_chain_kernel_up(bt.b);
        return detail::finish_certificate(spec, method, operator_norm(x),
                                          operator_norm(inverse(x)));
    }

    const SquareMatrix x = closed_form_xt(spec);  // MethodUnavailable off n = 4
    if (method == CertMethod::closed_form)
        return detail::finish_certificate(spec, method, operator_norm(x),
                                          operator_norm(inverse(x)));

    // cubic: the Gram spectrum is {1, x0, x1, x2} with the known root deflated.
    const std::vector<double> quartic = char_poly_hermitian(x.adjoint() * x);
    const std::array<double, 4> c = deflate_at_one(quartic);
    const CubicSpectrum roots = cubic_roots(c[0], c[1], c[2], c[3]);
    if (roots.x[2] <= 0.0) raise(errc::numeric_failure, "Gram spectrum must be positive");
    return detail::finish_certificate(spec, method, std::sqrt(std::max(1.0, roots.x[0])),
                                      1.0 / std::sqrt(std::min(1.0, roots.x[2])));
}

/// Monotone upper estimate for ||X^{-1}||: the smallest depressed-cubic root
/// at t combined with the quadratic-shift term frozen at its t = 0 value.
/// Dominates the true norm; its crossing of 2 gives the recorded interval
/// endpoints.
inline double xt_inverse_norm_bound(const MatrixFamilySpec& spec) {
    spec.validate();
    if (!has_closed_form_xt(spec))
        raise(errc::method_unavailable, "bound exists only for the n = 4 families");

    auto cubic_at = [&](double t) {
        MatrixFamilySpec s = spec;
        s.t = t;
        const SquareMatrix x = closed_form_xt(s);
        const std::array<double, 4> c = deflate_at_one(char_poly_hermitian(x.adjoint() * x));
        return cubic_roots(c[0], c[1], c[2], c[3]);
    };
    const CubicSpectrum at_t = cubic_at(spec.t);
    const CubicSpectrum at_zero = cubic_at(0.0);
    const double shift0 = at_zero.b / (3.0 * at_zero.a);
    const double x2_bound = at_t.z[2] - shift0;
    if (x2_bound <= 0.0) raise(errc::numeric_failure, "bound is not positive here");
    return 1.0 / std::sqrt(x2_bound);
}

// ---------------------------------------------------------------------------
// Direct polynomial-norm stress test.

namespace detail {

class SplitMix64 {  // documented generator: splitmix64 bit mixer
  public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on the closed unit disk via the polar map.
    cdouble unit_disk() {
        const double r = std::sqrt(uniform01());
        const double phi = kTwoPi * uniform01();
        return std::polar(r, phi);
    }

  private:
    std::uint64_t s_;
};

}  // namespace detail

/// Worst ratio ||p(A)|| / max_{boundary W(A)} |p| over seeded random
/// polynomials with coefficients uniform on the unit disk.
inline double crouzeix_inequality_test(const SquareMatrix& a, int trials, int max_degree,
                                       std::uint64_t seed, int boundary_samples = 720) {
    if (trials < 1) raise(errc::parameter_out_of_range, "trials must be >= 1");
    if (max_degree < 0) raise(errc::parameter_out_of_range, "max_degree must be >= 0");
    const RangeBoundary bd = boundary(a, boundary_samples);

    detail::SplitMix64 rng(seed);
    double worst = 0.0;
    cvector coeffs(max_degree + 1);
    for (int trial = 0; trial < trials; ++trial) {
        for (cdouble& c : coeffs) c = rng.unit_disk();
        const double num = operator_norm(matrix_polynomial(coeffs, a));
        double den = 0.0;
        for (const cdouble& z : bd.points) {
            cdouble v = 0.0;
            for (size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
            den = std::max(den, std::abs(v));
        }
        if (den > 0.0) worst = std::max(worst, num / den);
    }
    return worst;
}

inline double crouzeix_inequality_test(const MatrixFamilySpec& spec, int trials, int max_degree,
                                       std::uint64_t seed, int boundary_samples = 720) {
    return crouzeix_inequality_test(build_matrix(spec), trials, max_degree, seed,
                                    boundary_samples);
}

}  // namespace fov
