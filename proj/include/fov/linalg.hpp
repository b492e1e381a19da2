#pragma once

// Self-contained dense complex linear algebra for small matrices (n <= 16):
// Hermitian eigendecomposition by cyclic Jacobi rotations, operator norms via
// the Gram matrix, Horner matrix polynomials and nilpotent Jordan chains.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace fov {

using cdouble = std::complex<double>;
using cvector = std::vector<cdouble>;

inline constexpr int kMaxDim = 16;

/// Dense n x n complex matrix, row-major.
class SquareMatrix {
  public:
    SquareMatrix() = default;

    explicit SquareMatrix(int n) : n_(check_dim(n)), a_(static_cast<size_t>(n) * n) {}

    SquareMatrix(int n, cvector entries) : n_(check_dim(n)), a_(std::move(entries)) {
        if (a_.size() != static_cast<size_t>(n_) * n_)
            raise(errc::dimension_mismatch, "entry count does not match dimension");
        for (const cdouble& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                raise(errc::parameter_out_of_range, "matrix entries must be finite");
    }

    static SquareMatrix zero(int n) { return SquareMatrix(n); }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int size() const { return n_; }

    cdouble& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cdouble& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    SquareMatrix adjoint() const {
        SquareMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cdouble& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y) {
        same_dim(x, y);
        SquareMatrix r(x.n_);
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
        return r;
    }

    friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y) {
        same_dim(x, y);
        SquareMatrix r(x.n_);
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }

    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        same_dim(x, y);
        const int n = x.n_;
        SquareMatrix r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const cdouble xik = x(i, k);
                if (xik == 0.0) continue;
                for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend SquareMatrix operator*(cdouble s, const SquareMatrix& x) {
        SquareMatrix r(x.n_);
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = s * x.a_[k];
        return r;
    }

    cvector apply(const cvector& v) const {
        if (static_cast<int>(v.size()) != n_)
            raise(errc::dimension_mismatch, "vector length does not match matrix dimension");
        cvector r(n_);
        for (int i = 0; i < n_; ++i) {
            cdouble s = 0.0;
            for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

  private:
    static int check_dim(int n) {
        if (n < 1) raise(errc::parameter_out_of_range, "matrix dimension must be >= 1");
        return n;
    }
    static void same_dim(const SquareMatrix& x, const SquareMatrix& y) {
        if (x.n_ != y.n_) raise(errc::dimension_mismatch, "matrix dimensions differ");
    }

    int n_ = 0;
    cvector a_;
};

/// <u, v> with the second argument conjugated.
inline cdouble inner(const cvector& u, const cvector& v) {
    if (u.size() != v.size()) raise(errc::dimension_mismatch, "vector lengths differ");
    cdouble s = 0.0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
    return s;
}

inline double norm2(const cvector& v) {
    double s = 0.0;
    for (const cdouble& z : v) s += std::norm(z);
    return std::sqrt(s);
}

struct HermitianSpectrum {
    std::vector<double> eigenvalues;  // sorted descending
    SquareMatrix eigenvectors;        // orthonormal columns, eigenvectors[.][i] ~ eigenvalues[i]

    cvector eigenvector(int i) const {
        const int n = eigenvectors.size();
        cvector v(n);
        for (int r = 0; r < n; ++r) v[r] = eigenvectors(r, i);
        return v;
    }
};

// Cyclic Jacobi with complex plane rotations. The rotation for the (p, q)
// block [[a, b], [conj(b), d]] uses 2*theta = atan2(2|b|, d - a) and the phase
// of b, which annihilates the off-diagonal pair exactly.
inline HermitianSpectrum hermitian_eig(const SquareMatrix& h, double sym_tol = tol::structural_zero) {
    const int n = h.size();
    if (n > kMaxDim) raise(errc::dimension_too_large, "hermitian_eig supports n <= 16");

    const double scale = std::max(1.0, h.max_abs());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (std::abs(h(i, j) - std::conj(h(j, i))) > sym_tol * scale)
                raise(errc::non_hermitian, "matrix is not Hermitian within tolerance");

    SquareMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    SquareMatrix v = SquareMatrix::identity(n);

    const double stop = 1e-14 * scale;
    for (int sweep = 0; sweep < 80; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cdouble b = a(p, q);
                const double ab = std::abs(b);
                if (ab <= 1e-18 * scale) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * ab, aqq - app);
                const double c = std::cos(theta);
                const cdouble s = std::sin(theta) * (b / ab);
                const cdouble sc = std::conj(s);

                for (int k = 0; k < n; ++k) {  // columns: A <- A R
                    const cdouble akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sc * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {  // rows: A <- R* A
                    const cdouble apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = sc * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (int k = 0; k < n; ++k) {
                    const cdouble vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sc * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    HermitianSpectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = SquareMatrix(n);
    for (int c = 0; c < n; ++c) {
        spec.eigenvalues[c] = a(order[c], order[c]).real();
        // canonical phase: largest component made real and positive
        int imax = 0;
        double amax = -1.0;
        for (int r = 0; r < n; ++r) {
            const double m = std::abs(v(r, order[c]));
            if (m > amax) { amax = m; imax = r; }
        }
        cdouble phase = v(imax, order[c]);
        phase = (std::abs(phase) > 0.0) ? std::conj(phase) / std::abs(phase) : cdouble(1.0);
        for (int r = 0; r < n; ++r) spec.eigenvectors(r, c) = phase * v(r, order[c]);
    }
    return spec;
}

/// Largest singular value, computed from the spectrum of A*A.
inline double operator_norm(const SquareMatrix& m) {
    if (m.size() > kMaxDim) raise(errc::dimension_too_large, "operator_norm supports n <= 16");
    const SquareMatrix gram = m.adjoint() * m;
    const HermitianSpectrum s = hermitian_eig(gram, 1e-10);
    return std::sqrt(std::max(0.0, s.eigenvalues.front()));
}

/// Horner evaluation of sum_k coeffs[k] * A^k.
inline SquareMatrix matrix_polynomial(const cvector& coeffs, const SquareMatrix& m) {
    if (coeffs.empty()) raise(errc::parameter_out_of_range, "coefficient list must be nonempty");
    const int n = m.size();
    SquareMatrix r(n);
    for (int i = 0; i < n; ++i) r(i, i) = coeffs.back();
    for (size_t k = coeffs.size() - 1; k-- > 0;) {
        r = r * m;
        for (int i = 0; i < n; ++i) r(i, i) += coeffs[k];
    }
    return r;
}

/// Inverse by Gaussian elimination with partial pivoting.
inline SquareMatrix inverse(const SquareMatrix& m) {
    const int n = m.size();
    SquareMatrix a = m;
    SquareMatrix inv = SquareMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > best) { best = std::abs(a(r, col)); piv = r; }
        if (best < 1e-300) raise(errc::singular_matrix, "matrix is numerically singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const cdouble d = a(col, col);
        for (int j = 0; j < n; ++j) { a(col, j) /= d; inv(col, j) /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const cdouble f = a(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

inline SquareMatrix jordan_block(int n) {
    SquareMatrix j(n);
    for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
    return j;
}

namespace detail {
inline void require_single_block(const SquareMatrix& b) {
    const int n = b.size();
    const double scale = std::max(1.0, b.max_abs());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (std::abs(b(i, j)) > tol::structural_zero * scale)
                raise(errc::not_single_block, "matrix is not strictly upper triangular");
    for (int i = 0; i + 1 < n; ++i)
        if (std::abs(b(i, i + 1)) < tol::structural_zero)
            raise(errc::not_single_block, "superdiagonal entry vanishes");
}
}  // namespace detail

// Jordan chain for a single-block nilpotent B: columns B^{n-1}v, ..., Bv, v
// with seed v = e_n. Then X J_n X^{-1} = B and X is upper triangular with
// nonzero diagonal, hence invertible.
inline SquareMatrix jordan_chain_nilpotent(const SquareMatrix& b) {
    detail::require_single_block(b);
    const int n = b.size();
    SquareMatrix x(n);
    cvector w(n, 0.0);
    w[n - 1] = 1.0;
    for (int col = n - 1; col >= 0; --col) {
        for (int r = 0; r < n; ++r) x(r, col) = w[r];
        if (col > 0) w = b.apply(w);
    }
    return x;
}

}  // namespace fov
