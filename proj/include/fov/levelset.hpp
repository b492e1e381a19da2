#pragma once

// Level sets of |B| and the level-set non-containment check: the maximum of
// |B| over a numerical range is attained on the boundary (maximum principle),
// so only the support-function boundary is sampled.

#include <cmath>
#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "blaschke.hpp"
#include "disks.hpp"
#include "errors.hpp"
#include "numrange.hpp"

namespace fov {

/// Maximum of |B| over the boundary of W(A): dense angular sampling plus
/// golden-section refinement of the support-point curve near the best angle.
/// Returns (max value, witness point).
inline std::pair<double, cdouble> max_modulus_on_range(const SquareMatrix& a,
                                                       const BlaschkeProduct& b, int samples) {
    const RangeBoundary bd = boundary(a, samples);
    for (const cdouble& z : bd.points)
        if (std::abs(z) >= 1.0)
            raise(errc::range_not_in_disk, "numerical range reaches the unit circle");

    int best = 0;
    double fbest = -1.0;
    std::vector<double> vals(bd.points.size());
    for (size_t i = 0; i < bd.points.size(); ++i) {
        vals[i] = b.abs_at(bd.points[i]);
        if (vals[i] > fbest) { fbest = vals[i]; best = static_cast<int>(i); }
    }

    const SquareMatrix adj = a.adjoint();
    auto neg_on_boundary = [&](double theta) {
        cdouble p;
        double s;
        detail::boundary_point(a, adj, theta, p, s);
        return -b.abs_at(p);
    };
    const double h = kTwoPi / samples;
    const double theta = detail::golden_minimize(neg_on_boundary, best * h - h, best * h + h, 1e-10);

    cdouble witness;
    double support;
    detail::boundary_point(a, adj, theta, witness, support);
    const double refined = b.abs_at(witness);
    if (refined >= fbest) return {refined, witness};
    return {fbest, bd.points[best]};
}

struct LscReport {
    BlaschkeProduct theta;
    BlaschkeProduct b;
    double max_abs_b = 0;
    bool satisfied = false;
    cdouble witness;
};

/// Non-containment check: satisfied when max |B| over W(M) reaches 1/2.
inline LscReport lsc_check(const BlaschkeProduct& theta, const BlaschkeProduct& b,
                           int samples = 1440) {
    if (b.degree() >= theta.degree())
        raise(errc::degree_order, "check requires deg B < deg Theta");
    const SquareMatrix m = build_model_matrix(theta.zeros());
    const auto [maxval, witness] = max_modulus_on_range(m, b, samples);
    return {theta, b, maxval, maxval >= 0.5 - tol::structural_zero, witness};
}

// ---------------------------------------------------------------------------
// Marching-squares contours of |B(z)| = level over [-1, 1]^2.

using Polyline = cvector;

namespace detail {

struct SegmentEnd {
    double x, y;
    bool operator<(const SegmentEnd& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
    bool operator==(const SegmentEnd& o) const { return x == o.x && y == o.y; }
};

inline SegmentEnd lerp_edge(double xa, double ya, double va, double xb, double yb, double vb) {
    const double t = (vb != va) ? va / (va - vb) : 0.5;
    return {xa + t * (xb - xa), ya + t * (yb - ya)};
}

}  // namespace detail

/// Contour polylines of |B(z)| = level clipped to the closed unit disk.
/// Closed loops repeat their first vertex at the end.
inline std::vector<Polyline> level_set_boundary(const BlaschkeProduct& b, double level, int grid) {
    if (level <= 0.0 || level >= 1.0)
        raise(errc::parameter_out_of_range, "level must lie in (0, 1)");
    if (grid < 64) raise(errc::parameter_out_of_range, "grid must be >= 64");

    const double h = 2.0 / grid;
    auto node_x = [&](int i) { return -1.0 + h * i; };

    // phi = |B| - level on the nodes; points outside the disk get a positive
    // sentinel so the contour (which lies strictly inside) never crosses there.
    std::vector<double> phi(static_cast<size_t>(grid + 1) * (grid + 1));
    for (int j = 0; j <= grid; ++j)
        for (int i = 0; i <= grid; ++i) {
            const cdouble z(node_x(i), node_x(j));
            double v;
            if (std::abs(z) > 1.0 - 1e-9) {
                v = 1.0;
            } else {
                v = b.abs_at(z) - level;
            }
            phi[static_cast<size_t>(j) * (grid + 1) + i] = v;
        }
    auto at = [&](int i, int j) { return phi[static_cast<size_t>(j) * (grid + 1) + i]; };

    using detail::SegmentEnd;
    std::vector<std::pair<SegmentEnd, SegmentEnd>> segments;
    for (int j = 0; j < grid; ++j) {
        for (int i = 0; i < grid; ++i) {
            const double v00 = at(i, j), v10 = at(i + 1, j);
            const double v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
            const int mask = (v00 < 0 ? 1 : 0) | (v10 < 0 ? 2 : 0) |
                             (v11 < 0 ? 4 : 0) | (v01 < 0 ? 8 : 0);
            if (mask == 0 || mask == 15) continue;

            const double x0 = node_x(i), x1 = node_x(i + 1);
            const double y0 = node_x(j), y1 = node_x(j + 1);
            const SegmentEnd bottom = detail::lerp_edge(x0, y0, v00, x1, y0, v10);
            const SegmentEnd right = detail::lerp_edge(x1, y0, v10, x1, y1, v11);
            const SegmentEnd top = detail::lerp_edge(x0, y1, v01, x1, y1, v11);
            const SegmentEnd left = detail::lerp_edge(x0, y0, v00, x0, y1, v01);

            auto emit = [&](SegmentEnd u, SegmentEnd v) {
                if (u == v) return;  // contour through a grid node
                segments.emplace_back(u, v);
            };
            switch (mask) {
                case 1: case 14: emit(left, bottom); break;
                case 2: case 13: emit(bottom, right); break;
                case 3: case 12: emit(left, right); break;
                case 4: case 11: emit(right, top); break;
                case 6: case 9: emit(bottom, top); break;
                case 7: case 8: emit(left, top); break;
                case 5: case 10: {  // saddle: split by the cell-center sample
                    const cdouble zc(0.5 * (x0 + x1), 0.5 * (y0 + y1));
                    const double vc = (std::abs(zc) > 1.0 - 1e-9 ? 1.0 : b.abs_at(zc) - level);
                    const bool center_in = vc < 0;
                    if ((mask == 5) == center_in) {
                        emit(left, top);
                        emit(right, bottom);
                    } else {
                        emit(left, bottom);
                        emit(right, top);
                    }
                    break;
                }
                default: break;
            }
        }
    }

    // Stitch segments into chains; shared cell edges produce bit-identical
    // endpoints, so exact keys suffice.
    std::multimap<detail::SegmentEnd, size_t> by_end;
    for (size_t s = 0; s < segments.size(); ++s) {
        by_end.emplace(segments[s].first, s);
        by_end.emplace(segments[s].second, s);
    }
    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> out;

    auto take_next = [&](const detail::SegmentEnd& from, size_t& seg, detail::SegmentEnd& to) {
        auto [lo, hi] = by_end.equal_range(from);
        for (auto it = lo; it != hi; ++it) {
            if (used[it->second]) continue;
            seg = it->second;
            const auto& s = segments[seg];
            to = (s.first == from) ? s.second : s.first;
            return true;
        }
        return false;
    };

    for (size_t s0 = 0; s0 < segments.size(); ++s0) {
        if (used[s0]) continue;
        used[s0] = true;
        std::vector<detail::SegmentEnd> chain{segments[s0].first, segments[s0].second};
        for (int dir = 0; dir < 2; ++dir) {
            while (true) {
                size_t seg;
                detail::SegmentEnd to;
                if (!take_next(chain.back(), seg, to)) break;
                used[seg] = true;
                chain.push_back(to);
            }
            std::reverse(chain.begin(), chain.end());
        }
        Polyline poly;
        poly.reserve(chain.size());
        for (const auto& e : chain) poly.emplace_back(e.x, e.y);
        out.push_back(std::move(poly));
    }
    return out;
}

/// Even-odd test against a set of closed contours (test utility and SVG fills).
inline bool point_in_contours(const std::vector<Polyline>& contours, cdouble z) {
    bool inside = false;
    for (const Polyline& poly : contours) {
        for (size_t i = 0, n = poly.size(); i + 1 < n; ++i) {
            const cdouble a = poly[i], b = poly[i + 1];
            if ((a.imag() > z.imag()) == (b.imag() > z.imag())) continue;
            const double xcross =
                a.real() + (z.imag() - a.imag()) / (b.imag() - a.imag()) * (b.real() - a.real());
            if (xcross > z.real()) inside = !inside;
        }
    }
    return inside;
}

}  // namespace fov
