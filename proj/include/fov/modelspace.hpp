#pragma once

// Model matrices: the upper-triangular matrix M determined by a zero list,
// the nilpotent banded family A_t, and the cornered families A_{t,m}.

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace fov {

inline constexpr double kMaxT = 1.0 - 1e-6;  // keeps 1 - t^2 away from underflow

enum class Family { mtheta, kms, atm };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::mtheta: return "mtheta";
        case Family::kms: return "kms";
        case Family::atm: return "atm";
    }
    return "?";
}

inline Family family_from_string(const std::string& s) {
    if (s == "mtheta") return Family::mtheta;
    if (s == "kms") return Family::kms;
    if (s == "atm") return Family::atm;
    raise(errc::parse_error, "unknown family '" + s + "'");
}

struct MatrixFamilySpec {
    Family family = Family::kms;
    int n = 2;
    int m = 0;       // atm only, m >= 2
    double t = 0.0;  // in [0, kMaxT]
    cvector zeros;   // mtheta only

    void validate() const {
        if (t < 0.0 || t > kMaxT)
            raise(errc::parameter_out_of_range, "t must lie in [0, 1 - 1e-6]");
        switch (family) {
            case Family::mtheta:
                if (zeros.empty()) raise(errc::parameter_out_of_range, "mtheta requires zeros");
                break;
            case Family::kms:
                if (n < 2) raise(errc::parameter_out_of_range, "kms requires n >= 2");
                break;
            case Family::atm:
                if (n < 4 || m < 2)
                    raise(errc::parameter_out_of_range, "atm requires n >= 4 and m >= 2");
                break;
        }
    }

    int dimension() const {
        return family == Family::mtheta ? static_cast<int>(zeros.size()) : n;
    }
};

/// M with M_jj = a_j and M_ij = sqrt(1-|a_i|^2) sqrt(1-|a_j|^2) prod_{k=i+1}^{j-1}(-conj(a_k))
/// for i < j. The empty product (j = i + 1) is 1.
inline SquareMatrix build_model_matrix(const cvector& zeros) {
    const int n = static_cast<int>(zeros.size());
    if (n < 1) raise(errc::parameter_out_of_range, "zero list must be nonempty");
    std::vector<double> defect(n);
    for (int i = 0; i < n; ++i) {
        const double m = std::abs(zeros[i]);
        if (m >= 1.0) raise(errc::zero_outside_disk, "zeros must lie in the open unit disk");
        defect[i] = std::sqrt(1.0 - m * m);
    }
    SquareMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = zeros[i];
        cdouble prod = 1.0;
        for (int j = i + 1; j < n; ++j) {
            a(i, j) = defect[i] * defect[j] * prod;
            prod *= -std::conj(zeros[j]);
        }
    }
    return a;
}

/// Strictly upper triangular with (i, j) entry (-t)^{j-i-1} for j > i.
inline SquareMatrix build_kms(int n, double t) {
    if (n < 2) raise(errc::parameter_out_of_range, "kms requires n >= 2");
    if (t < 0.0 || t > kMaxT) raise(errc::parameter_out_of_range, "t must lie in [0, 1 - 1e-6]");
    SquareMatrix a(n);
    for (int i = 0; i < n; ++i) {
        double v = 1.0;
        for (int j = i + 1; j < n; ++j) {
            a(i, j) = v;
            v *= -t;
        }
    }
    return a;
}

/// First superdiagonal 1, corner (1, n) entry t^m, all other strictly upper entries t.
inline SquareMatrix build_atm(int n, int m, double t) {
    if (n < 4 || m < 2) raise(errc::parameter_out_of_range, "atm requires n >= 4 and m >= 2");
    if (t < 0.0 || t > kMaxT) raise(errc::parameter_out_of_range, "t must lie in [0, 1 - 1e-6]");
    SquareMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a(i, j) = t;
    for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = 1.0;
    a(0, n - 1) = std::pow(t, m);
    return a;
}

inline SquareMatrix build_matrix(const MatrixFamilySpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::mtheta: return build_model_matrix(spec.zeros);
        case Family::kms: return build_kms(spec.n, spec.t);
        case Family::atm: return build_atm(spec.n, spec.m, spec.t);
    }
    raise(errc::parameter_out_of_range, "unreachable");
}

}  // namespace fov
