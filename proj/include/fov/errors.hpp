#pragma once

#include <stdexcept>
#include <string>

namespace fov {

enum class errc {
    non_hermitian,
    dimension_too_large,
    pole_proximity,
    outside_disk,
    not_inside_unit_disk,
    zero_outside_disk,
    parameter_out_of_range,
    not_unit_vector,
    dimension_mismatch,
    non_symmetric_curve,
    center_outside_curve,
    unknown_formula,
    range_not_in_disk,
    degree_order,
    not_invertible_at_zero,
    complex_roots,
    degenerate_cubic,
    method_unavailable,
    not_single_block,
    singular_matrix,
    numeric_failure,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_hermitian: return "NonHermitian";
        case errc::dimension_too_large: return "DimensionTooLarge";
        case errc::pole_proximity: return "PoleProximity";
        case errc::outside_disk: return "OutsideDisk";
        case errc::not_inside_unit_disk: return "NotInsideUnitDisk";
        case errc::zero_outside_disk: return "ZeroOutsideDisk";
        case errc::parameter_out_of_range: return "ParameterOutOfRange";
        case errc::not_unit_vector: return "NotUnitVector";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::non_symmetric_curve: return "NonSymmetricCurve";
        case errc::center_outside_curve: return "CenterOutsideCurve";
        case errc::unknown_formula: return "UnknownFormula";
        case errc::range_not_in_disk: return "RangeNotInDisk";
        case errc::degree_order: return "DegreeOrder";
        case errc::not_invertible_at_zero: return "NotInvertibleAtZero";
        case errc::complex_roots: return "ComplexRoots";
        case errc::degenerate_cubic: return "DegenerateCubic";
        case errc::method_unavailable: return "MethodUnavailable";
        case errc::not_single_block: return "NotSingleBlock";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::numeric_failure: return "NumericFailure";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

/// Library-wide exception carrying a machine-checkable error code.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

// Centralized numeric tolerances.
namespace tol {
inline constexpr double structural_zero = 1e-12;  // entries treated as exact zeros
inline constexpr double residual = 1e-10;         // reconstruction / eigenpair residuals
inline constexpr double norm_accuracy = 1e-9;     // operator norm relative accuracy
}  // namespace tol

}  // namespace fov
