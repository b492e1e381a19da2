// Command-line surface: numerical-range boundaries, inscribed-disk criterion
// verdicts, level-set checks, condition-number certificates, parameter scans
// and reproduction of the built-in reference tables.
//
// Exit codes: 0 success / satisfied, 1 checked-and-unsatisfied, 2 usage
// error, 3 numeric failure. Standard output carries only data; diagnostics
// go to standard error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fov/fov.hpp"
#include "fov/io.hpp"
#include "fov/repro.hpp"

namespace {

using namespace fov;

constexpr int kExitSatisfied = 0;
constexpr int kExitUnsatisfied = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(const error& e) {
    switch (e.code()) {
        case errc::parse_error:
        case errc::parameter_out_of_range:
        case errc::zero_outside_disk:
        case errc::dimension_mismatch:
        case errc::not_unit_vector:
        case errc::degree_order:
        case errc::unknown_formula:
        case errc::method_unavailable:
        case errc::dimension_too_large:
            return kExitUsage;
        default:
            return kExitNumeric;
    }
}

struct OutputSink {
    std::string path;

    template <typename Fn>
    void emit(Fn&& writer) const {
        if (path.empty()) {
            writer(std::cout);
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) raise(errc::parse_error, "cannot open output file '" + path + "'");
            writer(f);
        }
    }
};

// Family selection shared by the compute commands. `theta`, `phi` and `psi`
// are shorthands that expand to explicit zero lists:
//   theta: n repeated zeros t        phi: zeros t, t, t^(1/m)
//   psi:   zeros t, t, t, sqrt(t)
struct FamilyArgs {
    std::string family = "kms";
    std::string zeros_text;
    int n = 0;
    int m = 0;
    double t = 0.0;
    std::string path_text;

    void add_to(CLI::App* cmd, bool default_kms = true) {
        cmd->add_option("--family", family,
                        "family: mtheta|theta|kms|atm|phi|psi" +
                            std::string(default_kms ? " (default kms)" : ""));
        cmd->add_option("--zeros", zeros_text, "comma-separated zeros, e.g. 0.5,-0.2+0.1i");
        cmd->add_option("--n", n, "dimension (kms, atm, theta)");
        cmd->add_option("--m", m, "corner exponent (atm) or extra-zero exponent (phi)");
        cmd->add_option("--t", t, "family parameter in [0, 1 - 1e-6)");
        cmd->add_option("--path", path_text, "custom path weights w0,w1,... (normalized)");
    }

    MatrixFamilySpec resolve(bool& shiftable) const {
        MatrixFamilySpec spec;
        spec.t = t;
        shiftable = false;
        if (family == "kms") {
            spec.family = Family::kms;
            spec.n = n > 0 ? n : 4;
            shiftable = true;
        } else if (family == "atm") {
            spec.family = Family::atm;
            spec.n = n > 0 ? n : 4;
            spec.m = m;
        } else if (family == "theta") {
            if (n < 2) raise(errc::parameter_out_of_range, "theta requires --n >= 2");
            spec.family = Family::mtheta;
            spec.zeros.assign(n, t);
        } else if (family == "phi") {
            if (m < 2) raise(errc::parameter_out_of_range, "phi requires --m >= 2");
            spec.family = Family::mtheta;
            spec.zeros = {t, t, std::pow(t, 1.0 / m)};
        } else if (family == "psi") {
            spec.family = Family::mtheta;
            spec.zeros = {t, t, t, std::sqrt(t)};
        } else if (family == "mtheta") {
            if (zeros_text.empty()) raise(errc::parse_error, "mtheta requires --zeros");
            spec.family = Family::mtheta;
            spec.zeros = parse_complex_list(zeros_text);
        } else {
            raise(errc::parse_error, "unknown family '" + family + "'");
        }
        spec.validate();
        return spec;
    }

    VectorPath resolve_path(int dimension) const {
        if (path_text.empty()) return VectorPath::canonical(dimension);
        std::vector<double> w;
        std::string item;
        std::istringstream in(path_text);
        while (std::getline(in, item, ',')) w.push_back(std::stod(item));
        if (static_cast<int>(w.size()) != dimension)
            raise(errc::dimension_mismatch, "path length must equal the matrix dimension");
        return VectorPath::from_weights(std::move(w));
    }
};

CertMethod method_from_string(const std::string& s, const MatrixFamilySpec& spec) {
    if (s == "cubic") return CertMethod::cubic;
    if (s == "eig") return CertMethod::eig;
    if (s == "formula" || s == "closed_form") return CertMethod::closed_form;
    if (s == "auto") return has_closed_form_xt(spec) ? CertMethod::closed_form : CertMethod::eig;
    raise(errc::parse_error, "unknown method '" + s + "'");
}

void print_json(const OutputSink& sink, const json& j) {
    sink.emit([&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

// --- numrange ---------------------------------------------------------------

int cmd_numrange(const FamilyArgs& fam, int samples, int threads, const std::string& format,
                 const OutputSink& sink, const std::string& overlay_zeros, double level) {
    bool shiftable = false;
    const MatrixFamilySpec spec = fam.resolve(shiftable);
    const SquareMatrix a = build_matrix(spec);
    const RangeBoundary bd = boundary(a, samples, threads);

    if (format == "csv") {
        sink.emit([&](std::ostream& os) { write_boundary_csv(os, bd); });
    } else if (format == "json") {
        json j = to_json(bd);
        j["spec"] = to_json(spec);
        print_json(sink, j);
    } else if (format == "svg") {
        SvgCanvas svg;
        svg.closed_curve(bd.points, "#000000", 0.006);
        if (!overlay_zeros.empty()) {
            const BlaschkeProduct b(parse_complex_list(overlay_zeros));
            for (const Polyline& p : level_set_boundary(b, level, 512))
                svg.polyline(p, "#999999", 0.005);
        }
        sink.emit([&](std::ostream& os) { svg.write(os); });
    } else {
        raise(errc::parse_error, "unknown format '" + format + "'");
    }
    return kExitSatisfied;
}

// --- curve ------------------------------------------------------------------

int cmd_curve(const FamilyArgs& fam, int samples, bool shift, const std::string& format,
              const OutputSink& sink) {
    bool shiftable = false;
    const MatrixFamilySpec spec = fam.resolve(shiftable);
    const SquareMatrix a = build_matrix(spec);
    TrigCurve curve = curve_from_path(a, fam.resolve_path(a.size()));
    if (shift) {
        if (!shiftable) raise(errc::parameter_out_of_range, "--shift applies to family kms only");
        const double f = 1.0 - spec.t * spec.t;
        for (cdouble& c : curve.coeffs) c *= f;
        curve.coeffs[0] += spec.t;
    }

    if (format == "csv") {
        sink.emit([&](std::ostream& os) { write_curve_csv(os, curve, samples); });
    } else if (format == "json") {
        json j = to_json(curve);
        j["spec"] = to_json(spec);
        j["shifted"] = shift;
        print_json(sink, j);
    } else {
        raise(errc::parse_error, "curve supports csv or json output");
    }
    return kExitSatisfied;
}

// --- disk -------------------------------------------------------------------

int cmd_disk(const FamilyArgs& fam, bool conjecture_threshold, bool refine,
             std::optional<double> t_min, std::optional<double> t_max, double step,
             const OutputSink& sink) {
    bool shiftable = false;

    auto report_at = [&](double t) {
        FamilyArgs at = fam;
        at.t = t;
        const MatrixFamilySpec spec = at.resolve(shiftable);
        const VectorPath path = at.resolve_path(spec.dimension());
        DiskCriterionReport rep = check_criterion(spec, path, shiftable);
        if (conjecture_threshold) {
            rep.threshold = conjectured_threshold(spec.dimension());
            rep.margin = rep.pseudo.radius - rep.threshold;
            rep.satisfied = rep.margin > -tol::structural_zero;
        }
        if (refine) {
            const SquareMatrix a = build_matrix(spec);
            const TrigCurve curve = curve_from_path(a, path);
            const cdouble c2 = refine_center(curve, rep.center);
            const double r2 = inscribed_radius(curve, c2);
            if (r2 > rep.euclid_radius) {
                rep.center = c2;
                rep.euclid_radius = r2;
                const double f = shiftable ? 1.0 - t * t : 1.0;
                rep.disk = {shiftable ? t + f * c2 : c2, f * r2};
                rep.pseudo = euclid_to_pseudo(rep.disk);
                rep.margin = rep.pseudo.radius - rep.threshold;
                rep.satisfied = rep.margin > -tol::structural_zero;
            }
        }
        return rep;
    };

    if (t_max) {  // grid scan
        const double lo = t_min.value_or(0.0);
        if (step <= 0.0 || lo >= *t_max || *t_max > kMaxT)
            raise(errc::parameter_out_of_range, "need 0 <= t-min < t-max <= 1 - 1e-6, step > 0");
        if (lo + step > *t_max + 1e-12)
            raise(errc::parameter_out_of_range, "step larger than the scanned range");
        sink.emit([&](std::ostream& os) {
            os << "# t,c,R,z0,r,threshold,satisfied\n";
            for (double t = lo; t <= *t_max + 1e-12; t += step)
                write_disk_scan_row(os, report_at(std::min(t, kMaxT)));
        });
        return kExitSatisfied;
    }

    const DiskCriterionReport rep = report_at(fam.t);
    print_json(sink, to_json(rep));
    return rep.satisfied ? kExitSatisfied : kExitUnsatisfied;
}

// --- lsc --------------------------------------------------------------------

int cmd_lsc(const std::string& theta_text, const std::string& b_text, int samples,
            bool allow_degenerate, const OutputSink& sink) {
    const BlaschkeProduct theta(parse_complex_list(theta_text));
    const BlaschkeProduct b(parse_complex_list(b_text));
    LscReport rep{theta, b, 0.0, false, 0.0};
    if (allow_degenerate && b.degree() >= theta.degree()) {
        std::cerr << "warning: deg B >= deg Theta is outside the conjecture hypothesis\n";
        const SquareMatrix m = build_model_matrix(theta.zeros());
        const auto [maxval, witness] = max_modulus_on_range(m, b, samples);
        rep.max_abs_b = maxval;
        rep.witness = witness;
        rep.satisfied = maxval >= 0.5 - tol::structural_zero;
    } else {
        rep = lsc_check(theta, b, samples);
    }
    print_json(sink, to_json(rep));
    return rep.satisfied ? kExitSatisfied : kExitUnsatisfied;
}

// --- cert -------------------------------------------------------------------

int cmd_cert(const FamilyArgs& fam, const std::string& method, bool compare, int stress_trials,
             int stress_degree, std::uint64_t seed, const OutputSink& sink) {
    bool shiftable = false;
    const MatrixFamilySpec spec = fam.resolve(shiftable);
    if (spec.family == Family::mtheta)
        raise(errc::method_unavailable, "certificates exist for the nilpotent families");

    if (compare) {
        json list = json::array();
        list.push_back(to_json(condition_product(spec, CertMethod::eig)));
        if (has_closed_form_xt(spec)) {
            list.push_back(to_json(condition_product(spec, CertMethod::closed_form)));
            list.push_back(to_json(condition_product(spec, CertMethod::cubic)));
        }
        print_json(sink, list);
        bool all = true;
        for (const auto& j : list) all = all && j["certified"].get<bool>();
        return all ? kExitSatisfied : kExitUnsatisfied;
    }

    const CrouzeixCertificate cert = condition_product(spec, method_from_string(method, spec));
    json j = to_json(cert);
    if (stress_trials > 0) {
        // seeded random polynomials: the measured ratio must stay below the bound
        const double worst = crouzeix_inequality_test(spec, stress_trials, stress_degree, seed);
        j["stress_trials"] = stress_trials;
        j["stress_max_degree"] = stress_degree;
        j["stress_worst_ratio"] = round12(worst);
        j["stress_within_bound"] = worst <= cert.product + 1e-6;
    }
    print_json(sink, j);
    return cert.conjecture_certified ? kExitSatisfied : kExitUnsatisfied;
}

// --- scan -------------------------------------------------------------------

int cmd_scan(const FamilyArgs& fam, const std::string& method, double t_min, double t_max,
             double step, double threshold, int threads, const OutputSink& sink) {
    if (step <= 0.0 || t_min < 0.0 || t_min >= t_max || t_max > kMaxT)
        raise(errc::parameter_out_of_range, "need 0 <= t-min < t-max <= 1 - 1e-6, step > 0");
    if (t_min + step > t_max + 1e-12)
        raise(errc::parameter_out_of_range, "step larger than the scanned range");

    bool shiftable = false;
    std::vector<double> grid;
    for (double t = t_min; t <= t_max + 1e-12; t += step) grid.push_back(std::min(t, kMaxT));

    std::vector<CrouzeixCertificate> certs(grid.size());
    detail::parallel_for(static_cast<int>(grid.size()), threads, [&](int i) {
        FamilyArgs at = fam;
        at.t = grid[i];
        const MatrixFamilySpec spec = at.resolve(shiftable);
        certs[i] = condition_product(spec, method_from_string(method, spec));
    });

    double max_product = 0.0;
    double prefix_end = -1.0;
    bool prefix = true;
    for (size_t i = 0; i < certs.size(); ++i) {
        max_product = std::max(max_product, certs[i].product);
        if (prefix) {
            if (certs[i].product < threshold) prefix_end = grid[i];
            else prefix = false;
        }
    }

    sink.emit([&](std::ostream& os) {
        os << "# family,n,m,t,normX,normXinv,product,certified,method\n";
        for (const CrouzeixCertificate& c : certs) write_cert_scan_row(os, c);
    });

    char buf[128];
    if (prefix_end >= 0.0)
        std::snprintf(buf, sizeof buf, "max_product=%.6g certified_interval=[0,%.3f]\n",
                      max_product, prefix_end);
    else
        std::snprintf(buf, sizeof buf, "max_product=%.6g certified_interval=none\n", max_product);
    std::cout << buf;
    return kExitSatisfied;
}

// --- repro ------------------------------------------------------------------

int cmd_repro(const std::string& id, const OutputSink& sink) {
    bool known = false;
    for (const std::string& t : repro_table_ids()) known = known || t == id;
    if (!known) raise(errc::unknown_formula, "unknown table id '" + id + "'");

    const ReproTable table = repro_table(id);
    sink.emit([&](std::ostream& os) {
        os << "# row,column,computed,expected,tolerance,ok\n";
        for (const ReproCell& c : table.cells)
            os << c.row << ',' << c.column << ',' << fmt12(c.computed) << ','
               << fmt12(c.expected) << ',' << fmt12(c.tolerance) << ',' << (c.ok() ? 1 : 0)
               << '\n';
        os << (table.ok() ? "PASS " : "FAIL ") << id << '\n';
    });
    return table.ok() ? kExitSatisfied : kExitUnsatisfied;
}

// --- plot -------------------------------------------------------------------

int cmd_plot(const FamilyArgs& fam, int samples, int threads, bool with_curve, bool with_disk,
             bool with_threshold_disk, const std::string& overlay_zeros, double level,
             const OutputSink& sink) {
    bool shiftable = false;
    const MatrixFamilySpec spec = fam.resolve(shiftable);

    // For the nilpotent family the picture lives in the model-matrix range.
    SquareMatrix display = shiftable
                               ? build_model_matrix(cvector(spec.n, cdouble(spec.t)))
                               : build_matrix(spec);
    SvgCanvas svg;
    const RangeBoundary bd = boundary(display, samples, threads);
    svg.closed_curve(bd.points, "#000000", 0.006);

    const VectorPath path = fam.resolve_path(spec.dimension());
    if (with_curve) {
        TrigCurve curve = curve_from_path(build_matrix(spec), path);
        if (shiftable) {
            const double f = 1.0 - spec.t * spec.t;
            for (cdouble& c : curve.coeffs) c *= f;
            curve.coeffs[0] += spec.t;
        }
        cvector pts;
        for (int i = 0; i <= 720; ++i) pts.push_back(curve.eval(kTwoPi * i / 720.0));
        svg.polyline(pts, "#777777", 0.005);
    }
    if (with_disk || with_threshold_disk) {
        const DiskCriterionReport rep = check_criterion(spec, path, shiftable);
        if (with_disk) svg.circle(rep.disk.center, rep.disk.radius, "#333333", 0.004);
        if (with_threshold_disk) {
            const EuclideanDisk td = pseudo_to_euclid({rep.pseudo.center, rep.threshold});
            svg.circle(td.center, td.radius, "#333333", 0.004, /*dashed=*/true);
        }
    }
    if (!overlay_zeros.empty()) {
        const BlaschkeProduct b(parse_complex_list(overlay_zeros));
        for (const Polyline& p : level_set_boundary(b, level, 512))
            svg.polyline(p, "#999999", 0.005);
    }
    sink.emit([&](std::ostream& os) { svg.write(os); });
    return kExitSatisfied;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical-range geometry toolkit"};
    app.require_subcommand(1);

    // shared option storage
    FamilyArgs fam;
    OutputSink sink;
    std::string format = "csv";
    int samples = 720;
    int threads = 1;
    std::uint64_t seed = 12345;

    std::string overlay_zeros;
    double level = 0.5;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", sink.path, "output path (default: stdout)");
        cmd->add_option("--samples", samples, "boundary/curve samples");
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--threads", threads, "worker threads");
    };

    // numrange
    auto* numrange = app.add_subcommand("numrange", "numerical-range boundary");
    fam.add_to(numrange);
    add_common(numrange);
    numrange->add_option("--format", format, "csv|json|svg");
    numrange->add_option("--overlay-levelset", overlay_zeros, "zeros of B for a |B|=level overlay");
    numrange->add_option("--level", level, "level for the overlay (default 0.5)");

    // curve
    auto* curve = app.add_subcommand("curve", "trigonometric curve of a unit-vector path");
    fam.add_to(curve);
    add_common(curve);
    curve->add_option("--format", format, "csv|json");
    bool curve_shift = false;
    curve->add_flag("--shift", curve_shift, "map the curve by t + (1-t^2)(.) (kms only)");

    // disk
    auto* disk = app.add_subcommand("disk", "inscribed pseudohyperbolic disk criterion");
    fam.add_to(disk);
    add_common(disk);
    bool conj_threshold = false, refine = false;
    std::optional<double> disk_tmin, disk_tmax;
    double disk_step = 0.01;
    disk->add_flag("--conjecture-threshold", conj_threshold,
                   "use cos(pi/(n+1)) instead of (1/2)^(1/(n-1))");
    disk->add_flag("--refine-center", refine, "1-D refinement of the midpoint center");
    disk->add_option("--t-min", disk_tmin, "scan start (enables CSV scan mode)");
    disk->add_option("--t-max", disk_tmax, "scan end (enables CSV scan mode)");
    disk->add_option("--step", disk_step, "scan step");

    // lsc
    auto* lsc = app.add_subcommand("lsc", "level-set non-containment check");
    std::string theta_text, b_text;
    lsc->add_option("--theta", theta_text, "zeros of Theta")->required();
    lsc->add_option("--b", b_text, "zeros of B")->required();
    bool allow_degenerate = false;
    lsc->add_flag("--allow-degenerate", allow_degenerate, "permit deg B >= deg Theta");
    add_common(lsc);
    int lsc_samples = 1440;
    lsc->add_option("--lsc-samples", lsc_samples, "boundary samples (default 1440)");

    // cert
    auto* cert = app.add_subcommand("cert", "condition-number certificate");
    fam.add_to(cert);
    add_common(cert);
    std::string method = "auto";
    bool compare = false;
    int stress_trials = 0, stress_degree = 6;
    cert->add_option("--method", method, "cubic|eig|formula|auto");
    cert->add_flag("--compare", compare, "report every available method");
    cert->add_option("--stress", stress_trials,
                     "also measure the worst ratio over N seeded random polynomials");
    cert->add_option("--max-degree", stress_degree, "stress polynomial degree cap (default 6)");

    // scan
    auto* scan = app.add_subcommand("scan", "certificate scan over a t grid");
    fam.add_to(scan);
    add_common(scan);
    double t_min = 0.0, t_max = 0.0, step = 0.001, threshold = 2.0;
    scan->add_option("--t-min", t_min, "grid start (default 0)");
    scan->add_option("--t-max", t_max, "grid end")->required();
    scan->add_option("--step", step, "grid step (default 0.001)");
    scan->add_option("--threshold", threshold, "certified threshold (default 2)");
    scan->add_option("--method", method, "cubic|eig|formula|auto");

    // repro
    auto* repro = app.add_subcommand("repro", "recompute a built-in reference table");
    std::string table_id;
    repro->add_option("table", table_id, "thm-n27|fig-newtm|thm-newxtinorm|table-1|fig-xt1")
        ->required();
    repro->add_option("--out", sink.path, "output path (default: stdout)");

    // plot
    auto* plot = app.add_subcommand("plot", "composite SVG figure");
    fam.add_to(plot);
    add_common(plot);
    bool with_curve = false, with_disk = false, with_threshold_disk = false;
    plot->add_flag("--with-curve", with_curve, "draw the path curve");
    plot->add_flag("--with-disk", with_disk, "draw the inscribed disk");
    plot->add_flag("--with-threshold-disk", with_threshold_disk,
                   "draw the criterion-radius disk (dashed)");
    plot->add_option("--overlay-levelset", overlay_zeros, "zeros of B for a |B|=level overlay");
    plot->add_option("--level", level, "level for the overlay (default 0.5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(numrange))
            return cmd_numrange(fam, samples, threads, format, sink, overlay_zeros, level);
        if (app.got_subcommand(curve))
            return cmd_curve(fam, samples, curve_shift, format, sink);
        if (app.got_subcommand(disk))
            return cmd_disk(fam, conj_threshold, refine, disk_tmin, disk_tmax, disk_step, sink);
        if (app.got_subcommand(lsc))
            return cmd_lsc(theta_text, b_text, lsc_samples, allow_degenerate, sink);
        if (app.got_subcommand(cert))
            return cmd_cert(fam, method, compare, stress_trials, stress_degree, seed, sink);
        if (app.got_subcommand(scan))
            return cmd_scan(fam, method, t_min, t_max, step, threshold, threads, sink);
        if (app.got_subcommand(repro)) return cmd_repro(table_id, sink);
        if (app.got_subcommand(plot))
            return cmd_plot(fam, samples, threads, with_curve, with_disk, with_threshold_disk,
                            overlay_zeros, level, sink);
    } catch (const error& e) {
        std::cerr << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitUsage;
}
