#pragma once

// Serialization: complex literals of the form `re+imi`, JSON report schemas,
// CSV emitters (12 significant digits) and a small SVG canvas with the fixed
// viewBox [-1.05, -1.05, 2.1, 2.1].

#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blaschke.hpp"
#include "crouzeix.hpp"
#include "disks.hpp"
#include "errors.hpp"
#include "levelset.hpp"
#include "modelspace.hpp"
#include "numrange.hpp"

namespace fov {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Complex literal grammar: [-+]?float([-+]float)?i? with a pure-real, a
// pure-imaginary ("0.3i", "-i") and a combined form ("0.5-0.2i").

namespace detail {

inline bool parse_signed_float(const std::string& s, size_t& pos, double& out) {
    size_t i = pos;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        size_t ed = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > ed) i = j;
    }
    if (i == digits) return false;
    try {
        size_t used = 0;
        out = std::stod(s.substr(pos, i - pos), &used);
        if (used != i - pos) return false;
    } catch (const std::exception&) {
        return false;
    }
    pos = i;
    return true;
}

}  // namespace detail

inline cdouble parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) raise(errc::parse_error, "empty complex literal");

    // unit-imaginary shorthands
    if (s == "i" || s == "+i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};

    size_t pos = 0;
    double first = 0.0;
    if (!detail::parse_signed_float(s, pos, first))
        raise(errc::parse_error, "bad complex literal '" + raw + "'");

    if (pos == s.size()) return {first, 0.0};
    if (s[pos] == 'i') {
        if (pos + 1 != s.size()) raise(errc::parse_error, "bad complex literal '" + raw + "'");
        return {0.0, first};
    }

    if (s[pos] != '+' && s[pos] != '-')
        raise(errc::parse_error, "bad complex literal '" + raw + "'");
    double second = 0.0;
    if (s.substr(pos) == "+i") return {first, 1.0};
    if (s.substr(pos) == "-i") return {first, -1.0};
    if (!detail::parse_signed_float(s, pos, second) || pos + 1 != s.size() || s[pos] != 'i')
        raise(errc::parse_error, "bad complex literal '" + raw + "'");
    return {first, second};
}

inline cvector parse_complex_list(const std::string& raw) {
    cvector out;
    std::string item;
    std::istringstream in(raw);
    while (std::getline(in, item, ',')) out.push_back(parse_complex(item));
    if (out.empty()) raise(errc::parse_error, "empty list");
    return out;
}

inline std::string format_complex(cdouble z) {
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", z.real());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

// ---------------------------------------------------------------------------
// Numeric formatting: 12 significant digits everywhere in CSV/JSON.

inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Double rounded to 12 significant digits, for deterministic JSON payloads.
inline double round12(double v) { return std::stod(fmt12(v)); }

inline json json_complex(cdouble z) { return json::array({round12(z.real()), round12(z.imag())}); }

// ---------------------------------------------------------------------------
// JSON schemas.

inline json to_json(const MatrixFamilySpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.dimension();
    j["m"] = spec.m;
    j["t"] = round12(spec.t);
    j["zeros"] = json::array();
    for (const cdouble& z : spec.zeros) j["zeros"].push_back(json_complex(z));
    return j;
}

inline MatrixFamilySpec spec_from_json(const json& j) {
    MatrixFamilySpec spec;
    spec.family = family_from_string(j.at("family").get<std::string>());
    spec.n = j.value("n", 2);
    spec.m = j.value("m", 0);
    spec.t = j.value("t", 0.0);
    if (j.contains("zeros"))
        for (const auto& z : j["zeros"])
            spec.zeros.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    spec.validate();
    return spec;
}

inline json to_json(const BlaschkeProduct& b) {
    json j;
    j["zeros"] = json::array();
    for (const cdouble& z : b.zeros()) j["zeros"].push_back(json_complex(z));
    j["unimodular"] = json_complex(b.unimodular());
    return j;
}

inline json to_json(const DiskCriterionReport& r) {
    json j;
    j["spec"] = to_json(r.spec);
    j["curve_id"] = r.curve_id;
    j["center"] = json_complex(r.center);
    j["euclid_radius"] = round12(r.euclid_radius);
    j["shifted"] = r.shifted;
    j["disk_center"] = json_complex(r.disk.center);
    j["disk_radius"] = round12(r.disk.radius);
    j["pseudo_center"] = json_complex(r.pseudo.center);
    j["pseudo_radius"] = round12(r.pseudo.radius);
    j["threshold"] = round12(r.threshold);
    j["satisfied"] = r.satisfied;
    j["margin"] = round12(r.margin);
    return j;
}

inline json to_json(const LscReport& r) {
    json j;
    j["theta"] = to_json(r.theta);
    j["b"] = to_json(r.b);
    j["max_abs_b"] = round12(r.max_abs_b);
    j["satisfied"] = r.satisfied;
    j["witness"] = json_complex(r.witness);
    return j;
}

inline json to_json(const CrouzeixCertificate& c) {
    json j;
    j["spec"] = to_json(c.spec);
    j["norm_x"] = round12(c.norm_x);
    j["norm_x_inv"] = round12(c.norm_x_inv);
    j["product"] = round12(c.product);
    j["certified"] = c.conjecture_certified;
    j["method"] = cert_method_name(c.method);
    return j;
}

inline json to_json(const TrigCurve& c) {
    json j;
    j["coeffs"] = json::array();
    for (const cdouble& z : c.coeffs) j["coeffs"].push_back(json_complex(z));
    return j;
}

inline json to_json(const RangeBoundary& b) {
    json j;
    j["angles"] = json::array();
    j["points"] = json::array();
    j["support"] = json::array();
    for (size_t i = 0; i < b.angles.size(); ++i) {
        j["angles"].push_back(round12(b.angles[i]));
        j["points"].push_back(json_complex(b.points[i]));
        j["support"].push_back(round12(b.support_values[i]));
    }
    return j;
}

// ---------------------------------------------------------------------------
// CSV emitters. A single '#'-prefixed header comment precedes the data rows.

inline void write_boundary_csv(std::ostream& os, const RangeBoundary& b) {
    os << "# theta,re,im,support\n";
    for (size_t i = 0; i < b.angles.size(); ++i)
        os << fmt12(b.angles[i]) << ',' << fmt12(b.points[i].real()) << ','
           << fmt12(b.points[i].imag()) << ',' << fmt12(b.support_values[i]) << '\n';
}

inline void write_curve_csv(std::ostream& os, const TrigCurve& c, int samples) {
    os << "# s,re,im\n";
    for (int i = 0; i < samples; ++i) {
        const double s = kTwoPi * i / samples;
        const cdouble z = c.eval(s);
        os << fmt12(s) << ',' << fmt12(z.real()) << ',' << fmt12(z.imag()) << '\n';
    }
}

inline void write_disk_scan_row(std::ostream& os, const DiskCriterionReport& r) {
    os << fmt12(r.spec.t) << ',' << fmt12(r.center.real()) << ',' << fmt12(r.euclid_radius)
       << ',' << fmt12(r.pseudo.center.real()) << ',' << fmt12(r.pseudo.radius) << ','
       << fmt12(r.threshold) << ',' << (r.satisfied ? 1 : 0) << '\n';
}

inline void write_cert_scan_row(std::ostream& os, const CrouzeixCertificate& c) {
    os << family_name(c.spec.family) << ',' << c.spec.dimension() << ',' << c.spec.m << ','
       << fmt12(c.spec.t) << ',' << fmt12(c.norm_x) << ',' << fmt12(c.norm_x_inv) << ','
       << fmt12(c.product) << ',' << (c.conjecture_certified ? 1 : 0) << ','
       << cert_method_name(c.method) << '\n';
}

// ---------------------------------------------------------------------------
// SVG canvas. Coordinates use 6 significant digits; the y axis is flipped so
// the mathematical orientation is preserved. The unit circle is always drawn.

class SvgCanvas {
  public:
    SvgCanvas() {
        body_ << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888888\" "
                 "stroke-width=\"0.004\"/>\n";
    }

    void polyline(const cvector& pts, const std::string& stroke, double width,
                  bool dashed = false) {
        if (pts.size() < 2) return;
        body_ << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
              << fmt6(width) << "\"";
        if (dashed) body_ << " stroke-dasharray=\"0.04 0.02\"";
        body_ << " points=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << ' ';
            body_ << fmt6(pts[i].real()) << ',' << fmt6(-pts[i].imag());
        }
        body_ << "\"/>\n";
    }

    void closed_curve(const cvector& pts, const std::string& stroke, double width,
                      bool dashed = false) {
        if (pts.empty()) return;
        cvector closed = pts;
        closed.push_back(pts.front());
        polyline(closed, stroke, width, dashed);
    }

    void circle(cdouble center, double radius, const std::string& stroke, double width,
                bool dashed = false) {
        body_ << "  <circle cx=\"" << fmt6(center.real()) << "\" cy=\"" << fmt6(-center.imag())
              << "\" r=\"" << fmt6(radius) << "\" fill=\"none\" stroke=\"" << stroke
              << "\" stroke-width=\"" << fmt6(width) << "\"";
        if (dashed) body_ << " stroke-dasharray=\"0.04 0.02\"";
        body_ << "/>\n";
    }

    void write(std::ostream& os) const {
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
           << body_.str() << "</svg>\n";
    }

  private:
    static std::string fmt6(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }

    std::ostringstream body_;
};

}  // namespace fov
