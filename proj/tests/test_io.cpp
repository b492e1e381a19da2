#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fov/fov.hpp"
#include "fov/io.hpp"
#include "test_util.hpp"

using namespace fov;
using testutil::error_code_of;

TEST_CASE("parse_complex grammar") {
    CHECK(parse_complex("0.5") == cdouble(0.5, 0.0));
    CHECK(parse_complex("-0.25") == cdouble(-0.25, 0.0));
    CHECK(parse_complex("0.5-0.2i") == cdouble(0.5, -0.2));
    CHECK(parse_complex("0.5555+0.2i") == cdouble(0.5555, 0.2));
    CHECK(parse_complex("-1e-3+2.5e-2i") == cdouble(-0.001, 0.025));
    CHECK(parse_complex("0.3i") == cdouble(0.0, 0.3));
    CHECK(parse_complex("-i") == cdouble(0.0, -1.0));
    CHECK(parse_complex("i") == cdouble(0.0, 1.0));
    CHECK(parse_complex("2+i") == cdouble(2.0, 1.0));
    CHECK(parse_complex(" 0.1 + 0.2i ") == cdouble(0.1, 0.2));

    CHECK(error_code_of([] { parse_complex(""); }) == errc::parse_error);
    CHECK(error_code_of([] { parse_complex("abc"); }) == errc::parse_error);
    CHECK(error_code_of([] { parse_complex("1+2"); }) == errc::parse_error);
    CHECK(error_code_of([] { parse_complex("1+2i3"); }) == errc::parse_error);

    const cvector list = parse_complex_list("0.5,0.5,0.5");
    CHECK(list.size() == 3);
    CHECK(list[2] == cdouble(0.5, 0.0));
}

TEST_CASE("spec JSON round trip") {
    MatrixFamilySpec spec = testutil::atm_spec(5, 3, 0.41);
    const json j = to_json(spec);
    CHECK(j["family"] == "atm");
    CHECK(j["n"] == 5);
    CHECK(j["m"] == 3);
    const MatrixFamilySpec back = spec_from_json(j);
    CHECK(back.family == spec.family);
    CHECK(back.n == spec.n);
    CHECK(back.m == spec.m);
    CHECK(back.t == spec.t);

    MatrixFamilySpec mt = testutil::mtheta_spec({cdouble(0.5, -0.2), cdouble(0.1, 0.0)});
    const MatrixFamilySpec back2 = spec_from_json(to_json(mt));
    REQUIRE(back2.zeros.size() == 2);
    CHECK(std::abs(back2.zeros[0] - mt.zeros[0]) <= 1e-12);
}

TEST_CASE("report JSON fields") {
    const DiskCriterionReport rep =
        check_criterion(testutil::kms_spec(5, 0.5), VectorPath::canonical(5), true);
    const json j = to_json(rep);
    CHECK(j.contains("pseudo_radius"));
    CHECK(j.contains("threshold"));
    CHECK(j["satisfied"].get<bool>());
    CHECK(j["margin"].get<double>() > 0.0);

    const CrouzeixCertificate cert =
        condition_product(testutil::kms_spec(4, 0.2), CertMethod::closed_form);
    const json cj = to_json(cert);
    CHECK(cj["method"] == "closed_form");
    CHECK(cj["certified"].get<bool>());
}

TEST_CASE("boundary CSV has one row per sample") {
    const RangeBoundary b = boundary(jordan_block(2), 16);
    std::ostringstream os;
    write_boundary_csv(os, b);
    std::istringstream in(os.str());
    std::string line;
    int header = 0, rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') ++header;
        else ++rows;
    }
    CHECK(header == 1);
    CHECK(rows == 16);
}

TEST_CASE("formatting is stable at 12 significant digits") {
    CHECK(fmt12(0.5) == "0.5");
    CHECK(fmt12(1.0 / 3.0) == "0.333333333333");
    CHECK(round12(1.0 / 3.0) == std::stod("0.333333333333"));
}

TEST_CASE("SVG canvas structure") {
    SvgCanvas svg;
    svg.circle(cdouble(0.2, 0.1), 0.3, "#000000", 0.004);
    svg.polyline({cdouble(0, 0), cdouble(0.5, 0.5)}, "#777777", 0.005);
    std::ostringstream os;
    svg.write(os);
    const std::string s = os.str();
    CHECK(s.rfind("<?xml", 0) == 0);
    CHECK(s.find("viewBox=\"-1.05 -1.05 2.1 2.1\"") != std::string::npos);
    CHECK(s.find("r=\"1\"") != std::string::npos);  // unit circle always present
    CHECK(s.find("</svg>") != std::string::npos);
    // y axis is flipped
    CHECK(s.find("cy=\"-0.1\"") != std::string::npos);
}
