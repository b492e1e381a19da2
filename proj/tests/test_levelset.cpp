#include <catch2/catch_amalgamated.hpp>

#include "fov/fov.hpp"
#include "test_util.hpp"

using namespace fov;
using testutil::Rng;
using testutil::error_code_of;

TEST_CASE("max_modulus_on_range") {
    SECTION("identity map over the radius-1/2 disk") {
        const BlaschkeProduct b({0.0});
        const auto [maxval, witness] = max_modulus_on_range(jordan_block(2), b, 720);
        CHECK_THAT(maxval, Catch::Matchers::WithinAbs(0.5, 1e-8));
        CHECK_THAT(std::abs(witness), Catch::Matchers::WithinAbs(0.5, 1e-8));
    }
    SECTION("non-containment configuration of the triple-zero model") {
        const SquareMatrix m = build_model_matrix({0.5, 0.5, 0.5});
        const BlaschkeProduct b({cdouble(5.0 / 9.0, 0.2), cdouble(2.0 / 3.0, -2.0 / 9.0)});
        const auto [maxval, witness] = max_modulus_on_range(m, b, 1440);
        CHECK(maxval >= 0.5);
        CHECK(std::abs(witness) < 1.0);
    }
    SECTION("no degree restriction on direct evaluation") {
        const SquareMatrix m = build_model_matrix({0.5, 0.5});
        const BlaschkeProduct high(cvector(6, cdouble(0.5)));
        CHECK_NOTHROW(max_modulus_on_range(m, high, 256));
    }
    SECTION("ranges escaping the unit disk are rejected") {
        CHECK(error_code_of([] {
                  max_modulus_on_range(2.0 * jordan_block(2), BlaschkeProduct({0.0}), 64);
              }) == errc::range_not_in_disk);
    }
}

TEST_CASE("lsc_check") {
    SECTION("triple-zero model against real-zero pairs") {
        const BlaschkeProduct theta(cvector(3, cdouble(0.5)));
        const LscReport rep = lsc_check(theta, BlaschkeProduct({5.0 / 9.0, 0.75}));
        CHECK(rep.satisfied);
        CHECK(rep.max_abs_b >= 0.5);
    }
    SECTION("double zero at the origin against the identity map as boundary case") {
        const LscReport rep = lsc_check(BlaschkeProduct({0.0, 0.0}), BlaschkeProduct({0.0}));
        CHECK_THAT(rep.max_abs_b, Catch::Matchers::WithinAbs(0.5, 1e-8));
        CHECK(rep.satisfied);
    }
    SECTION("repeated-zero families with random lower-degree products") {
        Rng rng(51);
        const BlaschkeProduct theta(cvector(5, cdouble(0.7)));
        for (int trial = 0; trial < 20; ++trial) {
            cvector zeros(rng.uniform_int(1, 4));
            for (cdouble& z : zeros) z = rng.unit_disk(0.9);
            CHECK(lsc_check(theta, BlaschkeProduct(zeros), 720).satisfied);
        }
    }
    SECTION("degree order enforced") {
        CHECK(error_code_of([] {
                  lsc_check(BlaschkeProduct({0.5, 0.5}), BlaschkeProduct({0.1, 0.2}));
              }) == errc::degree_order);
    }
}

TEST_CASE("criterion success implies the level-set check") {
    // whenever the inscribed-disk criterion passes, every lower-degree B must
    // reach 1/2 on the range
    const MatrixFamilySpec spec = testutil::kms_spec(5, 0.5);
    REQUIRE(check_criterion(spec, VectorPath::canonical(5), true).satisfied);
    const BlaschkeProduct theta(cvector(5, cdouble(0.5)));
    Rng rng(52);
    for (int trial = 0; trial < 50; ++trial) {
        cvector zeros(rng.uniform_int(1, 4));
        for (cdouble& z : zeros) z = rng.unit_disk(0.95);
        const LscReport rep = lsc_check(theta, BlaschkeProduct(zeros), 720);
        CHECK(rep.satisfied);
        CHECK(rep.max_abs_b > 0.5);
    }
}

TEST_CASE("level_set_boundary circles") {
    SECTION("identity map at level 1/2") {
        const auto contours = level_set_boundary(BlaschkeProduct({0.0}), 0.5, 256);
        REQUIRE(contours.size() == 1);
        for (const cdouble& z : contours.front())
            CHECK_THAT(std::abs(z), Catch::Matchers::WithinAbs(0.5, 2.0 / 256.0));
    }
    SECTION("squared map at level 1/2") {
        const auto contours = level_set_boundary(BlaschkeProduct({0.0, 0.0}), 0.5, 256);
        REQUIRE(contours.size() == 1);
        for (const cdouble& z : contours.front())
            CHECK_THAT(std::abs(z),
                       Catch::Matchers::WithinAbs(std::pow(2.0, -0.5), 2.0 / 256.0));
    }
    SECTION("two-zero product emits contours for the figure pipeline") {
        const BlaschkeProduct b({cdouble(0.5, -2.0 / 11.0), cdouble(2.0 / 3.0, -0.25)});
        const auto contours = level_set_boundary(b, 0.5, 256);
        CHECK(!contours.empty());
        size_t vertices = 0;
        for (const auto& p : contours) vertices += p.size();
        CHECK(vertices > 64);
    }
    SECTION("parameter validation") {
        CHECK(error_code_of([] {
                  level_set_boundary(BlaschkeProduct({0.0}), 1.5, 256);
              }) == errc::parameter_out_of_range);
        CHECK(error_code_of([] {
                  level_set_boundary(BlaschkeProduct({0.0}), 0.5, 32);
              }) == errc::parameter_out_of_range);
    }
}

TEST_CASE("contours classify the level set correctly") {
    // point-in-polygon parity against direct evaluation on a 10x finer grid
    const BlaschkeProduct b({cdouble(0.5, -2.0 / 11.0), cdouble(2.0 / 3.0, -0.25)});
    const int grid = 128;
    const auto contours = level_set_boundary(b, 0.5, grid);

    const int fine = 10 * grid;
    long agree = 0, total = 0;
    for (int j = 0; j <= fine; j += 2) {
        for (int i = 0; i <= fine; i += 2) {
            const cdouble z(-1.0 + 2.0 * i / fine, -1.0 + 2.0 * j / fine);
            if (std::abs(z) > 0.97) continue;
            const bool truth = b.abs_at(z) < 0.5;
            const bool classified = point_in_contours(contours, z);
            ++total;
            if (truth == classified) ++agree;
        }
    }
    REQUIRE(total > 100000);
    CHECK(static_cast<double>(agree) / total >= 0.999);
}

TEST_CASE("max modulus is monotone in the range") {
    // scaling the Jordan block scales W(A), which only grows the maximum
    const BlaschkeProduct b({cdouble(0.2, 0.1)});
    double last = 0.0;
    for (double scale : {0.3, 0.6, 0.9}) {
        const auto [maxval, witness] =
            max_modulus_on_range(cdouble(scale) * jordan_block(2), b, 360);
        CHECK(maxval >= last - 1e-12);
        last = maxval;
    }
}
