#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "hyperlap/errors.hpp"
#include "hyperlap/verify.hpp"

using namespace hyperlap;

TEST_SUITE("report serialization") {
    TEST_CASE("line format uses shortest round-trip numbers") {
        VerificationReport report;
        report.check_name = "flux_unit";
        report.d = 3;
        report.R = 0.5;
        report.max_residual = 1.5e-9;
        report.pass = true;
        report.tolerance_used = 1e-6;
        CHECK(report_line(report) == "flux_unit,3,0.5,1.5e-09,1e-06,true");

        report.check_name = "decay_check";
        report.d = 12;
        report.R = 2.0;
        report.max_residual = 0.25;
        report.pass = false;
        report.tolerance_used = 1e-12;
        CHECK(report_line(report) == "decay_check,12,2,0.25,1e-12,false");
    }
}

TEST_SUITE("radial operator residual") {
    TEST_CASE("constants are harmonic") {
        const auto constant = [](double) { return 3.7; };
        CHECK(harmonicity_residual(constant, 3, 1.0, 1e-4) == 0.0);
    }

    TEST_CASE("known solutions pass, a non-solution fails") {
        // coth(rho) - 1 solves the d = 3 radial equation exactly.
        const auto exact3 = [](double x) { return std::cosh(x) / std::sinh(x) - 1.0; };
        CHECK(harmonicity_residual(exact3, 3, 1.0, 1e-4) < 1e-6);

        // log coth(rho/2) solves it for d = 2.
        const auto exact2 = [](double x) {
            return std::log(std::cosh(0.5 * x) / std::sinh(0.5 * x));
        };
        CHECK(harmonicity_residual(exact2, 2, 0.8, 1e-4) < 1e-6);

        const auto not_harmonic = [](double x) { return x * x; };
        CHECK(harmonicity_residual(not_harmonic, 3, 1.0, 1e-4) > 0.1);
    }

    TEST_CASE("kernel harmonicity over a grid") {
        const auto report = radial_harmonicity(3, 1.0, {0.5, 1.0, 2.0, 4.0}, 1e-4);
        CHECK(report.check_name == "radial_harmonicity");
        CHECK(report.d == 3);
        CHECK(report.pass);
        CHECK(report.max_residual < 1e-6);
        CHECK(report.tolerance_used == 1e-6);
        CHECK(report.grid.size() == 4);

        CHECK_THROWS_AS(radial_harmonicity(3, 1.0, {1.0}, 1e-6), DomainError);
        CHECK_THROWS_AS(radial_harmonicity(3, 1.0, {1.0}, 1e-2), DomainError);
        // rho = 10*h is the boundary: exactly admissible, anything below not.
        CHECK_NOTHROW(radial_harmonicity(3, 1.0, {1e-3}, 1e-4));
        CHECK_THROWS_AS(radial_harmonicity(3, 1.0, {9e-4}, 1e-4), DomainError);
    }
}

TEST_SUITE("delta normalization") {
    TEST_CASE("flux through geodesic spheres is one") {
        CHECK(std::abs(flux_unit(3, 1.0, 1.0) - 1.0) < 1e-8);
        CHECK(std::abs(flux_unit(2, 0.5, 0.1) - 1.0) < 1e-6);
        CHECK(std::abs(flux_unit(9, 2.0, 5.0) - 1.0) < 1e-6);
        CHECK_THROWS_AS(flux_unit(3, 1.0, 1e-4), DomainError);
    }

    TEST_CASE("flux report over a radius grid") {
        const auto report = flux_check(5, 2.0, {0.1, 1.0, 5.0});
        CHECK(report.check_name == "flux_unit");
        CHECK(report.pass);
        CHECK(report.max_residual < 1e-6);
    }
}

TEST_SUITE("euclidean matching near the pole") {
    TEST_CASE("log-dimension and power-dimension forms") {
        const auto flat = singularity_match(2, 1.0);
        CHECK(flat.check_name == "singularity_match");
        CHECK(flat.pass);
        CHECK(flat.tolerance_used == 1e-3);
        CHECK(flat.max_residual > 0.0);
        CHECK(flat.grid == std::vector<double>{1e-2, 1e-3, 1e-4});

        const auto five = singularity_match(5, 1.0);
        CHECK(five.pass);
        CHECK(five.tolerance_used == 1e-2);
        CHECK(five.max_residual < 1e-2);
    }
}

TEST_SUITE("decay at large separation") {
    TEST_CASE("kernel falls by twelve orders before rho = 30") {
        const auto report = decay_check(7, 1.0);
        CHECK(report.check_name == "decay_check");
        CHECK(report.pass);
        CHECK(report.max_residual < 1e-12);
        CHECK(report.grid == std::vector<double>{1.0, 10.0, 20.0, 30.0});
    }
}

TEST_SUITE("combined check runner") {
    TEST_CASE("all four checks execute and pass") {
        const auto reports = run_all_checks(4, 1.0);
        REQUIRE(reports.size() == 4);
        CHECK(reports[0].check_name == "radial_harmonicity");
        CHECK(reports[1].check_name == "flux_unit");
        CHECK(reports[2].check_name == "singularity_match");
        CHECK(reports[3].check_name == "decay_check");
        for (const auto& report : reports) {
            CAPTURE(report.check_name);
            CHECK(report.pass);
            CHECK(report.d == 4);
            CHECK(report.R == 1.0);
        }
    }
}
