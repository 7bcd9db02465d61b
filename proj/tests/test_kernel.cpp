#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hyperlap/errors.hpp"
#include "hyperlap/kernel.hpp"

using namespace hyperlap;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

struct ProfileOracle {
    int d;
    double rho;
    double value;
};

// Reference values of the radial profile, frozen from 50-digit arithmetic.
const std::vector<ProfileOracle> kProfileOracles = {
    {2, 0.3, 1.9045808572833737983}, {2, 1.0, 0.77193683290530472507},
    {2, 3.0, 0.099656532516443645298},
    {3, 0.3, 2.4327384303217415895}, {3, 1.0, 0.31303528549933130364},
    {3, 3.0, 0.0049698233136891710932},
    {4, 0.3, 4.6840144485529461386}, {4, 1.0, 0.17267434727198472321},
    {4, 3.0, 0.00033056635826412530024},
    {5, 0.3, 10.717373656987830329}, {5, 1.0, 0.10821597957578562816},
    {5, 3.0, 0.000024740060562799336495},
    {6, 0.3, 26.877080257819981084}, {6, 1.0, 0.07274014324064688798},
    {6, 3.0, 1.9752071357978242484e-6},
    {7, 0.3, 71.263384167031417595}, {7, 1.0, 0.051102980992098910463},
    {7, 3.0, 1.6427782811248886107e-7},
};

}  // namespace

TEST_SUITE("route naming") {
    TEST_CASE("names round-trip through the parser") {
        for (EvalRoute r : {EvalRoute::Quadrature, EvalRoute::FiniteSum,
                            EvalRoute::Hyp2F1, EvalRoute::Hyp2F1Euler,
                            EvalRoute::LegendreQ, EvalRoute::Auto})
            CHECK(route_from_name(route_name(r)) == r);
        CHECK(route_from_name("sum") == EvalRoute::FiniteSum);
        CHECK_THROWS_AS(route_from_name("simpson"), DomainError);
    }
}

TEST_SUITE("radial profile routes") {
    TEST_CASE("every route reproduces the frozen reference values") {
        for (const auto& oracle : kProfileOracles) {
            CAPTURE(oracle.d);
            CAPTURE(oracle.rho);
            CHECK(rel_err(i_quadrature(oracle.d, oracle.rho, 1e-13).value,
                          oracle.value) < 1e-10);
            CHECK(rel_err(i_finite_sum(oracle.d, oracle.rho).value, oracle.value) <
                  1e-12);
            CHECK(rel_err(i_hyp2f1(oracle.d, oracle.rho, false, 1e-12).value,
                          oracle.value) < 1e-10);
            CHECK(rel_err(i_hyp2f1(oracle.d, oracle.rho, true, 1e-12).value,
                          oracle.value) < 1e-10);
            CHECK(rel_err(i_legendre(oracle.d, oracle.rho, 1e-12).value,
                          oracle.value) < 1e-9);
        }
    }

    TEST_CASE("finite sums stay exact in the deep cancellation regime") {
        // d = 2 at rho = 30 loses ~13 digits to cancellation in double
        // arithmetic; the wide evaluation must not.
        CHECK(rel_err(i_finite_sum(2, 30.0).value, 1.871524593768034920983166e-13) <
              1e-12);
        // d = 12 at rho = 10 needs the middle working precision.
        CHECK(rel_err(i_finite_sum(12, 10.0).value, 3.144446906415670064353136e-46) <
              1e-12);

        const EvalResult r = i_finite_sum(5, 1.0);
        CHECK(std::abs(r.value - 0.10821597957578562816) <=
              r.est_error + 1e-16 * r.value);
    }

    TEST_CASE("error estimates are honest against the references") {
        for (const auto& oracle : kProfileOracles) {
            const auto q = i_quadrature(oracle.d, oracle.rho, 1e-13);
            CHECK(std::abs(q.value - oracle.value) <=
                  q.est_error + 1e-13 * std::abs(oracle.value));
            const auto h = i_hyp2f1(oracle.d, oracle.rho, false, 1e-12);
            CHECK(std::abs(h.value - oracle.value) <=
                  h.est_error + 1e-12 * std::abs(oracle.value));
        }
    }

    TEST_CASE("imaginary residue of the legendre route is negligible") {
        for (int d = 2; d <= 12; ++d) {
            const auto r = i_legendre(d, 1.5, 1e-12);
            CHECK(r.imag_residue < 1e-10 * std::max(1.0, std::abs(r.value)));
        }
    }
}

TEST_SUITE("route availability and dispatch") {
    TEST_CASE("availability bounds") {
        CHECK_FALSE(route_available(EvalRoute::Quadrature, 3, 1e-7));
        CHECK(route_available(EvalRoute::Quadrature, 3, 1e-6));

        CHECK_FALSE(route_available(EvalRoute::FiniteSum, 3, 0.0));
        CHECK(route_available(EvalRoute::FiniteSum, 3, 1e-8));
        CHECK(route_available(EvalRoute::FiniteSum, 12, 10.0));
        CHECK_FALSE(route_available(EvalRoute::FiniteSum, 12, 90.0));

        CHECK_FALSE(route_available(EvalRoute::Hyp2F1, 3, 0.06));
        CHECK(route_available(EvalRoute::Hyp2F1, 3, 0.08));
        CHECK_FALSE(route_available(EvalRoute::Hyp2F1Euler, 3, 0.06));
        CHECK(route_available(EvalRoute::Hyp2F1Euler, 3, 0.08));

        CHECK_FALSE(route_available(EvalRoute::LegendreQ, 3, 0.09));
        CHECK(route_available(EvalRoute::LegendreQ, 3, 0.1));

        CHECK_FALSE(route_available(EvalRoute::Quadrature, 13, 1.0));
        CHECK_FALSE(route_available(EvalRoute::Quadrature, 1, 1.0));
    }

    TEST_CASE("auto resolution switches at the seam") {
        CHECK(i_eval(3, 0.4, EvalRoute::Auto, 1e-12).route == EvalRoute::FiniteSum);
        CHECK(i_eval(3, 0.6, EvalRoute::Auto, 1e-12).route == EvalRoute::Hyp2F1);
        // The two sides agree across the seam.
        const double below = i_eval(3, 0.4999999, EvalRoute::Auto, 1e-12).value;
        const double above = i_eval(3, 0.5000001, EvalRoute::Auto, 1e-12).value;
        CHECK(std::abs(below - above) < 1e-5 * below);
    }

    TEST_CASE("out-of-precondition evaluation raises") {
        CHECK_THROWS_AS(i_quadrature(3, 1e-7, 1e-12), PreconditionError);
        CHECK_THROWS_AS(i_hyp2f1(3, 0.05, false, 1e-12), PreconditionError);
        CHECK_THROWS_AS(i_legendre(3, 0.05, 1e-12), PreconditionError);
        CHECK_THROWS_AS(i_finite_sum(12, 90.0), PreconditionError);
        CHECK_THROWS_AS(i_finite_sum(3, 0.0), DomainError);
        CHECK_THROWS_AS(i_eval(13, 1.0, EvalRoute::Auto, 1e-12), DomainError);
        CHECK_THROWS_AS(i_eval(3, -1.0, EvalRoute::Auto, 1e-12), DomainError);
        CHECK_THROWS_AS(i_quadrature(3, 1.0, 0.0), DomainError);
    }
}

TEST_SUITE("kernel normalization") {
    TEST_CASE("normalization constant equals the frozen references") {
        CHECK(rel_err(normalization_constant(2), 0.1591549430918953357688838) < 1e-14);
        CHECK(rel_err(normalization_constant(3), 0.07957747154594766788444188) < 1e-14);
        CHECK(rel_err(normalization_constant(4), 0.05066059182116888572193973) < 1e-14);
        CHECK(rel_err(normalization_constant(5), 0.0379954438658766642914548) < 1e-14);
        CHECK(rel_err(normalization_constant(12), 0.06240968839775113776539026) < 1e-14);
        CHECK_THROWS_AS(normalization_constant(1), DomainError);
    }

    TEST_CASE("kernel value and scaling in R") {
        const double rho = 0.6931471805599453094172321;  // log 2
        const KernelParams unit{3, 1.0, 1e-12, 1e-6};
        const auto h = h_radial(unit, rho, EvalRoute::Quadrature);
        CHECK(rel_err(h.value, 0.05305164769729844525629459) < 1e-10);
        CHECK(h.est_error > 0.0);

        const KernelParams doubled{3, 2.0, 1e-12, 1e-6};
        const auto h2 = h_radial(doubled, rho, EvalRoute::Quadrature);
        CHECK(rel_err(2.0 * h2.value, h.value) < 1e-14);

        // d = 2 carries no R power at all.
        const KernelParams flat1{2, 1.0, 1e-12, 1e-6};
        const KernelParams flat3{2, 3.0, 1e-12, 1e-6};
        CHECK(h_radial(flat1, 1.0, EvalRoute::FiniteSum).value ==
              h_radial(flat3, 1.0, EvalRoute::FiniteSum).value);

        CHECK_THROWS_AS(h_radial(unit, 1e-8, EvalRoute::FiniteSum), SingularityError);
    }

    TEST_CASE("ambient-point evaluation matches the radial form") {
        const KernelParams params{3, 1.0, 1e-12, 1e-6};
        const AmbientPoint pole{{1.0, 0.0, 0.0, 0.0}};
        const auto moved =
            from_geodesic_polar(GeodesicPolar{1.0, {0.7}, 2.1}, params);
        const auto via_points =
            fundamental_solution(params, pole, moved, EvalRoute::Auto);
        const auto via_rho = h_radial(params, 1.0, EvalRoute::Auto);
        CHECK(rel_err(via_points.value, via_rho.value) < 1e-12);
        CHECK_THROWS_AS(fundamental_solution(params, pole, pole, EvalRoute::Auto),
                        SingularityError);
    }
}

TEST_SUITE("flat-space reference solution") {
    TEST_CASE("frozen values and scaling") {
        CHECK(rel_err(euclidean_green(3, 2.0), 0.03978873577297383394222094) < 1e-14);
        CHECK(rel_err(euclidean_green(2, 0.5), 0.1103178000763257966982282) < 1e-14);
        CHECK(rel_err(euclidean_green(1, 3.0), -1.5) < 1e-14);
        CHECK(euclidean_green(2, 1.0) == 0.0);
        // r^{d-2} * G is constant in r for d >= 3.
        const double a = euclidean_green(5, 0.3) * std::pow(0.3, 3);
        const double b = euclidean_green(5, 1.7) * std::pow(1.7, 3);
        CHECK(rel_err(a, b) < 1e-13);
        CHECK_THROWS_AS(euclidean_green(3, 0.0), SingularityError);
        CHECK_THROWS_AS(euclidean_green(0, 1.0), DomainError);
    }
}

TEST_SUITE("dimension recurrence") {
    TEST_CASE("residual is at rounding scale") {
        for (int d : {4, 5, 8, 12})
            for (double rho : {0.3, 0.7, 1.0, 3.0}) {
                CAPTURE(d);
                CAPTURE(rho);
                CHECK(i_recurrence_check(d, rho) < 1e-9);
            }
        CHECK_THROWS_AS(i_recurrence_check(3, 1.0), DomainError);
        CHECK_THROWS_AS(i_recurrence_check(13, 1.0), DomainError);
    }
}

TEST_SUITE("small-separation behaviour") {
    TEST_CASE("leading asymptotic form") {
        CHECK(rel_err(small_rho_asymptotic(2, 1e-3), 6.907755278982137052) < 1e-14);
        CHECK(rel_err(small_rho_asymptotic(5, 0.01), 1e6 / 3.0) < 1e-14);
        // The profile approaches the asymptotic from above as rho shrinks.
        CHECK(rel_err(i_finite_sum(3, 1e-3).value / small_rho_asymptotic(3, 1e-3),
                      1.0) < 1e-2);
        CHECK_THROWS_AS(small_rho_asymptotic(3, 0.02), DomainError);
        CHECK_THROWS_AS(small_rho_asymptotic(3, 0.0), DomainError);
    }
}
