#include "hyperlap/kernel.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "hyperlap/errors.hpp"
#include "hyperlap/quadrature.hpp"
#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_dim(int d) {
    if (d < kMinDim || d > kMaxDim)
        throw DomainError("dimension must lie in [2, 12]");
}

void check_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw DomainError("rho must be positive and finite");
}

double hyp_argument(double rho) {
    const double ch = std::cosh(rho);
    return 1.0 / (ch * ch);
}

}  // namespace

const char* route_name(EvalRoute route) {
    switch (route) {
        case EvalRoute::Quadrature: return "quadrature";
        case EvalRoute::FiniteSum: return "sum";
        case EvalRoute::Hyp2F1: return "hyp";
        case EvalRoute::Hyp2F1Euler: return "hyp_euler";
        case EvalRoute::LegendreQ: return "legendre";
        case EvalRoute::Auto: return "auto";
    }
    return "unknown";
}

EvalRoute route_from_name(const std::string& name) {
    for (EvalRoute r : {EvalRoute::Quadrature, EvalRoute::FiniteSum, EvalRoute::Hyp2F1,
                        EvalRoute::Hyp2F1Euler, EvalRoute::LegendreQ, EvalRoute::Auto})
        if (name == route_name(r)) return r;
    throw DomainError("unknown evaluation route: " + name);
}

bool route_available(EvalRoute route, int d, double rho) {
    if (d < kMinDim || d > kMaxDim || !(rho > 0.0) || !std::isfinite(rho)) return false;
    switch (route) {
        case EvalRoute::Quadrature:
            return rho >= kQuadratureRhoMin;
        case EvalRoute::FiniteSum:
            // Defer to the working-precision ceiling of the wide evaluation.
            return 25.0 + (d - 1) * rho * 0.4342944819032518 <= 395.0;
        case EvalRoute::Hyp2F1:
        case EvalRoute::Hyp2F1Euler:
            return hyp_argument(rho) <= kHypArgMax;
        case EvalRoute::LegendreQ:
            return rho >= kLegendreRhoMin;
        case EvalRoute::Auto:
            return true;
    }
    return false;
}

EvalResult i_quadrature(int d, double rho, double tol) {
    check_dim(d);
    check_rho(rho);
    if (!(tol > 0.0)) throw DomainError("i_quadrature: tolerance must be positive");
    if (rho < kQuadratureRhoMin)
        throw PreconditionError(
            "i_quadrature: rho below 1e-6 is too close to the singularity");

    // Substituting u = e^{-x} maps [rho, inf) to (0, e^{-rho}] and turns the
    // integrand into 2^{d-1} u^{d-2} / (1 - u^2)^{d-1}, finite on the whole
    // interval; (1 - u^2) is factored to keep accuracy near the upper end.
    const double scale = std::pow(2.0, d - 1);
    auto integrand = [d, scale](double u) {
        const double w = (1.0 - u) * (1.0 + u);
        return scale * std::pow(u, d - 2) / std::pow(w, d - 1);
    };
    const QuadratureResult q = integrate_adaptive(integrand, 0.0, std::exp(-rho), tol);
    return {q.value, EvalRoute::Quadrature, q.est_error, 0.0};
}

EvalResult i_hyp2f1(int d, double rho, bool euler_variant, double tol) {
    check_dim(d);
    check_rho(rho);
    const double z = hyp_argument(rho);
    if (z > kHypArgMax)
        throw PreconditionError(
            "i_hyp2f1: rho too small (series argument above 0.995); use the "
            "finite-sum or quadrature route");

    const double ch = std::cosh(rho);
    const SeriesResult plain =
        gauss_2f1({0.5 * (d - 1), 0.5 * d, 0.5 * (d + 1), z}, tol);
    const SeriesResult euler = gauss_2f1({0.5, 1.0, 0.5 * (d + 1), z}, tol);

    const double plain_scale = 1.0 / ((d - 1) * std::pow(ch, d - 1));
    const double euler_scale =
        1.0 / ((d - 1) * ch * std::pow(std::sinh(rho), d - 2));
    const double value_plain = plain.value * plain_scale;
    const double value_euler = euler.value * euler_scale;

    // The two variants are analytically identical; their numerical gap is a
    // free self-check and part of the error estimate.
    const double gap = std::abs(value_plain - value_euler);
    const double magnitude = std::max(std::abs(value_plain), std::abs(value_euler));
    if (gap > 10.0 * tol * magnitude + 1e-300)
        throw ConsistencyError(
            "i_hyp2f1: the two hypergeometric variants disagree beyond 10*tol");

    const double value = euler_variant ? value_euler : value_plain;
    const double est = (euler_variant ? euler.est_error * euler_scale
                                      : plain.est_error * plain_scale) +
                       gap;
    return {value, euler_variant ? EvalRoute::Hyp2F1Euler : EvalRoute::Hyp2F1, est, 0.0};
}

EvalResult i_legendre(int d, double rho, double tol) {
    check_dim(d);
    check_rho(rho);
    if (rho < kLegendreRhoMin)
        throw PreconditionError("i_legendre: rho below 0.1 for the Legendre route");

    const double alpha = 0.5 * d - 1.0;  // degree = order
    const LegendreQResult q = legendre_q_equal({alpha, std::cosh(rho)}, tol);

    // Combine with the conjugate phase; the product is analytically real, and
    // evaluating it in full complex arithmetic makes the leftover imaginary
    // part a measurable self-check instead of a silent assumption.
    const std::complex<double> phase = std::polar(1.0, -kPi * alpha);
    const double denom =
        std::pow(2.0, alpha) * gamma_fn(0.5 * d) * std::pow(std::sinh(rho), alpha);
    const std::complex<double> value_c = phase * q.value / denom;

    const double value = value_c.real();
    const double residue = std::abs(value_c.imag());
    if (residue >= 1e-10 * std::max(1.0, std::abs(value)))
        throw ConsistencyError(
            "i_legendre: non-negligible imaginary part after phase combination");
    return {value, EvalRoute::LegendreQ, q.est_error / denom + std::abs(value) * 4e-16,
            residue};
}

EvalResult i_eval(int d, double rho, EvalRoute route, double tol) {
    check_dim(d);
    check_rho(rho);
    if (route == EvalRoute::Auto)
        route = (rho < kAutoSwitchRho) ? EvalRoute::FiniteSum : EvalRoute::Hyp2F1;
    switch (route) {
        case EvalRoute::Quadrature: return i_quadrature(d, rho, tol);
        case EvalRoute::FiniteSum: return i_finite_sum(d, rho);
        case EvalRoute::Hyp2F1: return i_hyp2f1(d, rho, false, tol);
        case EvalRoute::Hyp2F1Euler: return i_hyp2f1(d, rho, true, tol);
        case EvalRoute::LegendreQ: return i_legendre(d, rho, tol);
        case EvalRoute::Auto: break;
    }
    throw DomainError("i_eval: unsupported route");
}

double normalization_constant(int d) {
    check_dim(d);
    return gamma_fn(0.5 * d) / (2.0 * std::pow(kPi, 0.5 * d));
}

EvalResult h_radial(const KernelParams& params, double rho, EvalRoute route) {
    validate_params(params);
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be positive");
    if (rho < params.rho_min)
        throw SingularityError("kernel evaluation inside the rho_min cutoff");

    EvalResult r = i_eval(params.d, rho, route, params.tol_rel);
    const double factor =
        normalization_constant(params.d) / std::pow(params.R, params.d - 2);
    r.value *= factor;
    r.est_error *= factor;
    return r;
}

EvalResult fundamental_solution(const KernelParams& params, const AmbientPoint& x,
                                const AmbientPoint& x2, EvalRoute route) {
    validate_params(params);
    const double rho = geodesic_distance(x, x2, params) / params.R;
    if (rho < params.rho_min)
        throw SingularityError("fundamental_solution: points coincide or nearly so");
    return h_radial(params, rho, route);
}

double euclidean_green(int d, double distance) {
    if (d < 1) throw DomainError("euclidean_green: dimension must be >= 1");
    if (!(distance > 0.0) || !std::isfinite(distance))
        throw SingularityError("euclidean_green: distance must be positive");
    if (d == 2) return std::log(1.0 / distance) / (2.0 * kPi);
    return std::tgamma(0.5 * d) / (2.0 * std::pow(kPi, 0.5 * d) * (d - 2)) *
           std::pow(distance, 2.0 - d);
}

double i_recurrence_check(int d, double rho) {
    if (d < 4 || d > kMaxDim)
        throw DomainError("i_recurrence_check: dimension must lie in [4, 12]");
    check_rho(rho);
    const double i_d = i_eval(d, rho, EvalRoute::Auto, kDefaultTol).value;
    const double i_lower = i_eval(d - 2, rho, EvalRoute::Auto, kDefaultTol).value;
    const double sh = std::sinh(rho);
    const double boundary = std::cosh(rho) / ((d - 2) * std::pow(sh, d - 2));
    return std::abs(i_d - (boundary - (d - 3.0) / (d - 2.0) * i_lower));
}

double small_rho_asymptotic(int d, double rho) {
    check_dim(d);
    if (!(rho > 0.0 && rho <= 0.01))
        throw DomainError("small_rho_asymptotic: rho must lie in (0, 0.01]");
    if (d == 2) return -std::log(rho);
    return std::pow(rho, 2.0 - d) / (d - 2);
}

}  // namespace hyperlap
