#pragma once

#include <complex>
#include <cstddef>

namespace hyperlap {

// Parameters of the Gauss hypergeometric series 2F1(a, b; c; z).
struct Hyp2F1Params {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double z = 0.0;
};

// Argument of the equal-degree-and-order associated Legendre function of the
// second kind: degree = order = degree_order, evaluated at z > 1.
struct LegendreQArg {
    double degree_order = 0.0;
    double z = 2.0;
};

// Value of a truncated series together with the engine's own error estimate.
struct SeriesResult {
    double value = 0.0;
    double est_error = 0.0;
    std::size_t terms = 0;  // number of series terms accumulated
};

struct LegendreQResult {
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
};

// Gamma function for positive real arguments.  Relative error < 1e-13 on
// [0.5, 30]; throws DomainError for x <= 0.
double gamma_fn(double x);

// Double factorial n!! with the conventions (-1)!! = 0!! = 1.  Throws
// DomainError for n < -1.
double double_factorial(int n);

// Rising factorial (z)_n = z (z+1) ... (z+n-1); (z)_0 = 1.
double pochhammer(double z, int n);

// Gauss hypergeometric series for |z| < 1.  Terms are accumulated until the
// next term is below tol * |partial sum| three times in a row (a single small
// term can be deceptive for alternating patterns), capped at 100000 terms.
// Throws ConvergenceError carrying the last partial sum if the cap is hit.
SeriesResult gauss_2f1(const Hyp2F1Params& p, double tol);

// Associated Legendre function of the second kind with equal degree and order
// nu = mu = degree_order, for real argument z > 1, computed from its classical
// hypergeometric representation in complex arithmetic:
//
//   Q_nu^mu(z) = sqrt(pi) e^{i pi mu} Gamma(nu+mu+1) (z^2-1)^{mu/2}
//                / (2^{nu+1} Gamma(nu+3/2) z^{nu+mu+1})
//                * 2F1((nu+mu+2)/2, (nu+mu+1)/2; nu+3/2; 1/z^2).
//
// The phase e^{i pi mu} makes the value real for integer mu and purely
// imaginary for half-integer mu (up to roundoff); callers classify.
// degree_order must equal d/2 - 1 for an integer d in [2, 12].
LegendreQResult legendre_q_equal(const LegendreQArg& arg, double tol);

}  // namespace hyperlap
