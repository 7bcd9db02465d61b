#include "hyperlap/special.hpp"

#include <cmath>
#include <limits>

#include "hyperlap/errors.hpp"

namespace hyperlap {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr std::size_t kMaxSeriesTerms = 100000;
}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be positive");
    return std::tgamma(x);
}

double double_factorial(int n) {
    if (n < -1) throw DomainError("double_factorial: argument must be >= -1");
    double result = 1.0;
    for (int k = n; k > 1; k -= 2) result *= k;
    return result;
}

double pochhammer(double z, int n) {
    if (n < 0) throw DomainError("pochhammer: order must be >= 0");
    double result = 1.0;
    for (int i = 0; i < n; ++i) result *= z + i;
    return result;
}

SeriesResult gauss_2f1(const Hyp2F1Params& p, double tol) {
    if (!(std::abs(p.z) < 1.0))
        throw DomainError("gauss_2f1: series requires |z| < 1");
    if (p.c <= 0.0 && p.c == std::floor(p.c))
        throw DomainError("gauss_2f1: c must not be a non-positive integer");
    if (!(tol > 0.0)) throw DomainError("gauss_2f1: tolerance must be positive");

    double sum = 1.0;
    double term = 1.0;
    double ratio = 0.0;
    int consecutive_small = 0;
    std::size_t n = 0;
    for (; n < kMaxSeriesTerms; ++n) {
        const double dn = static_cast<double>(n);
        ratio = (p.a + dn) * (p.b + dn) / ((p.c + dn) * (dn + 1.0)) * p.z;
        term *= ratio;
        sum += term;
        // A term counts as below tolerance only when the geometric tail it
        // implies does: near z = 1 the tail is q/(1-q) times the term, a
        // factor that can reach the hundreds, so comparing the bare term
        // against tol would stop far short of the requested accuracy.
        double q_now = std::max(std::abs(p.z), std::abs(ratio));
        q_now = std::min(q_now, 1.0 - 1e-12);
        if (std::abs(term) * q_now / (1.0 - q_now) <= tol * std::abs(sum)) {
            if (++consecutive_small == 3) break;
        } else {
            consecutive_small = 0;
        }
    }

    const double eps = std::numeric_limits<double>::epsilon();
    // Geometric bound on the dropped tail: the term ratio tends to z, so use
    // the larger of |z| and the last observed ratio as the decay factor.
    double q = std::max(std::abs(p.z), std::abs(ratio));
    q = std::min(q, 1.0 - 1e-12);
    const double tail = std::abs(term) * q / (1.0 - q);
    const double roundoff = static_cast<double>(n + 1) * eps * std::abs(sum);

    if (consecutive_small < 3)
        throw ConvergenceError(
            "gauss_2f1: series did not converge within 100000 terms "
            "(z too close to 1 for these parameters)",
            sum, tail + roundoff);

    return {sum, tail + roundoff, n + 1};
}

LegendreQResult legendre_q_equal(const LegendreQArg& arg, double tol) {
    const double mu = arg.degree_order;
    const double nu = arg.degree_order;
    const double z = arg.z;
    if (!(z > 1.0))
        throw DomainError("legendre_q_equal: argument must exceed 1");
    const double d = 2.0 * (mu + 1.0);
    const double d_rounded = std::round(d);
    if (std::abs(d - d_rounded) > 1e-9 || d_rounded < 2.0 || d_rounded > 12.0)
        throw DomainError(
            "legendre_q_equal: degree and order must equal d/2 - 1 for an "
            "integer d in [2, 12]");

    const SeriesResult f = gauss_2f1(
        {0.5 * (nu + mu + 2.0), 0.5 * (nu + mu + 1.0), nu + 1.5, 1.0 / (z * z)},
        tol);

    // (z^2 - 1) is factored as (z - 1)(z + 1) to keep accuracy near z = 1.
    const double prefactor = std::sqrt(kPi) * gamma_fn(nu + mu + 1.0) *
                             std::pow((z - 1.0) * (z + 1.0), 0.5 * mu) /
                             (std::pow(2.0, nu + 1.0) * gamma_fn(nu + 1.5) *
                              std::pow(z, nu + mu + 1.0));
    const std::complex<double> phase = std::polar(1.0, kPi * mu);
    const std::complex<double> value = phase * (prefactor * f.value);
    const double est =
        prefactor * f.est_error + std::abs(value) * 4.0 * std::numeric_limits<double>::epsilon();
    return {value, est};
}

}  // namespace hyperlap
