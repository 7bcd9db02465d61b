#include "hyperlap/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hyperlap/errors.hpp"
#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLog2 = 0.69314718055994530941723212145817657;

std::string shortest(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

// Kernel as a plain function of rho, on the route whose evaluations are
// exact to rounding (wide-arithmetic sums): finite differencing amplifies
// any evaluation noise by 1/h^2, so truncation-level routes would drown the
// residual.
std::function<double(double)> radial_kernel(int d, double R) {
    KernelParams params{d, R, 1e-12, 1e-7};
    return [params](double rho) {
        return h_radial(params, rho, EvalRoute::FiniteSum).value;
    };
}

}  // namespace

std::string report_line(const VerificationReport& report) {
    return report.check_name + "," + std::to_string(report.d) + "," +
           shortest(report.R) + "," + shortest(report.max_residual) + "," +
           shortest(report.tolerance_used) + "," + (report.pass ? "true" : "false");
}

double harmonicity_residual(const std::function<double(double)>& f, int d,
                            double rho, double h) {
    const double fp = f(rho + h);
    const double fm = f(rho - h);
    const double f0 = f(rho);
    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    const double residual = std::abs(d2 + (d - 1) / std::tanh(rho) * d1);
    const double denom = std::abs(d2);
    if (denom == 0.0) return residual;  // e.g. constants: residual is exactly 0
    return residual / denom;
}

VerificationReport radial_harmonicity(int d, double R,
                                      const std::vector<double>& rho_grid,
                                      double h, double tol) {
    if (!(h >= 1e-5 && h <= 1e-3))
        throw DomainError("radial_harmonicity: step must lie in [1e-5, 1e-3]");
    for (double rho : rho_grid)
        if (!(rho >= 10.0 * h))
            throw DomainError("radial_harmonicity: every rho must be >= 10*h");

    const auto f = radial_kernel(d, R);
    double max_residual = 0.0;
    for (double rho : rho_grid)
        max_residual = std::max(max_residual, harmonicity_residual(f, d, rho, h));

    return {"radial_harmonicity", d, R, rho_grid, max_residual,
            max_residual <= tol, tol};
}

double flux_unit(int d, double R, double r) {
    const double h = 1e-4 * std::max(1.0, r);
    if (!(r > 2.5 * h))
        throw DomainError("flux_unit: radius too small for the difference stencil");

    const auto f = radial_kernel(d, R);
    // Five-point central difference: truncation is far below the 1e-6 budget,
    // so the result is limited by rounding alone.
    const double derivative =
        (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) /
        (12.0 * h);
    const double area = std::pow(R, d - 1) * std::pow(std::sinh(r), d - 1) * 2.0 *
                        std::pow(kPi, 0.5 * d) / gamma_fn(0.5 * d);
    // d/d(distance) = (1/R) d/d(rho); the flux of -grad through the sphere.
    return -(derivative / R) * area;
}

VerificationReport flux_check(int d, double R, const std::vector<double>& r_grid,
                              double tol) {
    double max_residual = 0.0;
    for (double r : r_grid)
        max_residual = std::max(max_residual, std::abs(flux_unit(d, R, r) - 1.0));
    return {"flux_unit", d, R, r_grid, max_residual, max_residual <= tol, tol};
}

VerificationReport singularity_match(int d, double R) {
    const auto f = radial_kernel(d, R);
    const std::vector<double> grid{1e-2, 1e-3, 1e-4};

    auto residual_at = [&](double rho) {
        if (d == 2) return std::abs(2.0 * kPi * f(rho) + std::log(rho) - kLog2);
        return std::abs(f(rho) / euclidean_green(d, R * rho) - 1.0);
    };

    const double r_coarse = residual_at(grid[0]);
    const double r_mid = residual_at(grid[1]);
    const double r_fine = residual_at(grid[2]);

    const double tol = (d == 2) ? 1e-3 : 1e-2;
    const bool shrinks = r_coarse > r_mid && r_mid > r_fine;
    return {"singularity_match", d, R, grid, r_mid, r_mid <= tol && shrinks, tol};
}

VerificationReport decay_check(int d, double R) {
    KernelParams params{d, R, 1e-12, 1e-6};
    const std::vector<double> grid{1.0, 10.0, 20.0, 30.0};
    std::vector<double> values;
    values.reserve(grid.size());
    for (double rho : grid)
        values.push_back(h_radial(params, rho, EvalRoute::Auto).value);

    bool positive_decreasing = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0)) positive_decreasing = false;
        if (i > 0 && !(values[i] < values[i - 1])) positive_decreasing = false;
    }
    const double ratio = values.back() / values.front();
    const double tol = 1e-12;
    return {"decay_check", d, R, grid, ratio, positive_decreasing && ratio < tol, tol};
}

std::vector<VerificationReport> run_all_checks(int d, double R, double tol) {
    std::vector<double> harmonicity_grid;
    for (int i = 0; i < 19; ++i) harmonicity_grid.push_back(0.5 + 0.25 * i);

    return {
        radial_harmonicity(d, R, harmonicity_grid, 1e-4, tol),
        flux_check(d, R, {0.1, 1.0, 5.0}, tol),
        singularity_match(d, R),
        decay_check(d, R),
    };
}

}  // namespace hyperlap
