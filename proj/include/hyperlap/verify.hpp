#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperlap/kernel.hpp"

namespace hyperlap {

// Outcome of one property check over a grid of radial points.
struct VerificationReport {
    std::string check_name;
    int d = 0;
    double R = 1.0;
    std::vector<double> grid;
    double max_residual = 0.0;
    bool pass = false;
    double tolerance_used = 0.0;
};

// Serializes a report as the line `check,d,R,max_residual,tolerance,pass`
// with shortest round-trip numbers and pass rendered as true/false.
std::string report_line(const VerificationReport& report);

// Residual of the radial Laplace operator applied to f at rho:
// |f'' + (d-1) coth(rho) f'| / |f''|, derivatives by central differences of
// step h.  Exposed so the operator itself can be exercised on functions with
// known behaviour (constants, exact solutions).
double harmonicity_residual(const std::function<double(double)>& f, int d,
                            double rho, double h);

// The kernel is radially harmonic away from the pole.  Applies the operator
// residual above to the kernel on the given grid (each rho >= 10*h,
// h in [1e-5, 1e-3]).  The finite-sum route backs the evaluations: its error
// is at rounding level and varies smoothly, which keeps the second
// difference clean.
VerificationReport radial_harmonicity(int d, double R,
                                      const std::vector<double>& rho_grid,
                                      double h, double tol = 1e-6);

// Outward flux of -grad(kernel) through the geodesic sphere of polar radius
// r: analytically exactly 1 for every (d, R, r) -- the delta normalization.
// Returned value uses a five-point difference for the radial derivative.
double flux_unit(int d, double R, double r);

// flux_unit over a grid of radii, reported against |flux - 1| <= tol.
VerificationReport flux_check(int d, double R, const std::vector<double>& r_grid,
                              double tol = 1e-6);

// Near the pole the kernel must match the flat-space fundamental solution:
// for d >= 3 the ratio tends to 1 (tolerance 1e-2 at rho = 1e-3); for d = 2
// the combination 2*pi*kernel + log(rho) tends to log(2) (tolerance 1e-3).
// The residual must also shrink monotonically over rho = 1e-2, 1e-3, 1e-4.
VerificationReport singularity_match(int d, double R);

// The kernel at rho of 10, 20, 30 is positive, strictly decreasing, and at
// rho = 30 smaller than 1e-12 times its value at rho = 1.
VerificationReport decay_check(int d, double R);

// All four checks for one (d, R); tol applies to the flux and harmonicity
// checks (the other two carry structural tolerances).
std::vector<VerificationReport> run_all_checks(int d, double R, double tol = 1e-6);

}  // namespace hyperlap
