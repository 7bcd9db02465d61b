#pragma once

#include <string>

#include "hyperlap/geometry.hpp"

namespace hyperlap {

// The radial profile of the kernel is
//
//   I_d(rho) = integral over [rho, inf) of sinh(x)^(1-d) dx,
//
// computable by four independent representations.  Every route must agree
// with every other inside their shared validity region; that mutual
// agreement is the library's core correctness property.
enum class EvalRoute {
    Quadrature,   // adaptive integration after the substitution u = e^{-x}
    FiniteSum,    // closed-form elementary sums (wide arithmetic internally)
    Hyp2F1,       // hypergeometric series in 1/cosh^2(rho)
    Hyp2F1Euler,  // the transformed hypergeometric variant
    LegendreQ,    // associated Legendre function of the second kind
    Auto,         // FiniteSum below rho = 0.5, Hyp2F1 at or above
};

// CLI/CSV name of a route: "quadrature", "sum", "hyp", "hyp_euler",
// "legendre", "auto".
const char* route_name(EvalRoute route);
EvalRoute route_from_name(const std::string& name);  // throws DomainError

struct EvalResult {
    double value = 0.0;
    EvalRoute route = EvalRoute::Auto;
    double est_error = 0.0;     // absolute error estimate, always finite
    double imag_residue = 0.0;  // leftover imaginary part (LegendreQ route only)
};

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 12;
inline constexpr double kDefaultTol = 1e-12;
// Route validity bounds.
inline constexpr double kQuadratureRhoMin = 1e-6;
inline constexpr double kHypArgMax = 0.995;  // largest allowed 1/cosh^2(rho)
inline constexpr double kLegendreRhoMin = 0.1;
inline constexpr double kAutoSwitchRho = 0.5;

// True if the route accepts (d, rho); evaluation outside these bounds raises
// PreconditionError instead of silently substituting another route.
bool route_available(EvalRoute route, int d, double rho);

// The four representations of I_d(rho).
EvalResult i_quadrature(int d, double rho, double tol);
EvalResult i_finite_sum(int d, double rho);
EvalResult i_hyp2f1(int d, double rho, bool euler_variant, double tol);
EvalResult i_legendre(int d, double rho, double tol);

// Dispatch through the route enum; Auto resolves per kAutoSwitchRho.
EvalResult i_eval(int d, double rho, EvalRoute route, double tol);

// Normalization Gamma(d/2) / (2 pi^{d/2}); fixed by matching the rho -> 0
// singularity to the flat-space fundamental solution, and exactly the
// reciprocal of the unit-sphere surface area.
double normalization_constant(int d);

// Kernel value as a function of the scaled radial separation rho =
// distance / R:  normalization_constant(d) / R^{d-2} * I_d(rho).
// Throws SingularityError for rho < params.rho_min.
EvalResult h_radial(const KernelParams& params, double rho, EvalRoute route);

// Kernel value for two ambient points on the sheet.
EvalResult fundamental_solution(const KernelParams& params, const AmbientPoint& x,
                                const AmbientPoint& x2, EvalRoute route);

// Flat-space fundamental solution of -Laplace at the given distance:
// log(1/distance)/(2 pi) for d = 2, else
// Gamma(d/2) / (2 pi^{d/2} (d-2)) * distance^{2-d} (valid for d = 1 too,
// where the negative prefactor gives -distance/2).
double euclidean_green(int d, double distance);

// Residual |I_d(rho) - [cosh(rho)/((d-2) sinh^{d-2}(rho))
//                       - (d-3)/(d-2) * I_{d-2}(rho)]|
// of the dimension-lowering recurrence, both profiles via the Auto route.
double i_recurrence_check(int d, double rho);

// Leading small-rho behaviour of I_d: -log(rho) for d = 2, else
// rho^{2-d}/(d-2).  Valid for 0 < rho <= 0.01.
double small_rho_asymptotic(int d, double rho);

}  // namespace hyperlap
