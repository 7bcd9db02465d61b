#pragma once

#include <vector>

namespace hyperlap {

// Point of the ambient pseudo-Euclidean space, coords = (x0, x1, ..., xd).
// The model surface is the upper sheet { [x,x] = R^2, x0 > 0 } where [ , ]
// is the indefinite bilinear form below.
struct AmbientPoint {
    std::vector<double> coords;

    int dim() const { return static_cast<int>(coords.size()) - 1; }
};

// Geodesic polar coordinates about the point (R, 0, ..., 0): radial
// parameter r >= 0, polar angles theta_1..theta_{d-2} in [0, pi], and
// azimuth phi in [0, 2*pi).  For d = 2 the theta list is empty and the
// coordinates degenerate to (r, phi).
struct GeodesicPolar {
    double r = 0.0;
    std::vector<double> theta;
    double phi = 0.0;

    int dim() const { return static_cast<int>(theta.size()) + 2; }
};

// Shared evaluation parameters: dimension d in [2, 12], radius R > 0, the
// relative tolerance used for consistency checks, and the radial cutoff
// below which kernel evaluation refuses to approach the singularity.
struct KernelParams {
    int d = 3;
    double R = 1.0;
    double tol_rel = 1e-10;
    double rho_min = 1e-6;
};

// Linear isometry of the ambient space, stored as a dense (d+1) x (d+1)
// matrix acting on coordinate vectors.
class LorentzTransform {
public:
    explicit LorentzTransform(int d);  // identity

    AmbientPoint operator()(const AmbientPoint& x) const;

    double& at(int i, int j) { return m_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return m_[static_cast<std::size_t>(i) * n_ + j]; }
    int dim() const { return static_cast<int>(n_) - 1; }

private:
    std::size_t n_;           // d + 1
    std::vector<double> m_;   // row-major
};

// Throws DomainError unless d in [2, 12], R > 0, tol_rel > 0, rho_min > 0.
void validate_params(const KernelParams& params);

// Indefinite bilinear form x0*y0 - x1*y1 - ... - xd*yd.
double bilinear_form(const AmbientPoint& x, const AmbientPoint& y);

// Ordinary dot product x0*y0 + ... + xd*yd.
double euclidean_inner(const AmbientPoint& x, const AmbientPoint& y);

// Geodesic distance R * arcosh([x,x2]/R^2) between two points of the same
// upper sheet.  The arcosh argument is clamped to 1 when within
// max(100*tol_rel, 1e-10) of it; an argument smaller than that margin means
// the points do not lie on a common hyperboloid and raises DomainError.
// Separations below ~sqrt(2e-10)*R are therefore reported as 0: the ambient
// bilinear form cannot resolve them anyway, and near-field behaviour is the
// job of small_rho_asymptotic.
double geodesic_distance(const AmbientPoint& x, const AmbientPoint& x2,
                         const KernelParams& params);

// Embeds polar coordinates: x0 = R cosh r, then the angular chain
// x_k = R sinh r * cos(theta_k) * prod_{j<k} sin(theta_j), ending with the
// cos(phi)/sin(phi) pair.  The result satisfies [x,x] = R^2 up to rounding.
AmbientPoint from_geodesic_polar(const GeodesicPolar& p, const KernelParams& params);

// Inverse of from_geodesic_polar.  At the pole (r <= rho_min) all angles are
// returned as 0 by convention; a point with x0 below R raises DomainError.
GeodesicPolar to_geodesic_polar(const AmbientPoint& x, const KernelParams& params);

// Angle gamma in [0, pi] between the angular parts of two polar points:
// cos(gamma) = cos(phi - phi') prod_i sin(theta_i) sin(theta_i')
//            + sum_i cos(theta_i) cos(theta_i') prod_{j<i} sin(theta_j) sin(theta_j').
double separation_angle(const GeodesicPolar& p, const GeodesicPolar& p2);

// Geodesic distance between polar points (r, .) and (r2, .) whose angular
// parts subtend the angle gamma: R * arcosh(cosh r cosh r2 -
// sinh r sinh r2 cos gamma), evaluated in a cancellation-free arrangement.
double geodesic_distance_polar(double r, double r2, double gamma,
                               const KernelParams& params);

// Isometry that maps x to the pole (R, 0, ..., 0): a spatial rotation
// aligning x's spatial part with the first axis, followed by a hyperbolic
// rotation in the (x0, x1) plane.  Preserves the bilinear form.
LorentzTransform boost_to_origin(const AmbientPoint& x);

// arcosh(1 + u) = log1p(u + sqrt(u*(u + 2))), accurate for small u where the
// naive arcosh cancels catastrophically.
double acosh1p(double u);

}  // namespace hyperlap
