#include "hyperlap/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlap/errors.hpp"

namespace hyperlap {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

void check_same_dim(const AmbientPoint& x, const AmbientPoint& y) {
    if (x.coords.size() != y.coords.size())
        throw DomainError("ambient points have different dimensions");
}

void check_point_dim(int d) {
    if (d < 2) throw DomainError("ambient dimension must be at least 2");
}

}  // namespace

void validate_params(const KernelParams& params) {
    if (params.d < 2 || params.d > 12)
        throw DomainError("params: dimension must lie in [2, 12]");
    if (!(params.R > 0.0)) throw DomainError("params: radius must be positive");
    if (!(params.tol_rel > 0.0)) throw DomainError("params: tol_rel must be positive");
    if (!(params.rho_min > 0.0)) throw DomainError("params: rho_min must be positive");
}

double acosh1p(double u) {
    if (!(u >= 0.0)) throw DomainError("acosh1p: argument must be >= 0");
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

double bilinear_form(const AmbientPoint& x, const AmbientPoint& y) {
    check_same_dim(x, y);
    if (x.coords.empty()) throw DomainError("empty ambient point");
    double s = x.coords[0] * y.coords[0];
    for (std::size_t i = 1; i < x.coords.size(); ++i) s -= x.coords[i] * y.coords[i];
    return s;
}

double euclidean_inner(const AmbientPoint& x, const AmbientPoint& y) {
    check_same_dim(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.coords.size(); ++i) s += x.coords[i] * y.coords[i];
    return s;
}

double geodesic_distance(const AmbientPoint& x, const AmbientPoint& x2,
                         const KernelParams& params) {
    validate_params(params);
    check_same_dim(x, x2);
    if (x.dim() != params.d) throw DomainError("point dimension does not match params");

    const double R2 = params.R * params.R;
    // One shared margin for the on-sheet check and the arcosh clamp: a pair
    // passing the former can then never trip the "below 1" error merely from
    // the same representation noise.
    const double tol = std::max(100.0 * params.tol_rel, 1e-10);
    for (const AmbientPoint* p : {&x, &x2}) {
        if (std::abs(bilinear_form(*p, *p) / R2 - 1.0) > tol || p->coords[0] <= 0.0)
            throw DomainError("point does not lie on the upper sheet of radius R");
    }

    const double t = bilinear_form(x, x2) / R2;
    if (t < 1.0 - tol)
        throw DomainError("points do not lie on a common hyperboloid (arcosh argument < 1)");
    return params.R * acosh1p(std::max(t - 1.0, 0.0));
}

AmbientPoint from_geodesic_polar(const GeodesicPolar& p, const KernelParams& params) {
    validate_params(params);
    const int d = p.dim();
    if (d != params.d) throw DomainError("polar dimension does not match params");
    if (!(p.r >= 0.0) || !std::isfinite(p.r))
        throw DomainError("polar radial parameter must be finite and >= 0");
    for (double t : p.theta)
        if (!(t >= 0.0 && t <= kPi)) throw DomainError("polar angle outside [0, pi]");
    if (!(p.phi >= 0.0 && p.phi < kTwoPi)) throw DomainError("azimuth outside [0, 2*pi)");

    AmbientPoint x;
    x.coords.assign(static_cast<std::size_t>(d) + 1, 0.0);
    x.coords[0] = params.R * std::cosh(p.r);
    double prefix = params.R * std::sinh(p.r);
    for (std::size_t i = 0; i < p.theta.size(); ++i) {
        x.coords[i + 1] = prefix * std::cos(p.theta[i]);
        prefix *= std::sin(p.theta[i]);
    }
    x.coords[static_cast<std::size_t>(d) - 1] = prefix * std::cos(p.phi);
    x.coords[static_cast<std::size_t>(d)] = prefix * std::sin(p.phi);
    return x;
}

GeodesicPolar to_geodesic_polar(const AmbientPoint& x, const KernelParams& params) {
    validate_params(params);
    const int d = x.dim();
    check_point_dim(d);
    if (d != params.d) throw DomainError("point dimension does not match params");

    const double x0r = x.coords[0] / params.R;
    if (x0r < 1.0 - 1e-9)
        throw DomainError("point lies below the upper sheet (x0 < R)");

    GeodesicPolar p;
    p.theta.assign(static_cast<std::size_t>(d) - 2, 0.0);
    p.r = acosh1p(std::max(x0r - 1.0, 0.0));
    if (p.r <= params.rho_min) return p;  // angles undefined at the pole: all 0

    // Suffix norms of the spatial part: suffix[j] = |(x_j, ..., x_d)|.
    std::vector<double> suffix(x.coords.size() + 1, 0.0);
    for (std::size_t j = x.coords.size(); j-- > 1;)
        suffix[j] = std::hypot(x.coords[j], suffix[j + 1]);

    for (std::size_t k = 0; k < p.theta.size(); ++k)
        p.theta[k] = std::atan2(suffix[k + 2], x.coords[k + 1]);
    double phi = std::atan2(x.coords[static_cast<std::size_t>(d)],
                            x.coords[static_cast<std::size_t>(d) - 1]);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
    p.phi = phi;
    return p;
}

double separation_angle(const GeodesicPolar& p, const GeodesicPolar& p2) {
    if (p.dim() != p2.dim()) throw DomainError("polar points have different dimensions");
    double sum = 0.0;
    double sin_prefix = 1.0;
    for (std::size_t i = 0; i < p.theta.size(); ++i) {
        sum += sin_prefix * std::cos(p.theta[i]) * std::cos(p2.theta[i]);
        sin_prefix *= std::sin(p.theta[i]) * std::sin(p2.theta[i]);
    }
    const double cg = std::cos(p.phi - p2.phi) * sin_prefix + sum;
    return std::acos(std::clamp(cg, -1.0, 1.0));
}

double geodesic_distance_polar(double r, double r2, double gamma,
                               const KernelParams& params) {
    validate_params(params);
    if (!(r >= 0.0) || !(r2 >= 0.0))
        throw DomainError("radial parameters must be >= 0");
    if (!(gamma >= 0.0 && gamma <= kPi + 1e-12))
        throw DomainError("separation angle outside [0, pi]");

    // cosh(r)cosh(r2) - sinh(r)sinh(r2)cos(gamma) - 1 rearranged so nothing
    // cancels: 2 sinh^2((r-r2)/2) + 2 sinh(r) sinh(r2) sin^2(gamma/2).
    const double sh = std::sinh(0.5 * (r - r2));
    const double sg = std::sin(0.5 * gamma);
    const double u = 2.0 * sh * sh + 2.0 * std::sinh(r) * std::sinh(r2) * sg * sg;
    return params.R * acosh1p(u);
}

LorentzTransform::LorentzTransform(int d)
    : n_(static_cast<std::size_t>(d) + 1), m_(n_ * n_, 0.0) {
    if (d < 1) throw DomainError("transform dimension must be at least 1");
    for (std::size_t i = 0; i < n_; ++i) m_[i * n_ + i] = 1.0;
}

AmbientPoint LorentzTransform::operator()(const AmbientPoint& x) const {
    if (x.coords.size() != n_)
        throw DomainError("transform and point dimensions differ");
    AmbientPoint y;
    y.coords.assign(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += m_[i * n_ + j] * x.coords[j];
        y.coords[i] = s;
    }
    return y;
}

LorentzTransform boost_to_origin(const AmbientPoint& x) {
    const int d = x.dim();
    check_point_dim(d);
    const double q = bilinear_form(x, x);
    if (!(q > 0.0) || !(x.coords[0] > 0.0))
        throw DomainError("boost_to_origin: point is not on an upper sheet");
    const double R = std::sqrt(q);

    const std::size_t n = static_cast<std::size_t>(d) + 1;

    // Spatial norm |v| of v = (x1, ..., xd).
    double s = 0.0;
    for (std::size_t i = 1; i < n; ++i) s = std::hypot(s, x.coords[i]);

    // Rotation block: reflect v onto the first spatial axis with a
    // Householder map chosen with the stable sign, then flip that axis if the
    // reflection landed on -|v| e1.
    LorentzTransform rot(d);
    if (s > 0.0) {
        std::vector<double> w(static_cast<std::size_t>(d), 0.0);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = x.coords[i + 1];
        const double sign = (w[0] >= 0.0) ? 1.0 : -1.0;
        w[0] += sign * s;
        double wnorm2 = 0.0;
        for (double wi : w) wnorm2 += wi * wi;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j) {
                double h = (i == j ? 1.0 : 0.0) - 2.0 * w[i] * w[j] / wnorm2;
                // The Householder map sends v to -sign*|v| e1; negating the
                // first spatial row makes the image +|v| e1 when sign is +1.
                if (sign > 0.0 && i == 0) h = -h;
                rot.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = h;
            }
    }

    // Hyperbolic rotation in the (x0, x1) plane sending (R cosh r, R sinh r)
    // to (R, 0): cosh r = x0/R, sinh r = |v|/R.
    const double ch = x.coords[0] / R;
    const double sh = s / R;
    LorentzTransform boost(d);
    boost.at(0, 0) = ch;
    boost.at(0, 1) = -sh;
    boost.at(1, 0) = -sh;
    boost.at(1, 1) = ch;

    // Compose: first rotate, then boost.
    LorentzTransform out(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += boost.at(static_cast<int>(i), static_cast<int>(k)) *
                       rot.at(static_cast<int>(k), static_cast<int>(j));
            out.at(static_cast<int>(i), static_cast<int>(j)) = acc;
        }
    return out;
}

}  // namespace hyperlap
