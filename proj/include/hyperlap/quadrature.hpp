#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "hyperlap/errors.hpp"

namespace hyperlap {

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;       // accumulated absolute error estimate
    std::size_t evaluations = 0;  // number of integrand evaluations
};

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss rule on [-1, 1].
// Standard tabulated abscissae and weights; the Gauss rule reuses the
// odd-indexed Kronrod abscissae, so one pass yields both estimates.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gauss_kronrod_15(F& f, double a, double b, double& value, double& err) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    const double fc = f(mid);
    double result_kronrod = kKronrodWeights[7] * fc;
    double result_gauss = kGaussWeights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        result_kronrod += kKronrodWeights[j] * (f1 + f2);
        if (j % 2 == 1) result_gauss += kGaussWeights[j / 2] * (f1 + f2);
    }
    value = result_kronrod * half;
    err = std::abs((result_kronrod - result_gauss) * half);
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b]: repeatedly
// bisect the interval with the largest error estimate until the accumulated
// estimate meets the relative tolerance.  Throws ConvergenceError (carrying
// the best estimate) if the interval budget is exhausted or no interval can
// be refined further.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double rel_tol,
                                    std::size_t max_intervals = 4000) {
    struct Interval {
        double a, b, value, err;
    };

    QuadratureResult out;
    if (a == b) return out;

    std::vector<Interval> work;
    work.reserve(64);

    double value, err;
    detail::gauss_kronrod_15(f, a, b, value, err);
    out.evaluations = 15;
    work.push_back({a, b, value, err});

    double total_value = value;
    double total_err = err;
    // Intervals too narrow to bisect are retired here so the worklist stays
    // splittable; their error contribution remains part of the estimate.
    double frozen_value = 0.0, frozen_err = 0.0;

    const double min_width = 16.0 * std::numeric_limits<double>::epsilon() *
                             std::max({std::abs(a), std::abs(b), 1.0});

    while (total_err + frozen_err > rel_tol * std::abs(total_value + frozen_value) &&
           total_err + frozen_err > 1e-300) {
        if (work.empty() || work.size() + 1 >= max_intervals) {
            throw ConvergenceError(
                "adaptive quadrature: tolerance not reached within the interval budget",
                total_value + frozen_value, total_err + frozen_err);
        }

        auto worst = std::max_element(
            work.begin(), work.end(),
            [](const Interval& u, const Interval& v) { return u.err < v.err; });
        Interval iv = *worst;
        *worst = work.back();
        work.pop_back();
        total_value -= iv.value;
        total_err -= iv.err;

        if (iv.b - iv.a < min_width) {
            frozen_value += iv.value;
            frozen_err += iv.err;
            continue;
        }

        const double mid = 0.5 * (iv.a + iv.b);
        Interval left{iv.a, mid, 0.0, 0.0};
        Interval right{mid, iv.b, 0.0, 0.0};
        detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.err);
        detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.err);
        out.evaluations += 30;

        total_value += left.value + right.value;
        total_err += left.err + right.err;
        work.push_back(left);
        work.push_back(right);
    }

    out.value = total_value + frozen_value;
    out.est_error = total_err + frozen_err;
    return out;
}

}  // namespace hyperlap
