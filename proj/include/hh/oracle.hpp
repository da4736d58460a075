#ifndef HH_ORACLE_HPP
#define HH_ORACLE_HPP

#include "hh/expr.hpp"
#include "hh/interval.hpp"

#include <cstddef>
#include <functional>

namespace hh {

struct QuadResult
{
    double value = 0.0;        // (1/(b-a)) * integral of f over [a, b]
    double err_estimate = 0.0; // >= 0, on the same normalized scale
    std::size_t evaluations = 0;
};

struct QuadOptions
{
    std::size_t max_evaluations = 1'000'000;
    int initial_panels = 8;
};

inline constexpr double kMinQuadTolerance = 1e-13;
inline constexpr double kMaxQuadTolerance = 1e-3;

/// Mean value of f over iv by adaptive bisection.
///
/// Each panel is integrated by Simpson's rule on the panel and on its two
/// halves; the Richardson-extrapolated combination is kept and the
/// difference serves as the panel error estimate. A panel is accepted once
/// its estimate falls under tol times its share of the interval, or under
/// the rounding floor of its samples. Accepted panels are summed strictly
/// left to right, so the result is reproducible bit for bit.
///
/// Throws InvalidArgument for tol outside [1e-13, 1e-3], DomainError if f
/// fails or is non-finite anywhere it is sampled (endpoints included), and
/// BudgetExceeded when max_evaluations would be crossed.
QuadResult integrate_mean(const std::function<double(double)>& f, const Interval& iv, double tol,
                          const QuadOptions& options = {});

QuadResult integrate_mean(const Expression& f, const Interval& iv, double tol,
                          const QuadOptions& options = {});

} // namespace hh

#endif
