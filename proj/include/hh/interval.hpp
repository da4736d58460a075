#ifndef HH_INTERVAL_HPP
#define HH_INTERVAL_HPP

#include "hh/error.hpp"

#include <cmath>

namespace hh {

/// Integration domain [a, b] with a < b, both finite.
class Interval
{
public:
    Interval(double a, double b) : a_(a), b_(b)
    {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw InvalidArgument("interval endpoints must be finite");
        if (!(a < b))
            throw InvalidArgument("interval requires a < b");
    }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double length() const noexcept { return b_ - a_; }
    double midpoint() const noexcept { return a_ + 0.5 * (b_ - a_); }

private:
    double a_;
    double b_;
};

} // namespace hh

#endif
