#ifndef HH_JET_HPP
#define HH_JET_HPP

#include <algorithm>
#include <array>
#include <cstddef>

namespace hh {

/// Truncated Taylor expansion of a function about a point, up to fourth order.
///
/// Coefficients are scaled, c[k] = f^(k)(point) / k!, so products and
/// quotients are plain truncated Cauchy products. `order` records how many
/// coefficients are meaningful; entries above it are kept at zero. Mixing
/// jets of different orders yields the smaller order.
struct Jet4
{
    static constexpr int max_order = 4;

    double point = 0.0;
    int order = max_order;
    std::array<double, max_order + 1> c{};

    static constexpr Jet4 constant(double value, double at, int order = max_order)
    {
        Jet4 j;
        j.point = at;
        j.order = order;
        j.c[0] = value;
        return j;
    }

    static constexpr Jet4 variable(double at, int order = max_order)
    {
        Jet4 j = constant(at, at, order);
        if (order >= 1)
            j.c[1] = 1.0;
        return j;
    }

    constexpr double value() const { return c[0]; }

    /// k-th derivative, k! * c[k].
    constexpr double derivative(int k) const
    {
        constexpr std::array<double, max_order + 1> factorial{1.0, 1.0, 2.0, 6.0, 24.0};
        return k > order ? 0.0 : factorial[k] * c[k];
    }

    constexpr std::array<double, max_order + 1> derivatives() const
    {
        std::array<double, max_order + 1> d{};
        for (int k = 0; k <= max_order; ++k)
            d[k] = derivative(k);
        return d;
    }
};

namespace jet_detail {

constexpr Jet4 with_order_of(const Jet4& a, const Jet4& b)
{
    Jet4 r;
    r.point = a.point;
    r.order = std::min(a.order, b.order);
    return r;
}

} // namespace jet_detail

constexpr Jet4 operator-(const Jet4& a)
{
    Jet4 r = a;
    for (auto& v : r.c)
        v = -v;
    return r;
}

constexpr Jet4 operator+(const Jet4& a, const Jet4& b)
{
    Jet4 r = jet_detail::with_order_of(a, b);
    for (int k = 0; k <= r.order; ++k)
        r.c[k] = a.c[k] + b.c[k];
    return r;
}

constexpr Jet4 operator-(const Jet4& a, const Jet4& b)
{
    Jet4 r = jet_detail::with_order_of(a, b);
    for (int k = 0; k <= r.order; ++k)
        r.c[k] = a.c[k] - b.c[k];
    return r;
}

constexpr Jet4 operator*(const Jet4& a, const Jet4& b)
{
    Jet4 r = jet_detail::with_order_of(a, b);
    for (int k = 0; k <= r.order; ++k) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j)
            s += a.c[j] * b.c[k - j];
        r.c[k] = s;
    }
    return r;
}

/// Quotient by recurrence; the caller is responsible for b.c[0] != 0.
constexpr Jet4 operator/(const Jet4& a, const Jet4& b)
{
    Jet4 r = jet_detail::with_order_of(a, b);
    for (int k = 0; k <= r.order; ++k) {
        double s = a.c[k];
        for (int j = 1; j <= k; ++j)
            s -= b.c[j] * r.c[k - j];
        r.c[k] = s / b.c[0];
    }
    return r;
}

/// Compose an outer function g with the inner jet u.
///
/// `outer[k]` holds g^(k)(u.c[0]). The result is
/// sum_k outer[k]/k! * (u - u.c[0])^k, truncated at u.order.
constexpr Jet4 compose(const Jet4& u, const std::array<double, Jet4::max_order + 1>& outer)
{
    constexpr std::array<double, Jet4::max_order + 1> inv_factorial{1.0, 1.0, 0.5, 1.0 / 6.0,
                                                                    1.0 / 24.0};
    Jet4 delta = u;
    delta.c[0] = 0.0;

    Jet4 r = Jet4::constant(outer[0], u.point, u.order);
    Jet4 power = Jet4::constant(1.0, u.point, u.order);
    for (int k = 1; k <= u.order; ++k) {
        power = power * delta;
        const double w = outer[k] * inv_factorial[k];
        for (int i = k; i <= u.order; ++i)
            r.c[i] += w * power.c[i];
    }
    return r;
}

} // namespace hh

#endif
