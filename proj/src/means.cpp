#include "hh/means.hpp"

#include "hh/error.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hh {

namespace {

void require_positive(double a, double b)
{
    if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidArgument("means require positive finite arguments");
}

void require_distinct(double a, double b)
{
    require_positive(a, b);
    if (a == b)
        throw InvalidArgument("enclosure requires a != b");
}

// a = A(1 - s), b = A(1 + s) with 0 <= s < 1 after ordering a <= b.
struct Centered
{
    double A;
    double s;
};

Centered center(double a, double b)
{
    if (a > b)
        std::swap(a, b);
    return {0.5 * (a + b), (b - a) / (b + a)};
}

bool use_series(double a, double b)
{
    return std::abs(b - a) < kSeriesGap * std::min(a, b);
}

// A - G = (sqrt(b) - sqrt(a))^2 / 2
double a_minus_g(double a, double b)
{
    const double d = std::sqrt(b) - std::sqrt(a);
    return 0.5 * d * d;
}

// A - H = (b - a)^2 / (2 (a + b))
double a_minus_h(double a, double b)
{
    return (b - a) * (b - a) / (2.0 * (a + b));
}

double logarithmic(double a, double b)
{
    const auto [A, s] = center(a, b);
    if (use_series(a, b)) {
        const double s2 = s * s;
        return A / (1.0 + s2 / 3.0 + s2 * s2 / 5.0);
    }
    // (b - a) / (log b - log a) rewritten as A s / atanh(s).
    return A * s / std::atanh(s);
}

double log_identric(double a, double b)
{
    const auto [A, s] = center(a, b);
    if (use_series(a, b)) {
        const double s2 = s * s;
        return std::log(A) - s2 / 6.0 - s2 * s2 / 20.0 - s2 * s2 * s2 / 42.0;
    }
    // (b log b - a log a)/(b - a) - 1 with the common log A factored out.
    const double odd = (1.0 + s) * std::log1p(s) - (1.0 - s) * std::log1p(-s);
    return std::log(A) + odd / (2.0 * s) - 1.0;
}

double log_gini(double a, double b)
{
    const auto [A, s] = center(a, b);
    if (s == 0.0)
        return std::log(A);
    const double even = (1.0 + s) * std::log1p(s) + (1.0 - s) * std::log1p(-s);
    return std::log(A) + 0.5 * even;
}

} // namespace

MeanSet all_means(double a, double b)
{
    require_positive(a, b);
    if (a == b)
        return {a, a, a, a, a, a};

    MeanSet m;
    m.A = 0.5 * (a + b);
    m.H = 2.0 * a * b / (a + b);
    m.G = std::sqrt(a) * std::sqrt(b);
    m.L = logarithmic(a, b);
    m.I = std::exp(log_identric(a, b));
    m.S = std::exp(log_gini(a, b));
    return m;
}

double reciprocal_log_defect(double a, double b)
{
    require_positive(a, b);
    const auto [A, s] = center(a, b);
    if (s < 1e-2) {
        // A * defect = sum_{k>=1} s^{2k} (2k - 1) / (2 (2k + 1))
        const double s2 = s * s;
        double term = 1.0;
        double sum = 0.0;
        for (int k = 1; k <= 8; ++k) {
            term *= s2;
            sum += term * (2.0 * k - 1.0) / (2.0 * (2.0 * k + 1.0));
        }
        return sum / A;
    }
    const MeanSet m = all_means(a, b);
    return 0.5 * (1.0 / m.A + 1.0 / m.H) - 1.0 / m.L;
}

Enclosure theorem5_L_enclosure(double a, double b)
{
    require_distinct(a, b);
    const MeanSet m = all_means(a, b);
    const double amg = a_minus_g(a, b);
    const double upper = (m.A + 2.0 * m.G) / 3.0;
    const double ratio = amg / m.L;
    const double correction = 2.0 / 81.0 * ratio * ratio * (m.A + m.G);
    return {upper - correction, upper};
}

Enclosure theorem5_recipL_enclosure(double a, double b)
{
    require_distinct(a, b);
    const MeanSet m = all_means(a, b);
    const double amh = a_minus_h(a, b);
    const double lower = amh / (6.0 * m.A * m.A);
    const double upper = m.A * amh / (6.0 * m.H * m.H) * (4.0 / m.H - 3.0 / m.A);
    return {lower, upper};
}

double theorem6_exponent(double a, double b)
{
    require_distinct(a, b);
    // (b-a)^2/324 (1/a^2 + 1/b^2 - 2/A^2) = 2 s^4 (3 - s^2) / (81 (1 - s^2)^2)
    const double s = center(a, b).s;
    const double s2 = s * s;
    const double q = 1.0 - s2;
    return 2.0 * s2 * s2 * (3.0 - s2) / (81.0 * q * q);
}

double theorem6_printed_exponent(double a, double b)
{
    require_distinct(a, b);
    const MeanSet m = all_means(a, b);
    const double amh = a_minus_h(a, b);
    return amh * amh / (162.0 * m.H) * (1.0 / m.A + 2.0 / m.H);
}

Enclosure theorem6_I_enclosure(double a, double b, bool use_printed_constant)
{
    require_distinct(a, b);
    const auto [A, s] = center(a, b);
    // A^{2/3} G^{1/3} = A (G/A)^{1/3} and (G/A)^2 = 1 - s^2.
    const double lower = A * std::exp(std::log1p(-s * s) / 6.0);
    const double exponent =
        use_printed_constant ? theorem6_printed_exponent(a, b) : theorem6_exponent(a, b);
    return {lower, lower * std::exp(exponent)};
}

Enclosure theorem6_Isq_enclosure(double a, double b)
{
    require_distinct(a, b);
    const MeanSet m = all_means(a, b);
    const double upper = std::exp(4.0 / 3.0 * std::log(m.A) + 2.0 / 3.0 * log_gini(a, b));
    const double amh = a_minus_h(a, b);
    const double exponent = 4.0 / 81.0 * amh * amh / (m.A * m.H);
    return {upper * std::exp(-exponent), upper};
}

} // namespace hh
