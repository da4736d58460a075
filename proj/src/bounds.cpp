#include "hh/bounds.hpp"

#include "hh/error.hpp"
#include "hh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace hh {

namespace {

constexpr double kEnclosureSlack = 1e-12;
constexpr double kWeightSlack = 1e-12;
constexpr double kSignTolerance = 1e-10;

struct ThreePoint
{
    double fa, fm, fb;
};

ThreePoint sample3(const Expression& f, const Interval& iv)
{
    return {f(iv.a()), f(iv.midpoint()), f(iv.b())};
}

double second_derivative(const Expression& f, double x)
{
    return f.jet(x, 2).derivative(2);
}

void require_determinate(const ConvexityProfile& prof)
{
    if (prof.f2_shape == Shape::indeterminate)
        throw HypothesisError("the shape of f'' is indeterminate on the interval");
}

Enclosure checked(double lower, double upper)
{
    const double scale = std::max(std::abs(lower), std::abs(upper));
    if (lower > upper + kEnclosureSlack * scale)
        throw HypothesisError("convexity profile is inconsistent with f (lower > upper)");
    return {lower, upper};
}

// Neumaier summation, left to right.
class Accumulator
{
public:
    void add(double v)
    {
        const double t = sum_ + v;
        comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct PanelSums
{
    Accumulator lower;
    Accumulator upper;
    std::size_t panels = 0;
};

void accept_panel(PanelSums& sums, double len, double fl, double fm, double fr)
{
    sums.lower.add(len * fm);
    sums.upper.add(len * (0.25 * (fl + fr) + 0.5 * fm));
    ++sums.panels;
}

void refine(const Expression& f, double l, double r, double fl, double fr, double tol,
            std::size_t budget, PanelSums& sums)
{
    const double m = 0.5 * (l + r);
    const double fm = f(m);
    const double width = 0.25 * (fl + fr - 2.0 * fm);
    if (width <= tol || !(l < m && m < r)) {
        if (sums.panels >= budget)
            throw BudgetExceeded("adaptive enclosure panel budget exceeded");
        accept_panel(sums, r - l, fl, fm, fr);
        return;
    }
    if (sums.panels + 2 > budget)
        throw BudgetExceeded("adaptive enclosure panel budget exceeded");
    refine(f, l, m, fl, fm, tol, budget, sums);
    refine(f, m, r, fm, fr, tol, budget, sums);
}

// Integrand t(1-t) or t(2-3t) times f''(x) + f''(y) along the symmetric pair.
IdentityResidual identity_residual(const Expression& f, const Interval& iv, double tol,
                                   const WeightPair& w, double kernel_scale,
                                   double (*kernel)(double))
{
    const double a = iv.a();
    const double b = iv.b();
    const double len = iv.length();
    const ThreePoint p = sample3(f, iv);

    // N - mean = (N - f(mid)) - mean(f - f(mid)); shifting keeps the
    // subtraction well conditioned when the defect is small.
    const double shifted_bound = w.endpoint_weight() * (p.fa + p.fb - 2.0 * p.fm);
    const QuadResult shifted = integrate_mean([&](double t) { return f(t) - p.fm; }, iv, tol);
    const double lhs = shifted_bound - shifted.value;

    auto integrand = [&](double t) {
        const double x = a * t / 2.0 + b * (1.0 - t / 2.0);
        const double y = b * t / 2.0 + a * (1.0 - t / 2.0);
        return kernel(t) * (second_derivative(f, x) + second_derivative(f, y));
    };
    const QuadResult kernel_mean = integrate_mean(integrand, Interval(0.0, 1.0), tol);
    const double rhs = kernel_scale * len * len * kernel_mean.value;

    return {lhs, rhs, std::abs(lhs - rhs)};
}

} // namespace

Enclosure make_enclosure(double lower, double upper)
{
    const double scale = std::max(std::abs(lower), std::abs(upper));
    if (!std::isfinite(lower) || !std::isfinite(upper))
        throw InvalidArgument("enclosure bounds must be finite");
    if (lower > upper + kEnclosureSlack * scale)
        throw InvalidArgument("enclosure requires lower <= upper");
    return {lower, upper};
}

// ---------------------------------------------------------------------------
// WeightPair
// ---------------------------------------------------------------------------

WeightPair::WeightPair(double endpoint_weight, double midpoint_weight)
    : endpoint_(endpoint_weight), midpoint_(midpoint_weight)
{
    if (!std::isfinite(endpoint_weight) || !std::isfinite(midpoint_weight))
        throw InvalidArgument("weights must be finite");
    if (endpoint_weight < 0.0 || midpoint_weight < 0.0)
        throw InvalidArgument("weights must be non-negative (use WeightPair::probe)");
    if (std::abs(2.0 * endpoint_weight + midpoint_weight - 1.0) > kWeightSlack)
        throw InvalidArgument("weights must satisfy 2*endpoint + midpoint = 1");
}

WeightPair WeightPair::from_endpoint(double endpoint_weight)
{
    return WeightPair(endpoint_weight, 1.0 - 2.0 * endpoint_weight);
}

WeightPair WeightPair::probe(double endpoint_weight)
{
    if (!std::isfinite(endpoint_weight))
        throw InvalidArgument("weights must be finite");
    WeightPair w;
    w.endpoint_ = endpoint_weight;
    w.midpoint_ = 1.0 - 2.0 * endpoint_weight;
    return w;
}

bool WeightPair::valid_upper_bound() const noexcept
{
    return endpoint_ >= 0.25 && endpoint_ <= 0.5;
}

bool WeightPair::valid_lower_bound() const noexcept
{
    return endpoint_ == 0.0;
}

// ---------------------------------------------------------------------------
// Profile
// ---------------------------------------------------------------------------

const char* to_string(Convexity c)
{
    switch (c) {
    case Convexity::yes: return "yes";
    case Convexity::no: return "no";
    case Convexity::indeterminate: return "indeterminate";
    }
    return "?";
}

const char* to_string(Shape s)
{
    switch (s) {
    case Shape::convex: return "convex";
    case Shape::concave: return "concave";
    case Shape::indeterminate: return "indeterminate";
    }
    return "?";
}

ConvexityProfile convexity_profile(const Expression& f, const Interval& iv, std::size_t n)
{
    if (n < kMinProfileSamples)
        throw InvalidArgument("convexity profile needs at least 33 samples");

    ConvexityProfile prof;
    prof.samples = n;
    prof.min_f2 = prof.min_f4 = std::numeric_limits<double>::infinity();
    prof.max_f2 = prof.max_f4 = -std::numeric_limits<double>::infinity();

    const double mid = iv.midpoint();
    const double half = 0.5 * iv.length();
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n);
        const double x = std::clamp(mid + half * std::cos(theta), iv.a(), iv.b());
        const Jet4 j = f.jet(x);
        const double f2 = j.derivative(2);
        const double f4 = j.derivative(4);
        prof.min_f2 = std::min(prof.min_f2, f2);
        prof.max_f2 = std::max(prof.max_f2, f2);
        prof.min_f4 = std::min(prof.min_f4, f4);
        prof.max_f4 = std::max(prof.max_f4, f4);
    }

    const double tol2 =
        kSignTolerance * (1.0 + std::max(std::abs(prof.min_f2), std::abs(prof.max_f2)));
    if (prof.min_f2 >= -tol2)
        prof.f_convex = Convexity::yes;
    else if (prof.max_f2 <= tol2)
        prof.f_convex = Convexity::no;
    else
        prof.f_convex = Convexity::indeterminate;

    const double tol4 =
        kSignTolerance * (1.0 + std::max(std::abs(prof.min_f4), std::abs(prof.max_f4)));
    if (prof.min_f4 >= -tol4)
        prof.f2_shape = Shape::convex;
    else if (prof.max_f4 <= tol4)
        prof.f2_shape = Shape::concave;
    else
        prof.f2_shape = Shape::indeterminate;

    return prof;
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

Enclosure classic_hh(const Expression& f, const Interval& iv)
{
    const ThreePoint p = sample3(f, iv);
    return {p.fm, 0.5 * (p.fa + p.fb)};
}

double n_value(const Expression& f, const Interval& iv, const WeightPair& w)
{
    const ThreePoint p = sample3(f, iv);
    return w.endpoint_weight() * (p.fa + p.fb) + w.midpoint_weight() * p.fm;
}

double m_value(const Expression& f, const Interval& iv, const WeightPair& w)
{
    return n_value(f, iv, w);
}

double theorem1_upper(const Expression& f, const Interval& iv)
{
    return n_value(f, iv, weights::quarter);
}

Enclosure DefectSandwich::mean_enclosure() const
{
    if (orientation == DefectOrientation::bound_minus_mean)
        return {bound - defect.upper, bound - defect.lower};
    return {bound + defect.lower, bound + defect.upper};
}

DefectSandwich theorem2_defect_sandwich(const Expression& f, const Interval& iv,
                                        const ConvexityProfile& prof)
{
    require_determinate(prof);
    const double len = iv.length();
    const double at_mid = len * len / 48.0 * second_derivative(f, iv.midpoint());
    const double at_ends =
        len * len / 96.0 * (second_derivative(f, iv.a()) + second_derivative(f, iv.b()));

    DefectSandwich s;
    s.bound = theorem1_upper(f, iv);
    s.orientation = DefectOrientation::bound_minus_mean;
    s.defect = prof.f2_shape == Shape::convex ? checked(at_mid, at_ends) : checked(at_ends, at_mid);
    return s;
}

OneSidedBound theorem3_bound(const Expression& f, const Interval& iv, const ConvexityProfile& prof)
{
    require_determinate(prof);
    return {n_value(f, iv, weights::simpson),
            prof.f2_shape == Shape::convex ? BoundSide::upper : BoundSide::lower};
}

DefectSandwich theorem4_defect_sandwich(const Expression& f, const Interval& iv,
                                        const ConvexityProfile& prof)
{
    require_determinate(prof);
    const double len = iv.length();
    const double second_difference = second_derivative(f, iv.a()) + second_derivative(f, iv.b()) -
                                     2.0 * second_derivative(f, iv.midpoint());
    const double scale = len * len / 324.0;

    DefectSandwich s;
    s.bound = n_value(f, iv, weights::simpson);
    if (prof.f2_shape == Shape::convex) {
        s.orientation = DefectOrientation::bound_minus_mean;
        s.defect = checked(0.0, scale * second_difference);
    } else {
        s.orientation = DefectOrientation::mean_minus_bound;
        s.defect = checked(0.0, -scale * second_difference);
    }
    return s;
}

LemmaTriple lemma1_check(const Expression& h, const Interval& iv, double t)
{
    if (!(t >= 0.0 && t <= 1.0))
        throw InvalidArgument("lemma parameter t must lie in [0, 1]");
    const double a = iv.a();
    const double b = iv.b();
    const double x = a * t / 2.0 + b * (1.0 - t / 2.0);
    const double y = b * t / 2.0 + a * (1.0 - t / 2.0);
    return {2.0 * h(iv.midpoint()), h(x) + h(y), h(a) + h(b)};
}

IdentityResidual lemma2_residual(const Expression& f, const Interval& iv, double tol)
{
    return identity_residual(f, iv, tol, weights::quarter, 1.0 / 16.0,
                             [](double t) { return t * (1.0 - t); });
}

IdentityResidual lemma4_residual(const Expression& f, const Interval& iv, double tol)
{
    return identity_residual(f, iv, tol, weights::simpson, 1.0 / 48.0,
                             [](double t) { return t * (2.0 - 3.0 * t); });
}

SimpsonEstimate simpson_estimate(const Expression& f, const Interval& iv, std::size_t n)
{
    if (n < 2)
        throw InvalidArgument("simpson error bound needs at least two samples");
    const ThreePoint p = sample3(f, iv);
    const double len = iv.length();
    const double h = 0.5 * len;

    double max_f4 = 0.0;
    const double mid = iv.midpoint();
    for (std::size_t k = 0; k < n; ++k) {
        double x = mid + h * std::cos(std::numbers::pi * k / (n - 1.0));
        if (k == 0)
            x = iv.b();
        else if (k + 1 == n)
            x = iv.a();
        max_f4 = std::max(max_f4, std::abs(f.jet(x).derivative(4)));
    }

    SimpsonEstimate s;
    s.estimate = (p.fa + 4.0 * p.fm + p.fb) / 6.0;
    s.max_abs_f4 = max_f4;
    s.err_bound = std::pow(h, 5) / 90.0 * max_f4 / len;
    return s;
}

Enclosure bisected_enclosure(const Expression& f, const Interval& iv, int levels)
{
    if (levels < 0 || levels > 30)
        throw InvalidArgument("bisection levels must lie in [0, 30]");
    const std::size_t panels = std::size_t{1} << levels;
    const double a = iv.a();
    const double len = iv.length();
    auto node = [&](std::size_t i) { return i == panels ? iv.b() : a + len * i / panels; };

    PanelSums sums;
    double fl = f(a);
    for (std::size_t i = 0; i < panels; ++i) {
        const double l = node(i);
        const double r = node(i + 1);
        const double fr = f(r);
        accept_panel(sums, r - l, fl, f(0.5 * (l + r)), fr);
        fl = fr;
    }
    return {sums.lower.value() / len, sums.upper.value() / len};
}

Enclosure adaptive_enclosure(const Expression& f, const Interval& iv, double tol,
                             const ConvexityProfile& prof, std::size_t max_panels)
{
    if (prof.f_convex != Convexity::yes)
        throw HypothesisError("adaptive enclosure requires f convex on the interval");
    if (!(tol > 0.0))
        throw InvalidArgument("tolerance must be positive");

    PanelSums sums;
    refine(f, iv.a(), iv.b(), f(iv.a()), f(iv.b()), tol, max_panels, sums);
    const double len = iv.length();
    return {sums.lower.value() / len, sums.upper.value() / len};
}

} // namespace hh
