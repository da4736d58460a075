#include "hh/oracle.hpp"

#include "hh/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hh {

namespace {

constexpr int kMaxDepth = 60;

// Neumaier compensated sum; order of additions is the caller's.
class CompensatedSum
{
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class Integrator
{
public:
    Integrator(const std::function<double(double)>& f, double tol, std::size_t budget)
        : f_(f), tol_(tol), budget_(budget)
    {}

    double sample(double x)
    {
        if (evaluations_ >= budget_)
            throw BudgetExceeded("quadrature evaluation budget exceeded");
        ++evaluations_;
        const double v = f_(x);
        if (!std::isfinite(v))
            throw DomainError("integrand is not finite at a sample point");
        return v;
    }

    // Panel [l, r] with f(l), f(m), f(r) already known.
    void panel(double l, double r, double fl, double fm, double fr, int depth)
    {
        const double m = 0.5 * (l + r);
        const double len = r - l;
        const double fq1 = sample(0.5 * (l + m));
        const double fq3 = sample(0.5 * (m + r));

        const double coarse = len / 6.0 * (fl + 4.0 * fm + fr);
        const double fine = len / 12.0 * (fl + 4.0 * fq1 + 2.0 * fm + 4.0 * fq3 + fr);
        const double err = std::abs(fine - coarse) / 15.0;

        const double magnitude =
            std::max({std::abs(fl), std::abs(fq1), std::abs(fm), std::abs(fq3), std::abs(fr)});
        const double rounding = 32.0 * std::numeric_limits<double>::epsilon() * magnitude * len;

        if (err <= tol_ * len || err <= rounding) {
            total_.add(fine + (fine - coarse) / 15.0);
            err_total_ += std::max(err, rounding);
            return;
        }
        if (depth >= kMaxDepth || !(l < 0.5 * (l + m) && 0.5 * (m + r) < r))
            throw BudgetExceeded("quadrature cannot resolve the integrand (maximum depth)");

        panel(l, m, fl, fq1, fm, depth + 1);
        panel(m, r, fm, fq3, fr, depth + 1);
    }

    double total() const { return total_.value(); }
    double error_total() const { return err_total_; }
    std::size_t evaluations() const { return evaluations_; }

private:
    const std::function<double(double)>& f_;
    double tol_;
    std::size_t budget_;
    std::size_t evaluations_ = 0;
    CompensatedSum total_;
    double err_total_ = 0.0;
};

} // namespace

QuadResult integrate_mean(const std::function<double(double)>& f, const Interval& iv, double tol,
                          const QuadOptions& options)
{
    if (!(tol >= kMinQuadTolerance && tol <= kMaxQuadTolerance))
        throw InvalidArgument("quadrature tolerance must lie in [1e-13, 1e-3]");
    if (options.initial_panels < 1)
        throw InvalidArgument("at least one initial panel is required");

    Integrator integrator(f, tol, options.max_evaluations);
    const int n = options.initial_panels;
    const double a = iv.a();
    const double len = iv.length();

    auto node = [&](int i) { return i == n ? iv.b() : a + len * i / n; };

    double left = integrator.sample(a);
    for (int i = 0; i < n; ++i) {
        const double l = node(i);
        const double r = node(i + 1);
        const double mid = integrator.sample(0.5 * (l + r));
        const double right = integrator.sample(r);
        integrator.panel(l, r, left, mid, right, 0);
        left = right;
    }

    QuadResult result;
    result.value = integrator.total() / len;
    result.err_estimate = integrator.error_total() / len;
    result.evaluations = integrator.evaluations();
    return result;
}

QuadResult integrate_mean(const Expression& f, const Interval& iv, double tol,
                          const QuadOptions& options)
{
    return integrate_mean([&f](double x) { return f(x); }, iv, tol, options);
}

} // namespace hh
