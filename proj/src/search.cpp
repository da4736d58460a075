#include "hh/search.hpp"

#include "hh/error.hpp"
#include "hh/oracle.hpp"
#include "hh/rng.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

namespace hh {

namespace {

constexpr double kDegenerateScale = 1e-12;
constexpr double kGridShare = 0.4;
constexpr double kJitter = 0.5;
constexpr double kProfileStop = 1e-5;

std::string shortest(double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

// Strictly better: larger ratio, or equal ratio with smaller parameters.
bool better(const Candidate& a, const Candidate& b)
{
    if (!a.feasible)
        return false;
    if (!b.feasible)
        return true;
    if (a.ratio != b.ratio)
        return a.ratio > b.ratio;
    return std::lexicographical_compare(a.params.begin(), a.params.end(), b.params.begin(),
                                        b.params.end());
}

class Searcher
{
public:
    Searcher(Family family, std::size_t budget) : family_(family), budget_(budget), box_(family_box(family))
    {}

    bool exhausted() const { return history_.size() >= budget_; }

    const Candidate& evaluate(std::vector<double> params)
    {
        Candidate c = evaluate_candidate(family_, params);
        history_.push_back(std::move(c));
        const Candidate& added = history_.back();
        if (better(added, best_))
            best_ = added;
        return added;
    }

    void grid(Rng& rng)
    {
        const std::size_t dims = box_.names.size();
        const auto share = static_cast<double>(budget_) * kGridShare;
        const auto per_dim = std::max<std::size_t>(
            4, static_cast<std::size_t>(std::floor(std::pow(share, 1.0 / dims))));

        spacing_.resize(dims);
        for (std::size_t d = 0; d < dims; ++d)
            spacing_[d] = (box_.upper[d] - box_.lower[d]) / per_dim;

        std::vector<std::size_t> idx(dims, 0);
        for (;;) {
            if (exhausted())
                return;
            std::vector<double> p(dims);
            for (std::size_t d = 0; d < dims; ++d) {
                const double jitter = kJitter * (rng.unit() - 0.5);
                p[d] = std::clamp(box_.lower[d] + (idx[d] + 0.5 + jitter) * spacing_[d], box_.lower[d],
                                  box_.upper[d]);
            }
            evaluate(std::move(p));

            std::size_t d = 0;
            while (d < dims && ++idx[d] == per_dim)
                idx[d++] = 0;
            if (d == dims)
                return;
        }
    }

    void refine()
    {
        if (!best_.feasible)
            return;
        if (box_.names.size() == 2)
            profile_search();
        coordinate_rounds();
    }

    // Cyclic golden-section sweeps with shrinking radius.
    void coordinate_rounds()
    {
        const std::size_t dims = box_.names.size();
        std::vector<double> radius = spacing_;
        while (!exhausted() && best_.feasible) {
            bool any_wide = false;
            for (std::size_t d = 0; d < dims && !exhausted(); ++d) {
                const std::vector<double> center = best_.params;
                golden(d, center, std::max(box_.lower[d], center[d] - radius[d]),
                       std::min(box_.upper[d], center[d] + radius[d]));
                radius[d] *= 0.5;
                if (radius[d] > 1e-12 * (box_.upper[d] - box_.lower[d]))
                    any_wide = true;
            }
            if (!any_wide)
                break;
        }
    }

    // Two parameters: maximize over the first of the best value over the
    // second. Optima on a slanted feasibility edge defeat coordinate sweeps
    // but are found directly this way.
    void profile_search()
    {
        const std::vector<double> center = best_.params;
        golden_1d(box_.lower[0], box_.upper[0], kProfileStop * (box_.upper[0] - box_.lower[0]), [&](double x) {
            std::vector<double> p = center;
            p[0] = x;
            return golden(1, p, box_.lower[1], box_.upper[1], kProfileStop);
        });
    }

    // Golden-section maximization of coordinate d over [lo, hi] with the
    // other coordinates held at `base`. Returns the best value seen.
    double golden(std::size_t d, const std::vector<double>& base, double lo, double hi,
                  double rel_stop = 1e-12)
    {
        return golden_1d(lo, hi, rel_stop * (box_.upper[d] - box_.lower[d]), [&](double x) {
            std::vector<double> p = base;
            p[d] = x;
            const Candidate& c = evaluate(std::move(p));
            return c.feasible ? c.ratio : -std::numeric_limits<double>::infinity();
        });
    }

    template <class Fn>
    double golden_1d(double lo, double hi, double stop, Fn&& value_at)
    {
        constexpr double inv_phi = 0.6180339887498949;
        double best = -std::numeric_limits<double>::infinity();
        if (exhausted())
            return best;
        double x1 = hi - inv_phi * (hi - lo);
        double f1 = value_at(x1);
        if (exhausted())
            return f1;
        double x2 = lo + inv_phi * (hi - lo);
        double f2 = value_at(x2);
        best = std::max(f1, f2);

        while (hi - lo > stop && !exhausted()) {
            if (f1 >= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = value_at(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = value_at(x2);
            }
            best = std::max({best, f1, f2});
        }
        return best;
    }

    // Best feasible candidate that survives a denser convexity check.
    std::optional<Candidate> verified_best() const
    {
        std::vector<const Candidate*> order;
        for (const auto& c : history_) {
            if (c.feasible)
                order.push_back(&c);
        }
        std::sort(order.begin(), order.end(), [](const Candidate* a, const Candidate* b) { return better(*a, *b); });
        for (const Candidate* c : order) {
            const Expression f = Expression::parse(family_expression(family_, c->params));
            try {
                const ConvexityProfile prof =
                    convexity_profile(f, Interval(0.0, 1.0), 4 * kDefaultProfileSamples);
                if (prof.f_convex == Convexity::yes)
                    return *c;
            } catch (const Error&) {
            }
        }
        return std::nullopt;
    }

    std::size_t evaluations() const { return history_.size(); }

    std::size_t feasible_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(history_.begin(), history_.end(), [](const Candidate& c) { return c.feasible; }));
    }

private:
    Family family_;
    std::size_t budget_;
    FamilyBox box_;
    std::vector<double> spacing_;
    std::vector<Candidate> history_;
    Candidate best_;
};

} // namespace

RatioReport f_ratio(const Expression& f, const Interval& iv, double tol)
{
    const double fa = f(iv.a());
    const double fm = f(iv.midpoint());
    const double fb = f(iv.b());

    RatioReport r;
    // mean - f(mid) integrated directly so the subtraction happens pointwise.
    r.numerator = integrate_mean([&](double t) { return f(t) - fm; }, iv, tol).value;
    r.denominator = (fa - fm) + (fb - fm);
    r.degenerate = std::abs(r.denominator) <= kDegenerateScale * (1.0 + std::abs(fa) + std::abs(fb));
    r.value = r.degenerate ? std::numeric_limits<double>::quiet_NaN() : r.numerator / r.denominator;
    return r;
}

std::vector<RatioReport> ratio_limit_scan(const Expression& f, double a, std::span<const double> hs,
                                          double tol)
{
    std::vector<RatioReport> out;
    out.reserve(hs.size());
    for (const double h : hs) {
        if (!(h > 0.0))
            throw InvalidArgument("scan steps must be positive");
        out.push_back(f_ratio(f, Interval(a, a + h), tol));
    }
    return out;
}

CounterexampleReport left_counterexample(double gamma)
{
    if (!(gamma > 0.0 && gamma <= 0.5))
        throw InvalidArgument("gamma must lie in (0, 1/2]");
    CounterexampleReport r;
    r.gamma = gamma;
    r.m_value = gamma + (1.0 - 2.0 * gamma) * std::exp2(-1.0 / gamma);
    r.mean = gamma / (1.0 + gamma);
    r.violated = r.m_value > r.mean;
    return r;
}

WitnessReport g_witness()
{
    const Expression g = Expression::parse(kWitnessG);
    const Interval unit(0.0, 1.0);
    return {f_ratio(g, unit, 1e-10), convexity_profile(g, unit)};
}

const char* to_string(Family family)
{
    switch (family) {
    case Family::power: return "power";
    case Family::power_combo: return "power-combo";
    case Family::smoothed_tent: return "smoothed-tent";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (const Family f : {Family::power, Family::power_combo, Family::smoothed_tent}) {
        if (name == to_string(f))
            return f;
    }
    return std::nullopt;
}

FamilyBox family_box(Family family)
{
    switch (family) {
    case Family::power: return {{"p"}, {1.01}, {20.0}};
    case Family::power_combo: return {{"p", "c"}, {1.01, -1.0}, {6.0, 2.0}};
    case Family::smoothed_tent: return {{"eps"}, {1e-4}, {1.0}};
    }
    throw InvalidArgument("unknown family");
}

std::string family_expression(Family family, std::span<const double> params)
{
    const FamilyBox box = family_box(family);
    if (params.size() != box.names.size())
        throw InvalidArgument("wrong number of family parameters");
    switch (family) {
    case Family::power:
        return "x^" + shortest(params[0]);
    case Family::power_combo:
        return "x^" + shortest(params[0]) + " - " + shortest(params[1]) + "*x^4";
    case Family::smoothed_tent:
        return "hyp(x - 0.5, " + shortest(params[0]) + ")";
    }
    throw InvalidArgument("unknown family");
}

Candidate evaluate_candidate(Family family, std::span<const double> params, std::size_t profile_samples)
{
    Candidate c;
    c.params.assign(params.begin(), params.end());
    try {
        const Expression f = Expression::parse(family_expression(family, params));
        const Interval unit(0.0, 1.0);
        if (convexity_profile(f, unit, profile_samples).f_convex != Convexity::yes)
            return c;
        const RatioReport r = f_ratio(f, unit);
        if (r.degenerate)
            return c;
        c.feasible = true;
        c.ratio = r.value;
    } catch (const Error&) {
        c.feasible = false;
    }
    return c;
}

SearchResult alpha_star_search(Family family, std::size_t budget, std::uint64_t seed)
{
    if (budget < kMinSearchBudget)
        throw InvalidArgument("search budget must be at least 100");

    Rng rng(seed);
    Searcher s(family, budget);
    s.grid(rng);
    s.refine();

    const std::optional<Candidate> best = s.verified_best();
    if (!best)
        throw SearchError("no feasible candidate found within the budget");

    SearchResult r;
    r.family = family;
    r.best_ratio = best->ratio;
    r.witness = best->params;
    r.witness_expression = family_expression(family, best->params);
    r.evaluations = s.evaluations();
    r.feasible = s.feasible_count();
    r.seed = seed;
    return r;
}

} // namespace hh
