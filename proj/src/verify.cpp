#include "hh/verify.hpp"

#include "hh/bounds.hpp"
#include "hh/error.hpp"
#include "hh/means.hpp"
#include "hh/oracle.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>

namespace hh {

namespace {

constexpr double kMeanTolerance = 1e-12;
constexpr double kContainSlack = 1e-9;
constexpr double kOrderSlack = 1e-10;
constexpr double kIdentityRelative = 1e-8;
constexpr double kRoundoffUlps = 64.0;
constexpr double kMeansRelative = 1e-12;

std::string shortest(double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string describe(const CorpusCase& c)
{
    return c.text + " on [" + shortest(c.iv.a()) + ", " + shortest(c.iv.b()) + "]";
}

std::string describe(double a, double b)
{
    return "(" + shortest(a) + ", " + shortest(b) + ")";
}

class Tally
{
public:
    Tally(std::string name, std::string citation)
    {
        outcome_.name = std::move(name);
        outcome_.citation = std::move(citation);
    }

    // violation <= 0 passes; positive values are recorded.
    void record(double violation, const std::string& where)
    {
        ++outcome_.checked;
        outcome_.worst = std::max(outcome_.worst, violation);
        if (!(violation <= 0.0)) {
            if (outcome_.failed++ == 0)
                outcome_.first_failure = where;
        }
    }

    void error(const std::string& where, const Error& e)
    {
        ++outcome_.checked;
        if (outcome_.failed++ == 0)
            outcome_.first_failure = where + ": " + e.what();
    }

    PropertyOutcome done() { return std::move(outcome_); }

private:
    PropertyOutcome outcome_;
};

double outside(const Enclosure& e, double v, double slack)
{
    return std::max(e.lower - slack - v, v - e.upper - slack);
}

double outside_relative(const Enclosure& e, double v, double rel)
{
    return outside(e, v, rel * std::abs(v));
}

template <typename Check>
void over_corpus(Tally& tally, std::size_t samples, std::uint64_t seed, Check check)
{
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const CorpusCase c = draw_corpus_case(rng);
        try {
            check(c, rng, tally);
        } catch (const Error& e) {
            tally.error(describe(c), e);
        }
    }
}

template <typename Check>
void over_pairs(Tally& tally, std::size_t samples, std::uint64_t seed, Check check)
{
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto [a, b] = draw_mean_pair(rng);
        try {
            check(a, b, tally);
        } catch (const Error& e) {
            tally.error(describe(a, b), e);
        }
    }
}

// Excess of an identity residual over its allowance. The allowance is
// relative to the identity's own size plus a rounding floor: the left side
// subtracts quantities of size |f| so it cannot be more accurate than a few
// ulps of |f|, however small the defect itself is.
double identity_excess(const IdentityResidual& r, const CorpusCase& c)
{
    const double fscale = std::max({std::abs(c.f(c.iv.a())), std::abs(c.f(c.iv.midpoint())),
                                    std::abs(c.f(c.iv.b()))});
    const double floor = kRoundoffUlps * std::numeric_limits<double>::epsilon() * fscale;
    const double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
    return (r.residual - floor) / std::max(scale, std::numeric_limits<double>::min()) - kIdentityRelative;
}

void identities(const VerifyOptions& o, std::vector<PropertyOutcome>& out)
{
    {
        Tally t("n14-identity", "kernel t(1-t) identity for N(1/4,1/2)");
        over_corpus(t, o.samples, o.seed, [](const CorpusCase& c, Rng&, Tally& tally) {
            tally.record(identity_excess(lemma2_residual(c.f, c.iv), c), describe(c));
        });
        out.push_back(t.done());
    }
    {
        Tally t("simpson-identity", "kernel t(2-3t) identity for N(1/6,2/3)");
        over_corpus(t, o.samples, o.seed + 1, [](const CorpusCase& c, Rng&, Tally& tally) {
            tally.record(identity_excess(lemma4_residual(c.f, c.iv), c), describe(c));
        });
        out.push_back(t.done());
    }
    {
        Tally t("symmetric-pair", "2h(mid) <= h(x)+h(y) <= h(a)+h(b) for x+y=a+b");
        over_corpus(t, o.samples, o.seed + 2, [](const CorpusCase& c, Rng& rng, Tally& tally) {
            const LemmaTriple tr = lemma1_check(c.f, c.iv, rng.unit());
            const double slack = 1e-12 * (std::abs(tr.endpoint_sum) + std::abs(tr.midpoint_sum));
            tally.record(std::max(tr.midpoint_sum - tr.pair_sum, tr.pair_sum - tr.endpoint_sum) - slack,
                         describe(c));
        });
        out.push_back(t.done());
    }
}

void inequalities(const VerifyOptions& o, std::vector<PropertyOutcome>& out)
{
    {
        Tally t("hh-n14-containment", "f(mid) <= mean <= N(1/4,1/2) <= trapezoid");
        over_corpus(t, o.samples, o.seed + 10, [](const CorpusCase& c, Rng&, Tally& tally) {
            const double mean = integrate_mean(c.f, c.iv, kMeanTolerance).value;
            const Enclosure classic = classic_hh(c.f, c.iv);
            const double upper = theorem1_upper(c.f, c.iv);
            const double trap_slack = 1e-12 * std::abs(classic.upper);
            tally.record(std::max({classic.lower - mean - kOrderSlack, mean - upper - kOrderSlack,
                                   upper - classic.upper - trap_slack}),
                         describe(c));
        });
        out.push_back(t.done());
    }
    {
        Tally t("weight-monotonicity", "N(alpha, 1-2alpha) non-decreasing in alpha");
        over_corpus(t, o.samples, o.seed + 11, [](const CorpusCase& c, Rng&, Tally& tally) {
            constexpr std::array<double, 5> alphas{0.0, 0.1, 0.25, 1.0 / 3.0, 0.5};
            double worst = -1.0;
            double prev = n_value(c.f, c.iv, WeightPair::from_endpoint(alphas[0]));
            for (std::size_t i = 1; i < alphas.size(); ++i) {
                const double next = n_value(c.f, c.iv, WeightPair::from_endpoint(alphas[i]));
                worst = std::max(worst, prev - next - 1e-12 * std::abs(next));
                prev = next;
            }
            tally.record(worst, describe(c));
        });
        out.push_back(t.done());
    }
    {
        Tally t("n14-defect-sandwich", "N(1/4,1/2) defect between (b-a)^2/48 f''(mid) and (b-a)^2/96 (f''(a)+f''(b))");
        over_corpus(t, o.samples, o.seed + 12, [](const CorpusCase& c, Rng&, Tally& tally) {
            const ConvexityProfile prof = convexity_profile(c.f, c.iv);
            if (prof.f2_shape == Shape::indeterminate)
                return;
            const DefectSandwich s = theorem2_defect_sandwich(c.f, c.iv, prof);
            const double mean = integrate_mean(c.f, c.iv, kMeanTolerance).value;
            tally.record(outside(s.defect, s.bound - mean, kContainSlack), describe(c));
        });
        out.push_back(t.done());
    }
    {
        Tally t("simpson-side", "N(1/6,2/3) bounds the mean above (f'' convex) or below (f'' concave)");
        over_corpus(t, o.samples, o.seed + 13, [](const CorpusCase& c, Rng&, Tally& tally) {
            const ConvexityProfile prof = convexity_profile(c.f, c.iv);
            if (prof.f2_shape == Shape::indeterminate)
                return;
            const OneSidedBound bound = theorem3_bound(c.f, c.iv, prof);
            const double mean = integrate_mean(c.f, c.iv, kMeanTolerance).value;
            const double gap = bound.side == BoundSide::upper ? mean - bound.value : bound.value - mean;
            tally.record(gap - kOrderSlack, describe(c));
        });
        out.push_back(t.done());
    }
    {
        Tally t("simpson-defect-sandwich", "Simpson defect within (b-a)^2/324 |f''(a)+f''(b)-2f''(mid)|");
        over_corpus(t, o.samples, o.seed + 14, [](const CorpusCase& c, Rng&, Tally& tally) {
            const ConvexityProfile prof = convexity_profile(c.f, c.iv);
            if (prof.f2_shape == Shape::indeterminate)
                return;
            const DefectSandwich s = theorem4_defect_sandwich(c.f, c.iv, prof);
            const double mean = integrate_mean(c.f, c.iv, kMeanTolerance).value;
            const double defect =
                s.orientation == DefectOrientation::bound_minus_mean ? s.bound - mean : mean - s.bound;
            tally.record(outside(s.defect, defect, kContainSlack), describe(c));
        });
        out.push_back(t.done());
    }
    {
        Tally t("simpson-error-bound", "|Simpson - mean| <= h^5 max|f''''| / (90 (b-a))");
        over_corpus(t, o.samples, o.seed + 15, [](const CorpusCase& c, Rng&, Tally& tally) {
            const SimpsonEstimate s = simpson_estimate(c.f, c.iv);
            const double mean = integrate_mean(c.f, c.iv, kMeanTolerance).value;
            tally.record(std::abs(s.estimate - mean) - s.err_bound - kOrderSlack, describe(c));
        });
        out.push_back(t.done());
    }
    {
        Tally t("adaptive-containment", "bisected midpoint/N(1/4,1/2) enclosure holds the mean");
        over_corpus(t, std::min<std::size_t>(o.samples, 50), o.seed + 16,
                    [](const CorpusCase& c, Rng&, Tally& tally) {
                        const ConvexityProfile prof = convexity_profile(c.f, c.iv);
                        const Enclosure e = adaptive_enclosure(c.f, c.iv, 1e-6, prof);
                        const double mean = integrate_mean(c.f, c.iv, kMeanTolerance).value;
                        tally.record(std::max(outside(e, mean, kOrderSlack), e.width() - 1e-6),
                                     describe(c));
                    });
        out.push_back(t.done());
    }
}

void means(const VerifyOptions& o, std::vector<PropertyOutcome>& out)
{
    {
        Tally t("mean-chain", "H <= G <= L <= I <= A <= S");
        over_pairs(t, o.samples, o.seed + 20, [](double a, double b, Tally& tally) {
            const MeanSet m = all_means(a, b);
            const std::array<double, 6> chain{m.H, m.G, m.L, m.I, m.A, m.S};
            double worst = -1.0;
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                worst = std::max(worst, chain[i] - chain[i + 1] * (1.0 + kMeansRelative));
            tally.record(worst, describe(a, b));
        });
        out.push_back(t.done());
    }
    {
        Tally t("logmean-bounds", "(A+2G)/3 - 2/81 ((A-G)/L)^2 (A+G) <= L <= (A+2G)/3");
        over_pairs(t, o.samples, o.seed + 21, [](double a, double b, Tally& tally) {
            if (a == b)
                return;
            tally.record(outside_relative(theorem5_L_enclosure(a, b), all_means(a, b).L, kMeansRelative),
                         describe(a, b));
        });
        out.push_back(t.done());
    }
    {
        Tally t("recip-logmean-bounds", "(A-H)/(6A^2) <= (1/A+1/H)/2 - 1/L <= A(A-H)/(6H^2) (4/H-3/A)");
        over_pairs(t, o.samples, o.seed + 22, [](double a, double b, Tally& tally) {
            if (a == b)
                return;
            tally.record(outside_relative(theorem5_recipL_enclosure(a, b), reciprocal_log_defect(a, b),
                                          kMeansRelative),
                         describe(a, b));
        });
        out.push_back(t.done());
    }
    {
        Tally t(o.printed_constant ? "identric-bounds-printed" : "identric-bounds",
                o.printed_constant ? "A^{2/3}G^{1/3} <= I <= A^{2/3}G^{1/3} exp((A-H)^2/(162H) (1/A+2/H))"
                                   : "A^{2/3}G^{1/3} <= I <= A^{2/3}G^{1/3} exp((b-a)^2/324 (1/a^2+1/b^2-2/A^2))");
        const bool printed = o.printed_constant;
        over_pairs(t, o.samples, o.seed + 23, [printed](double a, double b, Tally& tally) {
            if (a == b)
                return;
            tally.record(outside_relative(theorem6_I_enclosure(a, b, printed), all_means(a, b).I, kMeansRelative),
                         describe(a, b));
        });
        out.push_back(t.done());
    }
    {
        Tally t("identric-square-bounds", "A^{4/3}S^{2/3} exp(-4/81 (A-H)^2/(AH)) <= I(a^2,b^2) <= A^{4/3}S^{2/3}");
        over_pairs(t, o.samples, o.seed + 24, [](double a, double b, Tally& tally) {
            if (a == b)
                return;
            tally.record(outside_relative(theorem6_Isq_enclosure(a, b), all_means(a * a, b * b).I, kMeansRelative),
                         describe(a, b));
        });
        out.push_back(t.done());
    }
}

} // namespace

CorpusCase draw_corpus_case(Rng& rng)
{
    static constexpr std::array<std::string_view, 4> fixed{"exp(x)", "1/x", "-log(x)", "x*log(x)"};
    const std::uint64_t pick = rng.index(fixed.size() + 1);
    std::string text;
    if (pick < fixed.size())
        text = fixed[pick];
    else
        text = "x^" + shortest(rng.uniform(1.2, 6.0));

    double a = 0.0;
    double b = 0.0;
    do {
        a = rng.uniform(0.1, 5.0);
        b = rng.uniform(0.1, 5.0);
        if (a > b)
            std::swap(a, b);
    } while (b - a < 0.05);

    return {text, Expression::parse(text), Interval(a, b)};
}

std::pair<double, double> draw_mean_pair(Rng& rng)
{
    const double a = rng.log_uniform(1e-3, 1e3);
    const double b = rng.log_uniform(1e-3, 1e3);
    return {a, b};
}

std::optional<Suite> parse_suite(std::string_view name)
{
    for (const Suite s : {Suite::identities, Suite::inequalities, Suite::means, Suite::all}) {
        if (name == to_string(s))
            return s;
    }
    return std::nullopt;
}

const char* to_string(Suite suite)
{
    switch (suite) {
    case Suite::identities: return "identities";
    case Suite::inequalities: return "inequalities";
    case Suite::means: return "means";
    case Suite::all: return "all";
    }
    return "?";
}

std::vector<PropertyOutcome> run_verification(const VerifyOptions& options)
{
    if (options.samples == 0)
        throw InvalidArgument("verification needs at least one sample");
    std::vector<PropertyOutcome> out;
    if (options.suite == Suite::identities || options.suite == Suite::all)
        identities(options, out);
    if (options.suite == Suite::inequalities || options.suite == Suite::all)
        inequalities(options, out);
    if (options.suite == Suite::means || options.suite == Suite::all)
        means(options, out);
    return out;
}

} // namespace hh
