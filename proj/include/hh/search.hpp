#ifndef HH_SEARCH_HPP
#define HH_SEARCH_HPP

#include "hh/bounds.hpp"
#include "hh/expr.hpp"
#include "hh/interval.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hh {

/// F_f(a,b) = (mean - f(mid)) / (f(a) + f(b) - 2 f(mid)): the smallest
/// endpoint weight for which N(alpha, 1 - 2 alpha) still bounds this
/// particular f from above.
struct RatioReport
{
    double value = 0.0; // NaN when degenerate
    double numerator = 0.0;
    double denominator = 0.0;
    bool degenerate = false;
};

inline constexpr double kRatioQuadTolerance = 1e-12;

/// Degenerate when |denominator| <= 1e-12 (1 + |f(a)| + |f(b)|).
RatioReport f_ratio(const Expression& f, const Interval& iv, double tol = kRatioQuadTolerance);

/// F_f(a, a + h) for each h. Each entry is computed independently.
std::vector<RatioReport> ratio_limit_scan(const Expression& f, double a, std::span<const double> hs,
                                          double tol = 1e-13);

/// Probe of M(gamma, 1 - 2 gamma) <= mean with f(t) = t^{1/gamma} on [0, 1].
struct CounterexampleReport
{
    double gamma = 0.0;
    double m_value = 0.0; // gamma + (1 - 2 gamma) 2^{-1/gamma}
    double mean = 0.0;    // gamma / (1 + gamma)
    bool violated = false;
};

/// Throws InvalidArgument unless gamma lies in (0, 1/2].
CounterexampleReport left_counterexample(double gamma);

/// g(t) = 4 t^{3.5} / 35 - t^4 / 12, convex on [0, 1] with g'' = t^{1.5} - t^2.
inline constexpr std::string_view kWitnessG = "4*x^3.5/35 - x^4/12";

struct WitnessReport
{
    RatioReport ratio;
    ConvexityProfile profile;
};

/// F_g(0, 1), computed with the oracle at tolerance 1e-10, plus g's profile.
WitnessReport g_witness();

inline double g_witness_ratio()
{
    return g_witness().ratio.value;
}

enum class Family
{
    power,         // t^p, p in [1.01, 20]
    power_combo,   // t^p - c t^4, p in [1.01, 6], c in [-1, 2]
    smoothed_tent, // hyp(t - 1/2, eps), eps in [1e-4, 1]
};

const char* to_string(Family family);

/// Accepts "power", "power-combo", "smoothed-tent".
std::optional<Family> parse_family(std::string_view name);

struct FamilyBox
{
    std::vector<std::string> names;
    std::vector<double> lower;
    std::vector<double> upper;
};

FamilyBox family_box(Family family);

/// Expression text of the member with the given parameters. Parameters are
/// printed in shortest round-trip form so the text re-parses exactly.
std::string family_expression(Family family, std::span<const double> params);

struct Candidate
{
    std::vector<double> params;
    bool feasible = false;
    double ratio = 0.0;
};

/// Profiles the member on [0, 1] and computes its ratio. Candidates that are
/// not sampled-convex, fail to evaluate, or are degenerate are infeasible.
Candidate evaluate_candidate(Family family, std::span<const double> params,
                             std::size_t profile_samples = kDefaultProfileSamples);

struct SearchResult
{
    Family family = Family::power;
    double best_ratio = 0.0;
    std::vector<double> witness;
    std::string witness_expression;
    std::size_t evaluations = 0;
    std::size_t feasible = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kMinSearchBudget = 100;

/// Derivative-free maximization of F over a family on [0, 1].
///
/// A jittered coarse grid (about 40% of the budget) seeds a cycle of
/// coordinate golden-section line searches around the incumbent. Ties are
/// broken toward the lexicographically smallest parameter vector, so the
/// result depends only on (family, budget, seed). The returned witness is
/// re-profiled with four times the sample count before it is accepted.
///
/// Throws InvalidArgument for budget < 100 and SearchError if no feasible
/// candidate is found.
SearchResult alpha_star_search(Family family, std::size_t budget, std::uint64_t seed);

} // namespace hh

#endif
