#ifndef HH_BOUNDS_HPP
#define HH_BOUNDS_HPP

#include "hh/expr.hpp"
#include "hh/interval.hpp"

#include <cstddef>

namespace hh {

/// Two-sided bracket (lower, upper) of a real quantity.
struct Enclosure
{
    double lower = 0.0;
    double upper = 0.0;

    double width() const { return upper - lower; }
    double center() const { return 0.5 * (lower + upper); }

    /// True when lower - slack <= v <= upper + slack.
    bool contains(double v, double slack = 0.0) const
    {
        return lower - slack <= v && v <= upper + slack;
    }
};

/// Builds an enclosure, rejecting lower > upper beyond 1e-12 relative slack.
Enclosure make_enclosure(double lower, double upper);

/// Endpoint/midpoint weights of a bound alpha*(f(a)+f(b)) + beta*f(mid),
/// normalized so that 2*alpha + beta = 1 and affine functions are exact.
class WeightPair
{
public:
    /// Both weights non-negative and 2*endpoint + midpoint = 1 within 1e-12.
    WeightPair(double endpoint_weight, double midpoint_weight);

    /// Midpoint weight 1 - 2*endpoint, endpoint weight in [0, 1/2].
    static WeightPair from_endpoint(double endpoint_weight);

    /// Any endpoint weight, negative midpoint weight allowed. Only for
    /// probing weights outside the valid range.
    static WeightPair probe(double endpoint_weight);

    double endpoint_weight() const noexcept { return endpoint_; }
    double midpoint_weight() const noexcept { return midpoint_; }

    /// N with these weights bounds the mean of every convex function from
    /// above only for endpoint weights in [1/4, 1/2].
    bool valid_upper_bound() const noexcept;

    /// M with these weights bounds the mean of every convex function from
    /// below only for the pure midpoint rule (endpoint weight 0).
    bool valid_lower_bound() const noexcept;

private:
    WeightPair() = default;

    double endpoint_ = 0.0;
    double midpoint_ = 1.0;
};

namespace weights {
inline const WeightPair midpoint{0.0, 1.0};
inline const WeightPair trapezoid{0.5, 0.0};
inline const WeightPair quarter{0.25, 0.5};
inline const WeightPair simpson{1.0 / 6.0, 2.0 / 3.0};
} // namespace weights

enum class Convexity
{
    yes,
    no,
    indeterminate,
};

enum class Shape
{
    convex,
    concave,
    indeterminate,
};

const char* to_string(Convexity c);
const char* to_string(Shape s);

/// Sampled sign classification of f'' (convexity of f) and f'''' (shape of
/// f'') over an interval. Samples only; nothing here is a proof.
struct ConvexityProfile
{
    Convexity f_convex = Convexity::indeterminate;
    Shape f2_shape = Shape::indeterminate;
    double min_f2 = 0.0;
    double max_f2 = 0.0;
    double min_f4 = 0.0;
    double max_f4 = 0.0;
    std::size_t samples = 0;
};

inline constexpr std::size_t kMinProfileSamples = 33;
inline constexpr std::size_t kDefaultProfileSamples = 65;

/// Samples order-4 jets at n Chebyshev points (first kind, interior) of iv.
/// A sign counts as non-negative when the sampled minimum is at least
/// -1e-10 * (1 + max |value|); mixed signs give the indeterminate state.
/// Throws InvalidArgument for n < 33 and DomainError at a bad sample point.
ConvexityProfile convexity_profile(const Expression& f, const Interval& iv,
                                   std::size_t n = kDefaultProfileSamples);

/// (f(mid), (f(a)+f(b))/2). Brackets the mean only when f is convex;
/// convexity is not checked here.
Enclosure classic_hh(const Expression& f, const Interval& iv);

/// alpha*(f(a)+f(b)) + beta*f(mid), exactly as written.
double n_value(const Expression& f, const Interval& iv, const WeightPair& w);
double m_value(const Expression& f, const Interval& iv, const WeightPair& w);

/// N(1/4, 1/2), the bound obtained by applying the trapezoid side of the
/// classic inequality on both halves of the interval.
double theorem1_upper(const Expression& f, const Interval& iv);

enum class DefectOrientation
{
    bound_minus_mean,
    mean_minus_bound,
};

/// Enclosure of the gap between a closed-form bound and the true mean.
struct DefectSandwich
{
    Enclosure defect;
    double bound = 0.0; // N(1/4,1/2) or N(1/6,2/3)
    DefectOrientation orientation = DefectOrientation::bound_minus_mean;

    /// The implied enclosure of the mean itself.
    Enclosure mean_enclosure() const;
};

/// Defect N(1/4,1/2) - mean enclosed by (b-a)^2/48 f''(mid) and
/// (b-a)^2/96 (f''(a) + f''(b)); which is lower depends on the shape of f''.
/// Throws HypothesisError for an indeterminate f'' shape.
DefectSandwich theorem2_defect_sandwich(const Expression& f, const Interval& iv,
                                        const ConvexityProfile& prof);

enum class BoundSide
{
    upper,
    lower,
};

struct OneSidedBound
{
    double value = 0.0;
    BoundSide side = BoundSide::upper;
};

/// N(1/6, 2/3): an upper bound on the mean when f'' is convex, a lower
/// bound when f'' is concave.
OneSidedBound theorem3_bound(const Expression& f, const Interval& iv, const ConvexityProfile& prof);

/// Simpson defect enclosed in [0, (b-a)^2/324 * |f''(a) + f''(b) - 2 f''(mid)|],
/// oriented N(1/6,2/3) - mean for convex f'' and mean - N(1/6,2/3) for
/// concave f''.
DefectSandwich theorem4_defect_sandwich(const Expression& f, const Interval& iv,
                                        const ConvexityProfile& prof);

struct LemmaTriple
{
    double midpoint_sum = 0.0; // 2 h(mid)
    double pair_sum = 0.0;     // h(x) + h(y)
    double endpoint_sum = 0.0; // h(a) + h(b)

    bool ordered(double slack = 0.0) const
    {
        return midpoint_sum <= pair_sum + slack && pair_sum <= endpoint_sum + slack;
    }
};

/// Symmetric-pair inequality for h at x = a t/2 + b(1 - t/2),
/// y = b t/2 + a(1 - t/2); t must lie in [0, 1].
LemmaTriple lemma1_check(const Expression& h, const Interval& iv, double t);

struct IdentityResidual
{
    double lhs = 0.0; // bound minus oracle mean
    double rhs = 0.0; // kernel integral side
    double residual = 0.0;
};

inline constexpr double kIdentityQuadTolerance = 1e-13;

/// N(1/4,1/2) - mean  versus  (b-a)^2/16 * int_0^1 t(1-t)[f''(x)+f''(y)] dt.
IdentityResidual lemma2_residual(const Expression& f, const Interval& iv,
                                 double tol = kIdentityQuadTolerance);

/// N(1/6,2/3) - mean  versus  (b-a)^2/48 * int_0^1 t(2-3t)[f''(x)+f''(y)] dt.
IdentityResidual lemma4_residual(const Expression& f, const Interval& iv,
                                 double tol = kIdentityQuadTolerance);

struct SimpsonEstimate
{
    double estimate = 0.0;  // Simpson's rule, as a mean value
    double err_bound = 0.0; // h^5/90 * max sampled |f''''| / (b-a)
    double max_abs_f4 = 0.0;
};

/// Simpson's rule with its fourth-derivative error bound. The maximum of
/// |f''''| is taken over n Chebyshev-Lobatto points (endpoints included).
SimpsonEstimate simpson_estimate(const Expression& f, const Interval& iv,
                                 std::size_t n = kDefaultProfileSamples);

/// Length-weighted union of (f(mid), N(1/4,1/2)) over a uniform split of iv
/// into 2^levels panels.
Enclosure bisected_enclosure(const Expression& f, const Interval& iv, int levels);

inline constexpr std::size_t kDefaultPanelBudget = std::size_t{1} << 20;

/// Bisects until the length-weighted enclosure width is at most tol. Each
/// panel contributes (f(mid), N(1/4,1/2)); panels are visited and summed
/// leftmost first. Requires prof.f_convex == yes.
Enclosure adaptive_enclosure(const Expression& f, const Interval& iv, double tol,
                             const ConvexityProfile& prof,
                             std::size_t max_panels = kDefaultPanelBudget);

} // namespace hh

#endif
