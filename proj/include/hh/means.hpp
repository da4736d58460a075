#ifndef HH_MEANS_HPP
#define HH_MEANS_HPP

#include "hh/bounds.hpp"

namespace hh {

/// Harmonic, geometric, logarithmic, identric, arithmetic and Gini means of
/// a pair of positive numbers. Ordered H <= G <= L <= I <= A <= S.
struct MeanSet
{
    double H = 0.0;
    double G = 0.0;
    double L = 0.0;
    double I = 0.0;
    double A = 0.0;
    double S = 0.0;
};

/// Relative gap (b - a) / min(a, b) below which L and I switch to series.
inline constexpr double kSeriesGap = 1e-6;

/// Throws InvalidArgument unless a, b are positive and finite.
MeanSet all_means(double a, double b);

/// 1/2 (1/A + 1/H) - 1/L without the cancellation of the direct formula.
double reciprocal_log_defect(double a, double b);

/// ((A+2G)/3 - 2/81 ((A-G)/L)^2 (A+G), (A+2G)/3). The lower end uses L
/// itself, so this certifies the inequality rather than estimating L.
Enclosure theorem5_L_enclosure(double a, double b);

/// ((A-H)/(6A^2), A(A-H)/(6H^2) (4/H - 3/A)) around 1/2 (1/A + 1/H) - 1/L.
Enclosure theorem5_recipL_enclosure(double a, double b);

/// Exponent of the identric-mean upper bound,
/// (b-a)^2/324 (1/a^2 + 1/b^2 - 2/A^2).
double theorem6_exponent(double a, double b);

/// The alternative exponent (A-H)^2/(162 H) (1/A + 2/H), which is exactly a
/// quarter of theorem6_exponent and too small to bound I.
double theorem6_printed_exponent(double a, double b);

/// (A^{2/3} G^{1/3}, A^{2/3} G^{1/3} exp(E)) around I(a, b). E is
/// theorem6_exponent unless use_printed_constant selects the quarter-size
/// variant, which fails to contain I and is kept for falsification checks.
Enclosure theorem6_I_enclosure(double a, double b, bool use_printed_constant = false);

/// (A^{4/3} S^{2/3} exp(-4/81 (A-H)^2/(A H)), A^{4/3} S^{2/3}) around
/// I(a^2, b^2), with A, S, H taken at (a, b).
Enclosure theorem6_Isq_enclosure(double a, double b);

} // namespace hh

#endif
