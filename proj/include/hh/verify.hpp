#ifndef HH_VERIFY_HPP
#define HH_VERIFY_HPP

#include "hh/expr.hpp"
#include "hh/interval.hpp"
#include "hh/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hh {

/// One integrand from {e^t, 1/t, -log t, t log t, t^p with p in [1.2, 6]}
/// on a random subinterval of (0.1, 5) at least 0.05 long.
struct CorpusCase
{
    std::string text;
    Expression f;
    Interval iv;
};

CorpusCase draw_corpus_case(Rng& rng);

/// Random positive pair, log-uniform in (1e-3, 1e3).
std::pair<double, double> draw_mean_pair(Rng& rng);

enum class Suite
{
    identities,
    inequalities,
    means,
    all,
};

std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite suite);

struct PropertyOutcome
{
    std::string name;
    std::string citation;
    std::size_t checked = 0;
    std::size_t failed = 0;
    double worst = 0.0; // largest violation (or residual) seen
    std::string first_failure;
};

struct VerifyOptions
{
    Suite suite = Suite::all;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    bool printed_constant = false;
};

/// Runs every property of the chosen suite on `samples` random cases each.
/// Deterministic for fixed options.
std::vector<PropertyOutcome> run_verification(const VerifyOptions& options);

} // namespace hh

#endif
