#ifndef HH_RNG_HPP
#define HH_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace hh {

/// Seeded generator whose output is identical on every platform: the
/// engine is fully specified and the real mapping is done by hand rather
/// than through implementation-defined distributions.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Log-uniform in [lo, hi], lo > 0.
    double log_uniform(double lo, double hi)
    {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    /// Uniform integer in [0, n).
    std::uint64_t index(std::uint64_t n) { return static_cast<std::uint64_t>(unit() * n); }

private:
    std::mt19937_64 engine_;
};

} // namespace hh

#endif
