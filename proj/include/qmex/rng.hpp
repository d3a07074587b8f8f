#ifndef QMEX_RNG_HPP
#define QMEX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <complex>
#include <numbers>
#include <random>

namespace qmex {

/// Seed wrapper. Identical seed + identical configuration must give
/// bit-identical results regardless of thread count; all parallel code
/// derives one child seed per work item via child_seed().
struct RngSeed {
    std::uint64_t value = 42;
};

/// SplitMix64 finalizer over (seed, index). Used to derive independent
/// per-sample generators so that parallel schedules cannot change results.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// mt19937_64 with explicit uniform/Gaussian mappings. The mappings avoid
/// std::*_distribution so that the draw sequence is fixed by the engine
/// stream alone.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    explicit Rng(RngSeed seed) : engine_(seed.value) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; two engine draws per call.
    double gaussian() {
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Complex Gaussian with independent N(0,1) real and imaginary parts.
    std::complex<double> complex_gaussian() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qmex

#endif
