#ifndef VQLAB_RNG_HPP
#define VQLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace vqlab {

// Seeded random stream with platform-independent draw semantics.
//
// std::mt19937_64 output is fully specified by the standard, but the
// distribution adaptors are not, so every sampling helper here is
// implemented directly on the raw 64-bit stream. Substreams are derived
// by mixing (master seed, component tag, item index) so that independent
// parts of an experiment never share draws and parallel/serial execution
// produce identical results.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Substream seed = mix of master seed, a component tag, and an item index.
    static std::uint64_t substream_seed(std::uint64_t master, std::string_view tag,
                                        std::uint64_t index);
    static Rng substream(std::uint64_t master, std::string_view tag, std::uint64_t index) {
        return Rng(substream_seed(master, tag, index));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in {0, ..., n-1}, unbiased via rejection. n must be >= 1.
    std::uint64_t uniform_below(std::uint64_t n);

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller on the raw stream.
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Fair draw from {-1.0, +1.0}.
    double pm1() { return (next_u64() >> 63) ? 1.0 : -1.0; }

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer; also used for seed mixing.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace vqlab

#endif
