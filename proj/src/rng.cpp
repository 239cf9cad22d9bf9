#include "vqlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace vqlab {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace {
std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}
}  // namespace

std::uint64_t Rng::substream_seed(std::uint64_t master, std::string_view tag,
                                  std::uint64_t index) {
    std::uint64_t s = splitmix64(master ^ fnv1a64(tag));
    return splitmix64(s ^ (index * 0x9E3779B97F4A7C15ULL + 1));
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
    if (n <= 1) return 0;
    // Accept only draws below the largest multiple of n to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
    std::uint64_t v = next_u64();
    while (v > limit) v = next_u64();
    return v % n;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<std::int64_t>(uniform_below(span));
}

double Rng::normal() {
    // Box-Muller; u1 is kept strictly positive so log is finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace vqlab
