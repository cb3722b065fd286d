#include "burgers_lab/rng.hpp"

#include <cmath>
#include <numbers>

namespace burgers {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t CounterRng::next_u64() {
    const std::uint64_t key = splitmix64(seed_ ^ splitmix64(stream_ + 0xD1B54A32D192ED03ULL));
    return splitmix64(key + counter_++);
}

double CounterRng::uniform() {
    // 53 random mantissa bits, shifted by half an ulp off zero.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace burgers
