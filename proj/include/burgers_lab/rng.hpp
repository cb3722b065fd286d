// Counter-based pseudo-random numbers.
//
// Every draw is a pure function of (seed, stream, counter), hashed with the
// splitmix64 finalizer. Normals come from Box-Muller on two consecutive
// uniforms. The same triple gives the same value in any language that
// implements the finalizer, which std::normal_distribution does not promise.
#pragma once

#include <cstdint>

namespace burgers {

std::uint64_t splitmix64(std::uint64_t x);

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64();
    // Uniform on (0, 1); never returns 0 so logarithms stay finite.
    double uniform();
    double normal();

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace burgers
