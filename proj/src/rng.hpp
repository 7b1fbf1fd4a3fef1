#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rlho {

// Deterministic random source used by every stochastic operation.
//
// std::mt19937_64 is fully specified by the standard, but the standard
// distributions are not, so all value mappings are done by hand here.
// Same seed => same stream of values on any platform/compiler.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform on [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1]
    double uniform_open0_closed1() {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    // uniform integer in [0, n), n >= 1; rejection keeps it unbiased
    uint64_t below(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return v % n;
    }

    // standard normal, Box-Muller
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        constexpr double two_pi = 6.283185307179586476925286766559;
        double u1 = uniform_open0_closed1();
        double u2 = uniform01();
        double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(two_pi * u2);
        has_spare_ = true;
        return mag * std::cos(two_pi * u2);
    }

    // splitmix64 finalizer; decorrelates derived seeds
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // stable sub-stream seed for (seed, stream)
    static uint64_t derive(uint64_t seed, uint64_t stream) {
        return mix(mix(seed) ^ mix(~stream));
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace rlho
