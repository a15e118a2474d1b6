#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>

namespace freeword {

// splitmix64, used only to expand a user seed into xoshiro state.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** seeded via splitmix64. Fixed algorithm so that equal seeds
// give identical streams on every platform.
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform draw in (0,1]. The generation algorithm selects the first
    // cumulative bucket with cum[j-1] < r <= cum[j], so zero-probability
    // buckets are unreachable only if r can never be 0.
    double uniform_open_closed() {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;  // [0,1)
        return 1.0 - u;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

// Source of uniform draws in (0,1]. Tests substitute fixed replay streams.
using UniformSource = std::function<double()>;

inline UniformSource seeded_source(std::uint64_t seed) {
    return [rng = Xoshiro256StarStar(seed)]() mutable { return rng.uniform_open_closed(); };
}

}  // namespace freeword
