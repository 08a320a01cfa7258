#ifndef CAYT_RNG_HPP
#define CAYT_RNG_HPP

#include <cstdint>

namespace cayt {

// Counter-based splittable stream: stream(seed, i) is independent of
// stream(seed, j) for i != j, so samples can be sharded across workers
// while keeping results byte-identical for a given seed.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            const std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace cayt

#endif
