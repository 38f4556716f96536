#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>

namespace mirrorcell {

// Counter-based deterministic generator. Each (seed, stream ids) pair names
// an independent stream; drawing never mutates global state, so runs with the
// same seed reproduce bit for bit regardless of evaluation order elsewhere.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream = {})
        : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {
        for (std::uint64_t id : stream) key_ = mix(key_ ^ mix(id + 0xbf58476d1ce4e5b9ull));
    }

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    // Uniform in [0,1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Uniform on the closed unit disk (rejection from the square).
    std::complex<double> unit_disk() {
        for (;;) {
            double x = uniform(-1.0, 1.0);
            double y = uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return {x, y};
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace mirrorcell
