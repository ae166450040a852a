// rng.hpp — Counter-based random streams for reproducible sampling

#pragma once

#include <cmath>
#include <cstdint>

namespace gaw::rng {

// SplitMix64 step. Passes through all 2^64 states; good enough as a
// mixing function for seed derivation and as a raw bit generator.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2));
    return splitmix64(s);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix(mix(a, b), c);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return mix(mix(a, b, c), d);
}

// Self-contained generator. Deterministic across platforms: draws are
// produced from splitmix64 bits only, never from std:: distributions.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1), 53-bit resolution
    double next_u01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_u01();
    }

    // standard normal via Box-Muller; caches the second value
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_u01();
        double u2 = next_u01();
        while (u1 <= 0.0) u1 = next_u01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        return next_u64() % n;
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// One normal draw addressed by a counter tuple. Streams derived this way
// never overlap between realizations or points of different index.
inline double counter_normal(std::uint64_t seed, std::uint64_t realization,
                             std::uint64_t point, std::uint64_t channel) {
    Stream s(mix(seed, realization, point, channel));
    return s.next_normal();
}

} // namespace gaw::rng
