#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace soisim {

/// splitmix64 step (Vigna). Used for seeding only.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ — small, fast, and stable across platforms, so paths are
/// reproducible bit for bit anywhere (std::normal_distribution is not).
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

/// Derives the seed of one trial substream from (master_seed, stream_index).
/// Distinct indices give statistically independent streams.
inline std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t sm = master_seed;
    const std::uint64_t base = splitmix64_next(sm);
    sm = base ^ (stream_index + 0x9E3779B97F4A7C15ULL) * 0xD1342543DE82EF95ULL;
    return splitmix64_next(sm);
}

/// Standard-normal stream (Marsaglia polar transform over xoshiro256++).
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * gen_.uniform() - 1.0;
            v = 2.0 * gen_.uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    double uniform() { return gen_.uniform(); }

private:
    Xoshiro256pp gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace soisim
