#pragma once

#include <cmath>
#include <cstdint>

namespace geograph {

// Counter-seeded xoshiro256++ stream. Two streams with the same (seed, stream_id)
// produce the same draw sequence; parallel code derives child streams with
// distinct stream ids instead of sharing one stream.
//
// Distributions are hand-rolled on top of the raw generator so that output does
// not depend on the standard library implementation.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
        for (auto& si : s_) si = splitmix64(x);
        // a few warmup rounds decorrelate nearby (seed, stream) pairs
        for (int i = 0; i < 8; ++i) (void)next_u64();
    }

    RngStream child(std::uint64_t sub_id) const {
        return RngStream(seed_, stream_id_ * 0x100000001b3ULL + sub_id + 1);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform on [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1]
    double uniform_pos() { return 1.0 - uniform(); }

    // uniform integer in [0, n)
    std::uint64_t uniform_index(std::uint64_t n) {
        // multiply-shift; bias is negligible for n << 2^64
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    // standard normal, Box-Muller with cached second value
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // geometric number of failures before first success, P(success) = p in (0, 1]
    std::uint64_t geometric_skip(double p) {
        if (p >= 1.0) return 0;
        const double u = uniform_pos();
        const double g = std::floor(std::log(u) / std::log1p(-p));
        return g < 0 ? 0 : static_cast<std::uint64_t>(g);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stream-id blocks, one per subsystem, so independently seeded parts of a run
// never collide.
namespace stream_ids {
inline constexpr std::uint64_t kLatents = 1;
inline constexpr std::uint64_t kLanczosStart = 7;
inline constexpr std::uint64_t kGraphBlockBase = 10'000;
inline constexpr std::uint64_t kReplicateBase = 1'000'000;
inline constexpr std::uint64_t kMonteCarloBase = 2'000'000;
}  // namespace stream_ids

}  // namespace geograph
