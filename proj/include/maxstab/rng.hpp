#pragma once

#include <cmath>
#include <cstdint>

namespace maxstab {

// PCG64 (XSL-RR 128/64) with explicit stream selection. Streams with
// distinct ids use distinct odd increments, so two streams derived from
// the same seed never share a sequence.
class RandomStream {
public:
    RandomStream() : RandomStream(0, 0) {}

    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {
        state_ = 0;
        inc_ = (static_cast<u128>(stream_id) << 1) | 1u;
        step();
        state_ += seed;
        step();
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        const u128 old = state_;
        step();
        const std::uint64_t xored =
            static_cast<std::uint64_t>(old >> 64) ^ static_cast<std::uint64_t>(old);
        const unsigned rot = static_cast<unsigned>(old >> 122);
        return (xored >> rot) | (xored << ((64u - rot) & 63u));
    }

    // Uniform on [0,1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on the open interval (0,1); safe to pass through log().
    double next_open() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    // Standard normal via Marsaglia's polar method; the spare value is
    // cached, so the cache is part of the reproducible stream state.
    double next_normal() {
        if (has_cached_normal_) {
            has_cached_normal_ = false;
            return cached_normal_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_normal_ = v * f;
        has_cached_normal_ = true;
        return u * f;
    }

    std::uint64_t next_below(std::uint64_t bound) {
        // Lemire-style rejection; bound must be >= 1.
        for (;;) {
            const std::uint64_t x = next_u64();
            const u128 m = static_cast<u128>(x) * bound;
            const std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= (-bound) % bound) return static_cast<std::uint64_t>(m >> 64);
        }
    }

private:
    using u128 = unsigned __int128;
    static constexpr u128 mult() {
        return (static_cast<u128>(0x2360ed051fc65da4ull) << 64) | 0x4385df649fccf645ull;
    }
    void step() { state_ = state_ * mult() + inc_; }

    u128 state_ = 0;
    u128 inc_ = 1;
    std::uint64_t seed_ = 0;
    std::uint64_t stream_id_ = 0;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;

    friend class RandomStreamAccess;
};

} // namespace maxstab
