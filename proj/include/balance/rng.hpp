#pragma once

#include <array>
#include <cstdint>

namespace balance {

// Counter-based pseudo-random generator (Philox 4x32, 10 rounds).
//
// A (seed, stream) pair fully determines the output sequence, using only
// integer arithmetic, so draws are bit-identical on every platform.
// Distinct stream ids select disjoint counter blocks of the same keyed
// permutation, which is what makes parallel replicate fan-out reproducible:
// give every replicate its own stream and the aggregate result no longer
// depends on scheduling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    // Fresh generator on the same seed but a different stream.
    Rng substream(std::uint64_t stream) const noexcept { return Rng(seed_, stream); }

    std::uint64_t next_u64() noexcept {
        if (buffer_pos_ >= 2) refill();
        return buffer_[buffer_pos_++];
    }

    // Uniform on [0, 1), 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer on [0, bound), rejection-sampled to avoid modulo bias.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t v = next_u64();
            if (v >= threshold) return v % bound;
        }
    }

  private:
    void refill() noexcept {
        std::uint32_t x0 = static_cast<std::uint32_t>(counter_);
        std::uint32_t x1 = static_cast<std::uint32_t>(counter_ >> 32);
        std::uint32_t x2 = static_cast<std::uint32_t>(stream_);
        std::uint32_t x3 = static_cast<std::uint32_t>(stream_ >> 32);
        std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
        std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                k0 += 0x9E3779B9u;
                k1 += 0xBB67AE85u;
            }
            const std::uint64_t p0 = 0xD2511F53ull * x0;
            const std::uint64_t p1 = 0xCD9E8D57ull * x2;
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            x0 = hi1 ^ x1 ^ k0;
            x1 = lo1;
            x2 = hi0 ^ x3 ^ k1;
            x3 = lo0;
        }
        buffer_[0] = (static_cast<std::uint64_t>(x1) << 32) | x0;
        buffer_[1] = (static_cast<std::uint64_t>(x3) << 32) | x2;
        buffer_pos_ = 0;
        ++counter_;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int buffer_pos_ = 2;
};

}  // namespace balance
