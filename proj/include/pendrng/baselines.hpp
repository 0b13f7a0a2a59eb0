#pragma once

#include "pendrng/bitstream.hpp"
#include "pendrng/sha1.hpp"

#include <array>
#include <cstddef>
#include <cstdint>

namespace pendrng {

struct LcgStep {
    std::uint64_t state;
    std::uint32_t output;
};

/// 48-bit linear congruential generator with the java.util.Random constants.
class Lcg48 {
public:
    static constexpr std::uint64_t kMultiplier = 0x5DEECE66DULL;
    static constexpr std::uint64_t kIncrement = 0xBULL;
    static constexpr std::uint64_t kMask = (std::uint64_t{1} << 48) - 1;

    /// Seeds with the scramble state = (seed ^ multiplier) mod 2^48.
    explicit Lcg48(std::uint64_t seed) noexcept : state_((seed ^ kMultiplier) & kMask) {}

    /// new_state = (a*state + c) mod 2^48; output = new_state >> 16.
    static constexpr LcgStep next(std::uint64_t state) noexcept
    {
        const std::uint64_t s = (kMultiplier * state + kIncrement) & kMask;
        return {s, static_cast<std::uint32_t>(s >> 16)};
    }

    std::uint32_t next_word() noexcept
    {
        const LcgStep r = next(state_);
        state_ = r.state;
        return r.output;
    }

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// Output bit 0 (state bit 16) of consecutive LCG outputs. Periodic with
/// period 2^17; used as a battery-sensitivity fixture.
Bitstream lcg_low_bit_stream(std::uint64_t seed, std::size_t n);

/// Counter-mode SHA-1 generator:
/// block_i = SHA-1(seed_bytes || big-endian 64-bit i), consumed as five
/// big-endian words per block.
class HashDrbg {
public:
    using SeedBytes = std::array<std::uint8_t, 8>;

    /// seed_bytes is the big-endian encoding of `seed`.
    explicit HashDrbg(std::uint64_t seed) noexcept;
    explicit HashDrbg(const SeedBytes& seed_bytes) noexcept : seed_(seed_bytes) {}

    static Sha1::Digest block(const SeedBytes& seed_bytes, std::uint64_t index) noexcept;

    std::uint32_t next_word() noexcept;

    std::uint64_t counter() const noexcept { return counter_; }
    const SeedBytes& seed_bytes() const noexcept { return seed_; }

private:
    SeedBytes seed_;
    std::uint64_t counter_ = 0;
    Sha1::Digest buffer_{};
    std::size_t offset_ = sizeof(Sha1::Digest);
};

} // namespace pendrng
