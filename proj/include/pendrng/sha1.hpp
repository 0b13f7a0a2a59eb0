#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace pendrng {

/// Streaming SHA-1 (FIPS 180-4).
class Sha1 {
public:
    using Digest = std::array<std::uint8_t, 20>;

    Sha1() noexcept { reset(); }

    void reset() noexcept;
    void update(std::span<const std::uint8_t> data) noexcept;
    void update(std::string_view text) noexcept;
    /// Pads, returns the digest, and resets.
    Digest finalize() noexcept;

    static Digest hash(std::span<const std::uint8_t> data) noexcept;
    static Digest hash(std::string_view text) noexcept;

private:
    void compress(const std::uint8_t* block) noexcept;

    std::array<std::uint32_t, 5> h_{};
    std::array<std::uint8_t, 64> block_{};
    std::size_t block_len_ = 0;
    std::uint64_t total_len_ = 0;
};

std::string to_hex(std::span<const std::uint8_t> bytes);

} // namespace pendrng
