#include "pendrng/baselines.hpp"

#include <algorithm>

namespace pendrng {

namespace {

void store_be64(std::uint8_t* out, std::uint64_t v) noexcept
{
    for (int i = 0; i < 8; ++i)
        out[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
}

} // namespace

HashDrbg::HashDrbg(std::uint64_t seed) noexcept
{
    store_be64(seed_.data(), seed);
}

Sha1::Digest HashDrbg::block(const SeedBytes& seed_bytes, std::uint64_t index) noexcept
{
    std::array<std::uint8_t, 16> message{};
    std::copy(seed_bytes.begin(), seed_bytes.end(), message.begin());
    store_be64(message.data() + 8, index);
    return Sha1::hash(message);
}

std::uint32_t HashDrbg::next_word() noexcept
{
    if (offset_ == buffer_.size()) {
        buffer_ = block(seed_, counter_++);
        offset_ = 0;
    }
    const std::uint8_t* p = buffer_.data() + offset_;
    offset_ += 4;
    return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) | (std::uint32_t{p[2]} << 8) |
           std::uint32_t{p[3]};
}

} // namespace pendrng
