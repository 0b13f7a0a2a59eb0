#include "pendrng/sha1.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace pendrng {

void Sha1::reset() noexcept
{
    h_ = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
    block_len_ = 0;
    total_len_ = 0;
}

void Sha1::compress(const std::uint8_t* block) noexcept
{
    std::uint32_t w[80];
    for (int i = 0; i < 16; ++i)
        w[i] = (std::uint32_t{block[4 * i]} << 24) | (std::uint32_t{block[4 * i + 1]} << 16) |
               (std::uint32_t{block[4 * i + 2]} << 8) | std::uint32_t{block[4 * i + 3]};
    for (int i = 16; i < 80; ++i)
        w[i] = std::rotl(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);

    std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3], e = h_[4];
    for (int i = 0; i < 80; ++i) {
        std::uint32_t f, k;
        if (i < 20) {
            f = (b & c) | (~b & d);
            k = 0x5A827999u;
        } else if (i < 40) {
            f = b ^ c ^ d;
            k = 0x6ED9EBA1u;
        } else if (i < 60) {
            f = (b & c) | (b & d) | (c & d);
            k = 0x8F1BBCDCu;
        } else {
            f = b ^ c ^ d;
            k = 0xCA62C1D6u;
        }
        const std::uint32_t t = std::rotl(a, 5) + f + e + k + w[i];
        e = d;
        d = c;
        c = std::rotl(b, 30);
        b = a;
        a = t;
    }
    h_[0] += a;
    h_[1] += b;
    h_[2] += c;
    h_[3] += d;
    h_[4] += e;
}

void Sha1::update(std::span<const std::uint8_t> data) noexcept
{
    total_len_ += data.size();
    std::size_t i = 0;
    if (block_len_ > 0) {
        const std::size_t take = std::min(data.size(), block_.size() - block_len_);
        std::memcpy(block_.data() + block_len_, data.data(), take);
        block_len_ += take;
        i = take;
        if (block_len_ < block_.size())
            return;
        compress(block_.data());
        block_len_ = 0;
    }
    for (; i + 64 <= data.size(); i += 64)
        compress(data.data() + i);
    if (i < data.size()) {
        std::memcpy(block_.data(), data.data() + i, data.size() - i);
        block_len_ = data.size() - i;
    }
}

void Sha1::update(std::string_view text) noexcept
{
    update(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Sha1::Digest Sha1::finalize() noexcept
{
    const std::uint64_t bit_len = total_len_ * 8;
    std::uint8_t pad[72] = {0x80};
    const std::size_t pad_len = (block_len_ < 56 ? 56 - block_len_ : 120 - block_len_);
    for (int i = 0; i < 8; ++i)
        pad[pad_len + i] = static_cast<std::uint8_t>(bit_len >> (56 - 8 * i));
    update(std::span<const std::uint8_t>(pad, pad_len + 8));

    Digest out;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j)
            out[4 * i + j] = static_cast<std::uint8_t>(h_[i] >> (24 - 8 * j));
    reset();
    return out;
}

Sha1::Digest Sha1::hash(std::span<const std::uint8_t> data) noexcept
{
    Sha1 s;
    s.update(data);
    return s.finalize();
}

Sha1::Digest Sha1::hash(std::string_view text) noexcept
{
    Sha1 s;
    s.update(text);
    return s.finalize();
}

std::string to_hex(std::span<const std::uint8_t> bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

} // namespace pendrng
