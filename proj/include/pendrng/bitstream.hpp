#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pendrng {

/// An ordered sequence of bits, one byte per bit, every byte 0 or 1.
class Bitstream {
public:
    Bitstream() = default;

    /// Throws std::invalid_argument if any element is not 0 or 1.
    explicit Bitstream(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters; whitespace is skipped.
    static Bitstream from_string(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    void reserve(std::size_t n) { bits_.reserve(n); }
    void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }

    /// Appends the `count` most significant bits of `word`, MSB first.
    void append_word(std::uint32_t word, unsigned count = 32);

    void truncate(std::size_t n);

    std::size_t count_ones() const noexcept;
    Bitstream complement() const;
    std::string to_string() const;

    friend bool operator==(const Bitstream&, const Bitstream&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Anything that emits 32-bit words.
template <class G>
concept WordGenerator = requires(G& g) {
    { g.next_word() } -> std::same_as<std::uint32_t>;
};

/// Concatenates ceil(n/32) words MSB first and truncates to exactly n bits.
template <WordGenerator G>
Bitstream fill_bitstream(G& generator, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("fill_bitstream: bit count must be >= 1");
    Bitstream out;
    out.reserve(n + 31);
    while (out.size() < n)
        out.append_word(generator.next_word());
    out.truncate(n);
    return out;
}

enum class BitFormat { ascii, raw };

std::optional<BitFormat> parse_bit_format(std::string_view name);

/// Malformed bitstream input. `position` is the zero-based byte offset.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// ASCII: '0'/'1' characters, all whitespace ignored, anything else rejected.
Bitstream read_ascii(std::istream& in);
void write_ascii(std::ostream& out, const Bitstream& bits, std::size_t line_width = 0);

// RAW: packed bytes, MSB first. Without an explicit count every byte is used.
Bitstream read_raw(std::istream& in, std::optional<std::size_t> bit_count = std::nullopt);
void write_raw(std::ostream& out, const Bitstream& bits);

Bitstream load_bitstream(const std::filesystem::path& path, BitFormat format,
                         std::optional<std::size_t> bit_count = std::nullopt);
void save_bitstream(const std::filesystem::path& path, const Bitstream& bits, BitFormat format);

} // namespace pendrng
