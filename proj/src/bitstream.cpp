#include "pendrng/bitstream.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

namespace pendrng {

Bitstream::Bitstream(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
{
    auto bad = std::find_if(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; });
    if (bad != bits_.end())
        throw std::invalid_argument("Bitstream: element " + std::to_string(bad - bits_.begin()) +
                                    " is not 0 or 1");
}

Bitstream Bitstream::from_string(std::string_view text)
{
    Bitstream out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '0' || c == '1')
            out.push_back(c == '1');
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw FormatError("unexpected character in bit string", i);
    }
    return out;
}

void Bitstream::append_word(std::uint32_t word, unsigned count)
{
    count = std::min(count, 32u);
    for (unsigned i = 0; i < count; ++i)
        bits_.push_back(static_cast<std::uint8_t>((word >> (31 - i)) & 1u));
}

void Bitstream::truncate(std::size_t n)
{
    if (n < bits_.size())
        bits_.resize(n);
}

std::size_t Bitstream::count_ones() const noexcept
{
    std::size_t ones = 0;
    for (auto b : bits_)
        ones += b;
    return ones;
}

Bitstream Bitstream::complement() const
{
    Bitstream out;
    out.bits_.resize(bits_.size());
    std::transform(bits_.begin(), bits_.end(), out.bits_.begin(),
                   [](std::uint8_t b) { return static_cast<std::uint8_t>(b ^ 1u); });
    return out;
}

std::string Bitstream::to_string() const
{
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i])
            s[i] = '1';
    return s;
}

std::optional<BitFormat> parse_bit_format(std::string_view name)
{
    if (name == "ascii")
        return BitFormat::ascii;
    if (name == "raw")
        return BitFormat::raw;
    return std::nullopt;
}

namespace {

std::string invalid_char_message(char c, std::size_t position)
{
    char buf[80];
    std::snprintf(buf, sizeof buf, "invalid character 0x%02x at byte offset %zu",
                  static_cast<unsigned>(static_cast<unsigned char>(c)), position);
    return buf;
}

} // namespace

Bitstream read_ascii(std::istream& in)
{
    Bitstream out;
    std::size_t position = 0;
    for (std::istreambuf_iterator<char> it(in), end; it != end; ++it, ++position) {
        char c = *it;
        if (c == '0' || c == '1')
            out.push_back(c == '1');
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw FormatError(invalid_char_message(c, position), position);
    }
    return out;
}

void write_ascii(std::ostream& out, const Bitstream& bits, std::size_t line_width)
{
    const auto s = bits.to_string();
    if (line_width == 0) {
        out << s << '\n';
        return;
    }
    for (std::size_t i = 0; i < s.size(); i += line_width)
        out << std::string_view(s).substr(i, line_width) << '\n';
}

Bitstream read_raw(std::istream& in, std::optional<std::size_t> bit_count)
{
    std::vector<char> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    const std::size_t available = bytes.size() * 8;
    const std::size_t n = bit_count.value_or(available);
    if (n > available)
        throw FormatError("raw input holds " + std::to_string(available) + " bits but " +
                              std::to_string(n) + " were requested",
                          bytes.size());
    Bitstream out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto byte = static_cast<unsigned char>(bytes[i / 8]);
        out.push_back((byte >> (7 - i % 8)) & 1u);
    }
    return out;
}

void write_raw(std::ostream& out, const Bitstream& bits)
{
    std::vector<char> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i])
            bytes[i / 8] = static_cast<char>(static_cast<unsigned char>(bytes[i / 8]) | (0x80u >> (i % 8)));
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

Bitstream load_bitstream(const std::filesystem::path& path, BitFormat format,
                         std::optional<std::size_t> bit_count)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    if (format == BitFormat::raw)
        return read_raw(in, bit_count);
    Bitstream bits = read_ascii(in);
    if (bit_count && *bit_count != bits.size()) {
        if (*bit_count > bits.size())
            throw FormatError("ascii input holds " + std::to_string(bits.size()) + " bits but " +
                                  std::to_string(*bit_count) + " were requested",
                              0);
        bits.truncate(*bit_count);
    }
    return bits;
}

void save_bitstream(const std::filesystem::path& path, const Bitstream& bits, BitFormat format)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    if (format == BitFormat::raw)
        write_raw(out, bits);
    else
        write_ascii(out, bits);
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

} // namespace pendrng
