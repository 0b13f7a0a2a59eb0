#include "pendrng/bitstream.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pendrng;

namespace {

struct CountingGenerator {
    std::uint32_t next = 0;
    std::uint32_t next_word() { return next++; }
};

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("pendrng_bitstream_" + name);
}

} // namespace

TEST(Bitstream, FromStringAndBack)
{
    const auto b = Bitstream::from_string("1011 0010\n1");
    EXPECT_EQ(b.size(), 9u);
    EXPECT_EQ(b.to_string(), "101100101");
    EXPECT_EQ(b.count_ones(), 5u);
    EXPECT_EQ(b.complement().to_string(), "010011010");
    EXPECT_THROW(Bitstream::from_string("10x1"), FormatError);
}

TEST(Bitstream, AppendWordIsMsbFirst)
{
    Bitstream b;
    b.append_word(0x80000001u);
    EXPECT_EQ(b.to_string(), "10000000000000000000000000000001");
    b.truncate(4);
    EXPECT_EQ(b.to_string(), "1000");
}

TEST(Bitstream, FillConcatenatesWordsAndTruncates)
{
    CountingGenerator g;
    const auto b = fill_bitstream(g, 40);
    EXPECT_EQ(b.size(), 40u);
    EXPECT_EQ(b.to_string(), std::string(32, '0') + "00000000");
    EXPECT_EQ(g.next, 2u);
    CountingGenerator h;
    EXPECT_THROW(fill_bitstream(h, 0), std::invalid_argument);
}

TEST(Bitstream, AsciiRoundTrip)
{
    const auto b = Bitstream::from_string("1101000111010");
    std::stringstream ss;
    write_ascii(ss, b, 5);
    EXPECT_EQ(ss.str(), "11010\n00111\n010\n");
    EXPECT_EQ(read_ascii(ss), b);
}

TEST(Bitstream, AsciiErrorCarriesPosition)
{
    std::istringstream in("0101\n01z1");
    try {
        read_ascii(in);
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.position(), 7u);
        EXPECT_NE(std::string(e.what()).find("0x7a"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("offset 7"), std::string::npos);
    }
}

TEST(Bitstream, RawRoundTrip)
{
    const auto b = Bitstream::from_string("10100101111");
    std::stringstream ss;
    write_raw(ss, b);
    EXPECT_EQ(ss.str(), std::string("\xA5\xE0", 2));
    std::istringstream in(ss.str());
    EXPECT_EQ(read_raw(in, 11), b);
    std::istringstream again(ss.str());
    EXPECT_EQ(read_raw(again).size(), 16u);
    std::istringstream shortin(ss.str());
    EXPECT_THROW(read_raw(shortin, 17), FormatError);
}

TEST(Bitstream, FileRoundTrip)
{
    const auto b = Bitstream::from_string("1110001010110100101");
    for (auto f : {BitFormat::ascii, BitFormat::raw}) {
        const auto path = temp_path(f == BitFormat::ascii ? "a.txt" : "r.bin");
        save_bitstream(path, b, f);
        const auto back = load_bitstream(path, f, f == BitFormat::raw ? std::optional<std::size_t>(b.size()) : std::nullopt);
        EXPECT_EQ(back, b);
        std::filesystem::remove(path);
    }
    EXPECT_THROW(load_bitstream(temp_path("missing"), BitFormat::ascii), std::runtime_error);
}

TEST(Bitstream, FormatNames)
{
    EXPECT_EQ(parse_bit_format("ascii"), BitFormat::ascii);
    EXPECT_EQ(parse_bit_format("raw"), BitFormat::raw);
    EXPECT_FALSE(parse_bit_format("hex").has_value());
}
