#include "pendrng/baselines.hpp"

#include <stdexcept>

namespace pendrng {

Bitstream lcg_low_bit_stream(std::uint64_t seed, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("lcg_low_bit_stream: bit count must be >= 1");
    Lcg48 lcg(seed);
    Bitstream out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(lcg.next_word() & 1u);
    return out;
}

} // namespace pendrng
