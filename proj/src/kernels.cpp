#include "pendrng/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pendrng::kernels {

namespace {

// Above this many histogram cells per thread the per-thread copies cost more
// than they save.
constexpr std::size_t kMaxLocalCells = std::size_t{1} << 20;

inline std::uint8_t wrapped_bit(std::span<const std::uint8_t> bits, std::size_t i) noexcept
{
    return bits[i < bits.size() ? i : i % bits.size()];
}

void count_range(std::span<const std::uint8_t> bits, unsigned m, std::size_t begin, std::size_t end,
                 std::uint32_t* counts) noexcept
{
    const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
    std::uint32_t idx = 0;
    for (unsigned j = 0; j + 1 < m; ++j)
        idx = (idx << 1) | wrapped_bit(bits, begin + j);
    for (std::size_t i = begin; i < end; ++i) {
        idx = ((idx << 1) | wrapped_bit(bits, i + m - 1)) & mask;
        ++counts[idx];
    }
}

std::uint32_t longest_run(const std::uint8_t* block, std::size_t len) noexcept
{
    std::uint32_t best = 0, run = 0;
    for (std::size_t i = 0; i < len; ++i) {
        run = block[i] ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

std::uint32_t ones(const std::uint8_t* block, std::size_t len) noexcept
{
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < len; ++i)
        total += block[i];
    return total;
}

int matrix_rank_at(std::span<const std::uint8_t> bits, std::size_t offset, unsigned rows,
                   unsigned cols)
{
    std::vector<std::uint64_t> m(rows, 0);
    for (unsigned r = 0; r < rows; ++r) {
        std::uint64_t row = 0;
        const std::uint8_t* src = bits.data() + offset + std::size_t{r} * cols;
        for (unsigned c = 0; c < cols; ++c)
            row = (row << 1) | src[c];
        m[r] = row;
    }
    return gf2_rank(std::move(m), cols);
}

} // namespace

int available_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<std::uint32_t> wrapped_pattern_counts(std::span<const std::uint8_t> bits, unsigned m,
                                                  Exec exec)
{
    if (m < 1 || m > 25)
        throw std::invalid_argument("wrapped_pattern_counts: m must lie in [1, 25]");
    const std::size_t cells = std::size_t{1} << m;
    std::vector<std::uint32_t> counts(cells, 0);
    const std::size_t n = bits.size();
    if (n == 0)
        return counts;

    const int threads = available_threads();
    if (exec == Exec::serial || threads == 1 || cells > kMaxLocalCells || n < 4096) {
        count_range(bits, m, 0, n, counts.data());
        return counts;
    }

    std::vector<std::vector<std::uint32_t>> locals(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
#ifdef _OPENMP
        const auto t = static_cast<std::size_t>(omp_get_thread_num());
        const auto nt = static_cast<std::size_t>(omp_get_num_threads());
#else
        const std::size_t t = 0, nt = 1;
#endif
        auto& local = locals[t];
        local.assign(cells, 0);
        count_range(bits, m, n * t / nt, n * (t + 1) / nt, local.data());
    }

#pragma omp parallel for schedule(static)
    for (std::size_t c = 0; c < cells; ++c)
        for (const auto& local : locals)
            if (!local.empty())
                counts[c] += local[c];
    return counts;
}

std::vector<std::uint32_t> block_ones(std::span<const std::uint8_t> bits, std::size_t block_length,
                                      Exec exec)
{
    if (block_length == 0)
        throw std::invalid_argument("block_ones: block length must be >= 1");
    const std::size_t blocks = bits.size() / block_length;
    std::vector<std::uint32_t> out(blocks);
    const auto nblocks = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b)
        out[b] = ones(bits.data() + b * block_length, block_length);
    return out;
}

std::vector<std::uint32_t> block_longest_runs(std::span<const std::uint8_t> bits,
                                              std::size_t block_length, Exec exec)
{
    if (block_length == 0)
        throw std::invalid_argument("block_longest_runs: block length must be >= 1");
    const std::size_t blocks = bits.size() / block_length;
    std::vector<std::uint32_t> out(blocks);
    const auto nblocks = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b)
        out[b] = longest_run(bits.data() + b * block_length, block_length);
    return out;
}

int gf2_rank(std::vector<std::uint64_t> rows, unsigned cols) noexcept
{
    int rank = 0;
    const std::size_t nrows = rows.size();
    for (unsigned c = 0; c < cols && static_cast<std::size_t>(rank) < nrows; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << (cols - 1 - c);
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < nrows && !(rows[pivot] & bit))
            ++pivot;
        if (pivot == nrows)
            continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const std::uint64_t pivot_row = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < nrows; ++r)
            if (r != static_cast<std::size_t>(rank) && (rows[r] & bit))
                rows[r] ^= pivot_row;
        ++rank;
    }
    return rank;
}

std::vector<int> gf2_matrix_ranks(std::span<const std::uint8_t> bits, unsigned rows, unsigned cols,
                                  Exec exec)
{
    if (rows == 0 || cols == 0 || cols > 64)
        throw std::invalid_argument("gf2_matrix_ranks: need rows >= 1 and 1 <= cols <= 64");
    const std::size_t per = std::size_t{rows} * cols;
    const std::size_t count = bits.size() / per;
    std::vector<int> ranks(count);
    const auto nmat = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::ptrdiff_t k = 0; k < nmat; ++k)
        ranks[k] = matrix_rank_at(bits, static_cast<std::size_t>(k) * per, rows, cols);
    return ranks;
}

} // namespace pendrng::kernels
