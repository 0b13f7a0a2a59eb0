#pragma once

// Data-parallel inner loops of the statistical battery. Every kernel has a
// serial reference; Exec::parallel runs the OpenMP version, which must
// produce bit-identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pendrng::kernels {

enum class Exec { serial, parallel };

/// Overlapping m-bit pattern counts over the sequence extended by its own
/// first m-1 bits (wrap-around). Index = pattern read MSB first. m in [1, 25].
std::vector<std::uint32_t> wrapped_pattern_counts(std::span<const std::uint8_t> bits, unsigned m,
                                                  Exec exec = Exec::parallel);

/// Number of ones in each of the floor(n/M) consecutive M-bit blocks.
std::vector<std::uint32_t> block_ones(std::span<const std::uint8_t> bits, std::size_t block_length,
                                      Exec exec = Exec::parallel);

/// Longest run of ones in each of the floor(n/M) consecutive M-bit blocks.
std::vector<std::uint32_t> block_longest_runs(std::span<const std::uint8_t> bits,
                                              std::size_t block_length, Exec exec = Exec::parallel);

/// Rank over GF(2) of a matrix whose rows are bit masks of `cols` bits
/// (cols <= 64).
int gf2_rank(std::vector<std::uint64_t> rows, unsigned cols) noexcept;

/// GF(2) ranks of the floor(n / (rows*cols)) consecutive rows x cols
/// matrices, each filled row-major.
std::vector<int> gf2_matrix_ranks(std::span<const std::uint8_t> bits, unsigned rows, unsigned cols,
                                  Exec exec = Exec::parallel);

/// Threads OpenMP would use for a parallel region here (1 without OpenMP).
int available_threads() noexcept;

} // namespace pendrng::kernels
