#pragma once

// Butterfly transforms over 2^n-entry tables.

#include <cstdint>
#include <span>

namespace simonls {

// Unnormalized Walsh-Hadamard transform in place: out[y] = sum_x (-1)^{x.y} in[x].
// Size must be a power of two.
void walsh_hadamard(std::span<int64_t> values);

// Binary Moebius transform in place over a bit-packed table of 2^n entries
// (entry i is bit i%64 of word i/64). Self-inverse.
void mobius(std::span<uint64_t> words, unsigned n);

// Bit-permuted copy of a packed table: out[x] = in[x ^ shift].
void xor_permute(std::span<const uint64_t> in, std::span<uint64_t> out, unsigned n, uint64_t shift);

}  // namespace simonls
