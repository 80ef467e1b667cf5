#include "simonls/spectral.hpp"

#include "simonls/error.hpp"

namespace simonls {

namespace {

constexpr uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

void walsh_hadamard(std::span<int64_t> values) {
  const size_t size = values.size();
  if (size == 0 || (size & (size - 1)) != 0) fail(ErrorCode::kInvalidArgument, "transform size not a power of two");
  for (size_t half = 1; half < size; half <<= 1) {
    for (size_t block = 0; block < size; block += 2 * half) {
      int64_t* lo = values.data() + block;
      int64_t* hi = lo + half;
      for (size_t j = 0; j < half; ++j) {
        const int64_t a = lo[j];
        const int64_t b = hi[j];
        lo[j] = a + b;
        hi[j] = a - b;
      }
    }
  }
}

void mobius(std::span<uint64_t> words, unsigned n) {
  const unsigned in_word = n < 6 ? n : 6;
  for (uint64_t& w : words) {
    for (unsigned k = 0; k < in_word; ++k) w ^= (w & kLowHalf[k]) << (1u << k);
  }
  for (size_t stride = 1; stride < words.size(); stride <<= 1) {
    for (size_t j = 0; j < words.size(); ++j) {
      if (j & stride) words[j] ^= words[j ^ stride];
    }
  }
}

void xor_permute(std::span<const uint64_t> in, std::span<uint64_t> out, unsigned n, uint64_t shift) {
  if (in.size() != out.size()) fail(ErrorCode::kDimensionMismatch, "xor_permute size mismatch");
  const uint64_t hi = shift >> 6;
  const unsigned lo = static_cast<unsigned>(shift & 63);
  const unsigned stages = n < 6 ? n : 6;
  for (size_t w = 0; w < out.size(); ++w) {
    uint64_t v = in[w ^ hi];
    for (unsigned k = 0; k < stages; ++k) {
      if ((lo >> k) & 1) {
        const unsigned d = 1u << k;
        v = ((v & kLowHalf[k]) << d) | ((v >> d) & kLowHalf[k]);
      }
    }
    out[w] = v;
  }
}

}  // namespace simonls
