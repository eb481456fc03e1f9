// Copyright 2026 The hgstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2 variants of the sign-vector kernels. Compiled only when the build
// target supports -mavx2; selected at runtime via avx2_kernels().
//
// Within an aligned 32-byte block starting at tau0, tau = tau0 + lane, so any
// predicate on tau splits into a block-uniform part (bits >= 5) and a fixed
// 32-lane pattern (bits < 5) that is precomputed once per call.

#ifdef HGSTAB_BUILD_AVX2

#include <immintrin.h>

#include <bit>
#include <cstring>

#include "hgstab/kernels.hpp"

namespace hgstab::kernels {

namespace {

constexpr std::size_t kBlock = 32;
constexpr std::uint64_t kLaneMask = kBlock - 1;

__m256i load_bytes(const std::int8_t (&bytes)[kBlock]) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bytes));
}

// 0xFF exactly at lanes with (lane & mask_low) == mask_low.
__m256i containment_pattern(std::uint64_t mask_low) {
  std::int8_t bytes[kBlock];
  for (std::size_t l = 0; l < kBlock; ++l) {
    bytes[l] = ((l & mask_low) == mask_low) ? -1 : 0;
  }
  return load_bytes(bytes);
}

// +1 / -1 per lane by popcount parity of (lane & z_low).
__m256i parity_pattern(std::uint64_t z_low) {
  std::int8_t bytes[kBlock];
  for (std::size_t l = 0; l < kBlock; ++l) {
    bytes[l] = (std::popcount(l & z_low) & 1) ? -1 : 1;
  }
  return load_bytes(bytes);
}

// Shuffle indices for lane -> lane ^ (1 << bit), valid for bit <= 3 (the
// permutation stays within each 128-bit half).
__m256i xor_shuffle_indices(unsigned bit) {
  std::int8_t bytes[kBlock];
  for (std::size_t l = 0; l < kBlock; ++l) {
    bytes[l] = static_cast<std::int8_t>((l & 15) ^ (1u << bit));
  }
  return load_bytes(bytes);
}

// v permuted so lane l holds v[l ^ (1 << bit)], for bit < 5.
__m256i xor_permute(__m256i v, unsigned bit, __m256i shuffle_idx) {
  if (bit == 4) {
    return _mm256_permute2x128_si256(v, v, 0x01);
  }
  return _mm256_shuffle_epi8(v, shuffle_idx);
}

void flip_where_contains_avx2(std::int8_t* signs, std::size_t size,
                              std::uint64_t mask) {
  if (size < kBlock) {
    scalar_kernels().flip_where_contains(signs, size, mask);
    return;
  }
  const std::uint64_t mask_high = mask & ~kLaneMask;
  const std::uint64_t mask_low = mask & kLaneMask;
  const bool full_block = mask_low == 0;
  const __m256i pattern = containment_pattern(mask_low);
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t tau0 = 0; tau0 < size; tau0 += kBlock) {
    if ((tau0 & mask_high) != mask_high) {
      continue;
    }
    __m256i* p = reinterpret_cast<__m256i*>(signs + tau0);
    const __m256i v = _mm256_loadu_si256(p);
    const __m256i negated = _mm256_sub_epi8(zero, v);
    _mm256_storeu_si256(p, full_block ? negated
                                      : _mm256_blendv_epi8(v, negated, pattern));
  }
}

void swap_bit_avx2(std::int8_t* signs, std::size_t size, unsigned bit) {
  if (size < kBlock) {
    scalar_kernels().swap_bit(signs, size, bit);
    return;
  }
  if (bit < 5) {
    const __m256i idx = xor_shuffle_indices(bit < 4 ? bit : 0);
    for (std::size_t tau0 = 0; tau0 < size; tau0 += kBlock) {
      __m256i* p = reinterpret_cast<__m256i*>(signs + tau0);
      _mm256_storeu_si256(p, xor_permute(_mm256_loadu_si256(p), bit, idx));
    }
    return;
  }
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t base = 0; base < size; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; off += kBlock) {
      __m256i* a = reinterpret_cast<__m256i*>(signs + base + off);
      __m256i* b = reinterpret_cast<__m256i*>(signs + base + off + stride);
      const __m256i va = _mm256_loadu_si256(a);
      const __m256i vb = _mm256_loadu_si256(b);
      _mm256_storeu_si256(a, vb);
      _mm256_storeu_si256(b, va);
    }
  }
}

// The per-lane value coeff * parity_sign(tau & z_mask) * signs[tau ^ x] with
// coeff = 1, as a vector of +1/-1 bytes.
struct ZxBlockEval {
  unsigned x_bit;
  std::uint64_t x_mask;
  std::uint64_t z_mask;
  __m256i shuffle_idx;
  __m256i pattern_even;
  __m256i pattern_odd;

  explicit ZxBlockEval(unsigned x_bit_in, std::uint64_t z_mask_in)
      : x_bit(x_bit_in),
        x_mask(std::uint64_t{1} << x_bit_in),
        z_mask(z_mask_in),
        shuffle_idx(xor_shuffle_indices(x_bit_in < 4 ? x_bit_in : 0)),
        pattern_even(parity_pattern(z_mask_in & kLaneMask)),
        pattern_odd(_mm256_sub_epi8(_mm256_setzero_si256(),
                                    parity_pattern(z_mask_in & kLaneMask))) {}

  __m256i eval(const std::int8_t* signs, std::size_t tau0) const {
    __m256i shifted;
    if (x_bit < 5) {
      const __m256i v = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(signs + tau0));
      shifted = xor_permute(v, x_bit, shuffle_idx);
    } else {
      shifted = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(signs + (tau0 ^ x_mask)));
    }
    const bool block_odd = std::popcount(tau0 & z_mask) & 1;
    return _mm256_sign_epi8(shifted, block_odd ? pattern_odd : pattern_even);
  }
};

std::int64_t zx_dot_avx2(const std::int8_t* signs, std::size_t size,
                         unsigned x_bit, std::uint64_t z_mask) {
  if (size < kBlock) {
    return scalar_kernels().zx_dot(signs, size, x_bit, z_mask);
  }
  const ZxBlockEval eval(x_bit, z_mask);
  std::int64_t minus = 0;
  for (std::size_t tau0 = 0; tau0 < size; tau0 += kBlock) {
    const __m256i v = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(signs + tau0));
    const __m256i prod = _mm256_sign_epi8(eval.eval(signs, tau0), v);
    // Every byte is +1 or -1; the sign bits count the -1 terms.
    minus += std::popcount(
        static_cast<std::uint32_t>(_mm256_movemask_epi8(prod)));
  }
  return static_cast<std::int64_t>(size) - 2 * minus;
}

void accumulate_group(__m256i coeff, __m128i bytes, std::int64_t* dst) {
  const __m256i w = _mm256_cvtepi8_epi64(bytes);
  const __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), w);
  const __m256i addend =
      _mm256_sub_epi64(_mm256_xor_si256(coeff, neg), neg);
  __m256i* p = reinterpret_cast<__m256i*>(dst);
  _mm256_storeu_si256(p, _mm256_add_epi64(_mm256_loadu_si256(p), addend));
}

void zx_accumulate_avx2(std::int64_t* acc, const std::int8_t* signs,
                        std::size_t size, unsigned x_bit, std::uint64_t z_mask,
                        std::int64_t coeff) {
  if (size < kBlock) {
    scalar_kernels().zx_accumulate(acc, signs, size, x_bit, z_mask, coeff);
    return;
  }
  const ZxBlockEval eval(x_bit, z_mask);
  const __m256i coeff_v = _mm256_set1_epi64x(coeff);
  for (std::size_t tau0 = 0; tau0 < size; tau0 += kBlock) {
    const __m256i term = eval.eval(signs, tau0);
    const __m128i lo = _mm256_castsi256_si128(term);
    const __m128i hi = _mm256_extracti128_si256(term, 1);
    accumulate_group(coeff_v, lo, acc + tau0);
    accumulate_group(coeff_v, _mm_srli_si128(lo, 4), acc + tau0 + 4);
    accumulate_group(coeff_v, _mm_srli_si128(lo, 8), acc + tau0 + 8);
    accumulate_group(coeff_v, _mm_srli_si128(lo, 12), acc + tau0 + 12);
    accumulate_group(coeff_v, hi, acc + tau0 + 16);
    accumulate_group(coeff_v, _mm_srli_si128(hi, 4), acc + tau0 + 20);
    accumulate_group(coeff_v, _mm_srli_si128(hi, 8), acc + tau0 + 24);
    accumulate_group(coeff_v, _mm_srli_si128(hi, 12), acc + tau0 + 28);
  }
}

}  // namespace

const KernelOps* avx2_kernels() {
  static const KernelOps ops = {
      "avx2",
      &flip_where_contains_avx2,
      &swap_bit_avx2,
      &zx_dot_avx2,
      &zx_accumulate_avx2,
  };
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &ops : nullptr;
}

}  // namespace hgstab::kernels

#endif  // HGSTAB_BUILD_AVX2
