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

#ifndef HGSTAB_KERNELS_HPP
#define HGSTAB_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace hgstab::kernels {

// Inner loops over dense sign vectors: arrays of 2^n entries, each +1 or -1.
// Basis index tau runs over [0, size); bit (i - 1) of tau encodes vertex i.
//
// flip_where_contains  signs[tau] = -signs[tau] wherever (tau & mask) == mask
//                      (the diagonal action of a generalized CZ on the edge
//                      whose bitmask is `mask`).
// swap_bit             signs[tau] <-> signs[tau ^ (1 << bit)] in place (X on
//                      the qubit at `bit`).
// zx_dot               sum over tau of
//                          signs[tau] * parity_sign(tau & z_mask)
//                                     * signs[tau ^ (1 << x_bit)],
//                      where parity_sign is -1 for odd popcount, +1 for even.
// zx_accumulate        acc[tau] += coeff * parity_sign(tau & z_mask)
//                                        * signs[tau ^ (1 << x_bit)].
struct KernelOps {
  const char* name;
  void (*flip_where_contains)(std::int8_t* signs, std::size_t size,
                              std::uint64_t mask);
  void (*swap_bit)(std::int8_t* signs, std::size_t size, unsigned bit);
  std::int64_t (*zx_dot)(const std::int8_t* signs, std::size_t size,
                         unsigned x_bit, std::uint64_t z_mask);
  void (*zx_accumulate)(std::int64_t* acc, const std::int8_t* signs,
                        std::size_t size, unsigned x_bit, std::uint64_t z_mask,
                        std::int64_t coeff);
};

/// Reference implementation; always available, used as the equivalence oracle
/// for every vector variant.
const KernelOps& scalar_kernels();

/// AVX2 variant, or nullptr when the build target or the running CPU lacks
/// AVX2 support.
const KernelOps* avx2_kernels();

/// The variant all state operations route through. Picks the widest supported
/// variant once at first use; HGSTAB_KERNELS=scalar|avx2 in the environment
/// overrides the choice (requesting an unsupported variant falls back to
/// scalar).
const KernelOps& active_kernels();

}  // namespace hgstab::kernels

#endif  // HGSTAB_KERNELS_HPP
