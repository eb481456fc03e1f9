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

#include <bit>
#include <utility>

#include "hgstab/kernels.hpp"

namespace hgstab::kernels {

namespace {

void flip_where_contains_scalar(std::int8_t* signs, std::size_t size,
                                std::uint64_t mask) {
  for (std::size_t tau = 0; tau < size; ++tau) {
    if ((tau & mask) == mask) {
      signs[tau] = static_cast<std::int8_t>(-signs[tau]);
    }
  }
}

void swap_bit_scalar(std::int8_t* signs, std::size_t size, unsigned bit) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t base = 0; base < size; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      std::swap(signs[base + off], signs[base + off + stride]);
    }
  }
}

std::int64_t zx_dot_scalar(const std::int8_t* signs, std::size_t size,
                           unsigned x_bit, std::uint64_t z_mask) {
  const std::size_t x_mask = std::size_t{1} << x_bit;
  std::int64_t total = 0;
  for (std::size_t tau = 0; tau < size; ++tau) {
    const int parity = std::popcount(tau & z_mask) & 1;
    const std::int64_t term =
        static_cast<std::int64_t>(signs[tau]) * signs[tau ^ x_mask];
    total += parity ? -term : term;
  }
  return total;
}

void zx_accumulate_scalar(std::int64_t* acc, const std::int8_t* signs,
                          std::size_t size, unsigned x_bit,
                          std::uint64_t z_mask, std::int64_t coeff) {
  const std::size_t x_mask = std::size_t{1} << x_bit;
  for (std::size_t tau = 0; tau < size; ++tau) {
    const int parity = std::popcount(tau & z_mask) & 1;
    const std::int64_t term = coeff * signs[tau ^ x_mask];
    acc[tau] += parity ? -term : term;
  }
}

}  // namespace

const KernelOps& scalar_kernels() {
  static const KernelOps ops = {
      "scalar",
      &flip_where_contains_scalar,
      &swap_bit_scalar,
      &zx_dot_scalar,
      &zx_accumulate_scalar,
  };
  return ops;
}

}  // namespace hgstab::kernels
