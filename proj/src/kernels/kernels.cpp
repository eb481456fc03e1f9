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

#include <cstdlib>
#include <string_view>

#include "hgstab/kernels.hpp"

namespace hgstab::kernels {

#ifndef HGSTAB_BUILD_AVX2
const KernelOps* avx2_kernels() { return nullptr; }
#endif

const KernelOps& active_kernels() {
  static const KernelOps& chosen = []() -> const KernelOps& {
    const char* env = std::getenv("HGSTAB_KERNELS");
    const std::string_view requested = env ? env : "";
    if (requested == "scalar") {
      return scalar_kernels();
    }
    const KernelOps* avx2 = avx2_kernels();
    if (requested == "avx2") {
      return avx2 ? *avx2 : scalar_kernels();
    }
    return avx2 ? *avx2 : scalar_kernels();
  }();
  return chosen;
}

}  // namespace hgstab::kernels
