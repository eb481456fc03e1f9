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

#include "hgstab/combinatorics.hpp"

#include <string>

namespace hgstab {

BigInt binom(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) {
    return 0;
  }
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
  return result;
}

std::pair<BigInt, BigInt> alt_binom_identity(unsigned m, unsigned r) {
  if (r > m) {
    throw std::invalid_argument("alt_binom_identity: requires r <= m");
  }
  BigInt lhs = 0;
  for (unsigned j = r; j <= m; ++j) {
    const BigInt term = binom(m + 1, j) * binom(j, r);
    if (j % 2 == 0) {
      lhs += term;
    } else {
      lhs -= term;
    }
  }
  BigInt rhs = binom(m + 1, r);
  if (m % 2 == 1) {
    rhs = -rhs;
  }
  if (lhs != rhs) {
    throw identity_violation("alt_binom_identity: sides differ at m=" +
                             std::to_string(m) + " r=" + std::to_string(r));
  }
  return {lhs, rhs};
}

}  // namespace hgstab
