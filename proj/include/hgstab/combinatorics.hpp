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

#ifndef HGSTAB_COMBINATORICS_HPP
#define HGSTAB_COMBINATORICS_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "hgstab/dyadic.hpp"

namespace hgstab {

/// Binomial coefficient C(n, k) as a big integer, with C(n, k) = 0 whenever
/// k < 0 or k > n.
BigInt binom(unsigned long n, long k);

/// C(s, k) mod 2. Evaluates the bitwise containment test (k AND s) == k, so
/// no big integers are materialized on the sign path.
inline bool binom_parity(std::uint64_t s, std::uint64_t k) {
  return (k & s) == k;
}

struct identity_violation : std::logic_error {
  using std::logic_error::logic_error;
};

/// For 0 <= r <= m, evaluates both sides of
///
///   sum_{j=r}^{m} (-1)^j C(m+1, j) C(j, r)  ==  (-1)^m C(m+1, r)
///
/// with the left side by direct summation and the right side in closed form.
/// Returns (lhs, rhs) and throws identity_violation if they differ. The
/// global sign (-1)^m is forced by direct computation: at m = 2, r = 0 the
/// sum is 1 - 3 + 3 = +1, which rules out an overall sign of -(-1)^m.
std::pair<BigInt, BigInt> alt_binom_identity(unsigned m, unsigned r);

}  // namespace hgstab

#endif  // HGSTAB_COMBINATORICS_HPP
