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

#ifndef HGSTAB_EXPANSION_HPP
#define HGSTAB_EXPANSION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hgstab/dyadic.hpp"
#include "hgstab/hypergraph.hpp"
#include "hgstab/sign_state.hpp"

namespace hgstab {

inline constexpr int kMaxExpandQubits = 20;
inline constexpr int kMaxZxApplyQubits = 14;
inline constexpr int kMaxScanVertices = 128;

/// Local expansion of a generalized CZ on |v| = arity qubits:
///
///   CZ_v = (1 - 2^{1-arity}) I
///        + sum_{m=1}^{arity} (-1)^{m+1} 2^{1-arity} (sum of all Z-strings
///          of length m inside v).
///
/// Every Z-string of the same length shares one coefficient. Arity 1 gives
/// (0; +1), i.e. plain Z.
struct CzExpansion {
  int arity;
  DyadicRational constant;
  std::vector<DyadicRational> levels;  // levels[m - 1] multiplies length-m strings

  const DyadicRational& level_coeff(int m) const { return levels.at(m - 1); }
};

CzExpansion cz_expand(int arity);

/// The coefficients C_0 .. C_{n-1} of the stabilizer's local expansion
///
///   g_l = X_l ( C_0 I + sum_m C_m (sum of all Z-strings of length m
///               avoiding l) ),
///
/// which by the complete hypergraph's vertex-exchange symmetry depend only on
/// the string length m.
struct LocalExpansion {
  int n;
  UniformityProfile profile;
  std::vector<DyadicRational> coeffs;  // index m = 0 .. n-1
};

/// Closed form of <psi_m| g_n |psi_m| for the probe |0^m +^{n-m}>:
/// 2^{-(n-1-m)} * sum_{s=0}^{n-1-m} C(n-1-m, s) * (-1)^{parity}, where the
/// parity is that of sum_i C(s, k_i - 1), evaluated bitwise. Exact for any
/// n <= 128; the independent slow route is probe_expectation_direct.
DyadicRational probe_expectation(int n, const UniformityProfile& profile, int m);

/// C_j = sum_{r=0}^{j} (-1)^{j-r} C(j, r) * probe_expectation(n, profile, r).
LocalExpansion expansion_coefficients(int n, const UniformityProfile& profile);

/// Checks probe_expectation(m) == C_0 + sum_{j=1}^{m} C_j * C(m, j) for every
/// m in [0, n-1].
bool master_identity_holds(const LocalExpansion& expansion);

/// An operator X_l (x) sum_v c_v Z_v with v ranging over subsets of the
/// vertices other than l (the empty set carries the identity coefficient).
struct ZXPolynomial {
  struct Term {
    VertexSet vars;
    DyadicRational coeff;
  };

  int n;
  int x_site;
  std::vector<Term> terms;  // ascending by vars bitmask, empty set first
};

/// Materializes the expanded stabilizer of vertex l as a ZXPolynomial with
/// 2^{n-1} terms. Requires n <= 20.
ZXPolynomial expanded_stabilizer(int n, const UniformityProfile& profile, int l);

/// Term-by-term application: out[tau] = sum_v c_v * (-1)^{|v cap J(tau)|}
/// * signs[tau ^ bit(x_site)], in the unnormalized sign convention of
/// SignState. Requires state.n <= 14.
std::vector<DyadicRational> apply_zx_polynomial(const SignState& state,
                                                const ZXPolynomial& p);

/// Action on the basis vector |tau>: the polynomial sends it to value*|index>
/// with index = tau ^ bit(x_site); the value is the term-by-term sum. This is
/// one column of the operator's matrix.
std::pair<std::uint64_t, DyadicRational> zx_polynomial_column(
    const ZXPolynomial& p, std::uint64_t tau);

/// Divisibility rule for a vanishing constant coefficient, defined for
/// single-uniformity profiles only: true iff k - 1 is a power of two, say
/// 2^a, and n is a positive multiple of 2^{a+1}. The exact test is
/// expansion_coefficients(...).coeffs[0].is_zero(); the scan reports both so
/// disagreements are machine-visible.
bool c0_predicate(int n, const UniformityProfile& profile);

struct ScanRow {
  int n;
  int k;
  bool c0_zero_exact;
  bool c0_pred;
  DyadicRational min_coeff;
  int first_negative_index;  // -1 when every coefficient is >= 0
};

/// Coefficient-sign survey over 3 <= k < n <= n_max, k <= k_max (n_max <= 128).
std::vector<ScanRow> sign_scan(int n_max, int k_max);

/// Constant-coefficient survey over 2 <= k <= n <= n_max, k <= k_max; same
/// row layout as sign_scan.
std::vector<ScanRow> c0_scan(int n_max, int k_max);

}  // namespace hgstab

#endif  // HGSTAB_EXPANSION_HPP
