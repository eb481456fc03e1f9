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

#ifndef HGSTAB_SIGN_STATE_HPP
#define HGSTAB_SIGN_STATE_HPP

#include <cstdint>
#include <vector>

#include "hgstab/dyadic.hpp"
#include "hgstab/hypergraph.hpp"

namespace hgstab {

/// Dense-state size caps keep every check at desk scale.
inline constexpr int kMaxDenseQubits = 20;
inline constexpr int kMaxProductQubits = 16;
inline constexpr int kMaxDirectProbeBits = 24;

/// A hypergraph state stored as one sign per computational basis index: the
/// amplitude at tau is signs[tau] * 2^{-n/2} with the global factor implicit.
/// CZ, Z and X applications only permute entries or flip signs, so every
/// check on these states is exact integer arithmetic.
struct SignState {
  int n = 0;
  std::vector<std::int8_t> signs;  // size 2^n, entries +1 / -1

  friend bool operator==(const SignState&, const SignState&) = default;
};

/// A signed computational basis vector: sign * |index>. CZ and X map basis
/// vectors to basis vectors, which is what the operator-matrix checks use.
struct BasisKet {
  std::uint64_t index = 0;
  int sign = 1;

  friend bool operator==(const BasisKet&, const BasisKet&) = default;
};

/// Product state |0...0 +...+> with `zeros` leading |0> qubits out of n; the
/// remaining qubits sit in |+>. Used to extract expansion coefficients by
/// expectation values against the last vertex's stabilizer.
struct ProbeState {
  int zeros;
  int n;

  ProbeState(int zeros_in, int n_in);
};

/// signs[tau] = (-1)^{edge_count_in_support(h, tau)}. Requires h.n() <= 20.
SignState build_state(const Hypergraph& h);

/// Generalized CZ on the vertex set e (|e| = 1 is a single-qubit Z): flips
/// the sign wherever e is contained in the support. Involutive.
SignState apply_cz(SignState state, VertexSet e);

/// X on vertex l: signs'[tau] = signs[tau ^ bit(l)]. Involutive.
SignState apply_x(SignState state, int l);

/// The stabilizer of vertex l in direct form: CZ on every reduced neighbor
/// set e \ {l}, then X_l. build_state(h) is a fixed point for every l.
SignState direct_stabilizer(SignState state, const Hypergraph& h, int l);

/// Product of stabilizers g_i over the set bits of x, applied in ascending
/// vertex order (they commute). Requires h.n() <= 16.
SignState stabilizer_product(SignState state, const Hypergraph& h,
                             std::uint64_t x);

BasisKet apply_cz(BasisKet ket, VertexSet e);
BasisKet apply_x(BasisKet ket, int l);
BasisKet direct_stabilizer(BasisKet ket, const Hypergraph& h, int l);
BasisKet stabilizer_product(BasisKet ket, const Hypergraph& h, std::uint64_t x);

/// <state| X_l (x) Z_v |state>, exact. Requires l not in v.
DyadicRational expectation_zx(const SignState& state, int l, VertexSet v);

/// <psi_m| g_n |psi_m> evaluated by the literal sum over all 2^{n-m-1} basis
/// strings of the reduced (k_1 - 1, ..., k_p - 1) edge-count parity, with the
/// probe state |0^m +^{n-m}>. Requires n - m - 1 <= 24. This is the slow
/// independent route against which the closed-form coefficient engine is
/// checked.
DyadicRational probe_expectation_direct(int n, const UniformityProfile& profile,
                                        int m);

}  // namespace hgstab

#endif  // HGSTAB_SIGN_STATE_HPP
