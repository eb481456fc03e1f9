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

#include "hgstab/sign_state.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "hgstab/combinatorics.hpp"
#include "hgstab/kernels.hpp"

namespace hgstab {

namespace {

void check_vertex(int l, int n, const char* what) {
  if (l < 1 || l > n) {
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(l) + " out of range 1.." +
                                std::to_string(n));
  }
}

void check_edge(VertexSet e, int n, const char* what) {
  if (e.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty vertex set");
  }
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (!e.subset_of(VertexSet::from_bits(all))) {
    throw std::invalid_argument(std::string(what) + ": vertex set " +
                                e.to_string() + " not contained in {1.." +
                                std::to_string(n) + "}");
  }
}

}  // namespace

ProbeState::ProbeState(int zeros_in, int n_in) : zeros(zeros_in), n(n_in) {
  if (n < 1) {
    throw std::invalid_argument("ProbeState: n must be positive");
  }
  if (zeros < 0 || zeros > n - 1) {
    throw std::invalid_argument("ProbeState: zeros out of range 0.." +
                                std::to_string(n - 1));
  }
}

SignState build_state(const Hypergraph& h) {
  if (h.n() > kMaxDenseQubits) {
    throw std::domain_error("build_state: n=" + std::to_string(h.n()) +
                            " exceeds dense cap " +
                            std::to_string(kMaxDenseQubits));
  }
  SignState state;
  state.n = h.n();
  state.signs.assign(std::size_t{1} << h.n(), 1);
  const auto& ops = kernels::active_kernels();
  for (VertexSet e : h.edges()) {
    ops.flip_where_contains(state.signs.data(), state.signs.size(), e.bits());
  }
  return state;
}

SignState apply_cz(SignState state, VertexSet e) {
  check_edge(e, state.n, "apply_cz");
  kernels::active_kernels().flip_where_contains(state.signs.data(),
                                                state.signs.size(), e.bits());
  return state;
}

SignState apply_x(SignState state, int l) {
  check_vertex(l, state.n, "apply_x");
  kernels::active_kernels().swap_bit(state.signs.data(), state.signs.size(),
                                     static_cast<unsigned>(l - 1));
  return state;
}

SignState direct_stabilizer(SignState state, const Hypergraph& h, int l) {
  check_vertex(l, h.n(), "direct_stabilizer");
  for (VertexSet reduced : neighborhood(h, l)) {
    state = apply_cz(std::move(state), reduced);
  }
  return apply_x(std::move(state), l);
}

SignState stabilizer_product(SignState state, const Hypergraph& h,
                             std::uint64_t x) {
  if (h.n() > kMaxProductQubits) {
    throw std::domain_error("stabilizer_product: n=" + std::to_string(h.n()) +
                            " exceeds cap " +
                            std::to_string(kMaxProductQubits));
  }
  if (h.n() < 64 && (x >> h.n()) != 0) {
    throw std::invalid_argument("stabilizer_product: x out of range for n=" +
                                std::to_string(h.n()));
  }
  for (int v = 1; v <= h.n(); ++v) {
    if ((x >> (v - 1)) & 1u) {
      state = direct_stabilizer(std::move(state), h, v);
    }
  }
  return state;
}

BasisKet apply_cz(BasisKet ket, VertexSet e) {
  if (e.subset_of(VertexSet::from_bits(ket.index))) {
    ket.sign = -ket.sign;
  }
  return ket;
}

BasisKet apply_x(BasisKet ket, int l) {
  ket.index ^= std::uint64_t{1} << (l - 1);
  return ket;
}

BasisKet direct_stabilizer(BasisKet ket, const Hypergraph& h, int l) {
  check_vertex(l, h.n(), "direct_stabilizer");
  for (VertexSet reduced : neighborhood(h, l)) {
    ket = apply_cz(ket, reduced);
  }
  return apply_x(ket, l);
}

BasisKet stabilizer_product(BasisKet ket, const Hypergraph& h,
                            std::uint64_t x) {
  for (int v = 1; v <= h.n(); ++v) {
    if ((x >> (v - 1)) & 1u) {
      ket = direct_stabilizer(ket, h, v);
    }
  }
  return ket;
}

DyadicRational expectation_zx(const SignState& state, int l, VertexSet v) {
  check_vertex(l, state.n, "expectation_zx");
  if (!v.empty()) {
    check_edge(v, state.n, "expectation_zx");
  }
  if (v.contains(l)) {
    throw std::invalid_argument("expectation_zx: X site " + std::to_string(l) +
                                " also appears in the Z set");
  }
  const std::int64_t sum = kernels::active_kernels().zx_dot(
      state.signs.data(), state.signs.size(), static_cast<unsigned>(l - 1),
      v.bits());
  return DyadicRational(BigInt(static_cast<long>(sum)),
                        static_cast<unsigned>(state.n));
}

DyadicRational probe_expectation_direct(int n, const UniformityProfile& profile,
                                        int m) {
  profile.validate_for(n);
  const ProbeState probe(m, n);
  const int width = n - probe.zeros - 1;
  if (width > kMaxDirectProbeBits) {
    throw std::domain_error("probe_expectation_direct: 2^" +
                            std::to_string(width) + " terms exceed cap 2^" +
                            std::to_string(kMaxDirectProbeBits));
  }
  // Parity of the reduced edge count depends on the string only through its
  // Hamming weight; the enumeration below still walks every string.
  std::vector<int> parity(width + 1, 0);
  for (int s = 0; s <= width; ++s) {
    BigInt reduced_edges = 0;
    for (int k : profile.ks()) {
      reduced_edges += binom(static_cast<unsigned long>(s), k - 1);
    }
    parity[s] = static_cast<int>(mpz_odd_p(reduced_edges.get_mpz_t()));
  }
  std::int64_t acc = 0;
  const std::uint64_t strings = std::uint64_t{1} << width;
  for (std::uint64_t tau = 0; tau < strings; ++tau) {
    acc += parity[std::popcount(tau)] ? -1 : 1;
  }
  return DyadicRational(BigInt(static_cast<long>(acc)),
                        static_cast<unsigned>(width));
}

}  // namespace hgstab
