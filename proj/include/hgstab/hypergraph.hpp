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

#ifndef HGSTAB_HYPERGRAPH_HPP
#define HGSTAB_HYPERGRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hgstab {

/// Vertex counts are capped so a VertexSet fits one machine word.
inline constexpr int kMaxVertices = 64;

/// Subset of the vertices {1, ..., n}, stored as a bitset. Bit (i - 1) of a
/// basis index or of a VertexSet always encodes vertex i; this convention is
/// fixed once and used everywhere, including the file formats.
class VertexSet {
 public:
  constexpr VertexSet() : bits_(0) {}
  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// Builds from 1-based vertex labels, e.g. VertexSet::of({1, 2, 3}).
  static VertexSet of(std::initializer_list<int> vertices);

  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
  bool subset_of(VertexSet other) const {
    return (bits_ & other.bits_) == bits_;
  }
  VertexSet with(int v) const {
    return from_bits(bits_ | (std::uint64_t{1} << (v - 1)));
  }
  VertexSet without(int v) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << (v - 1)));
  }

  /// Ascending 1-based vertex labels.
  std::vector<int> vertices() const;
  /// Renders "{1,2,3}"; "{}" when empty.
  std::string to_string() const;

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
  friend bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_;
};

/// Support of a computational-basis index: the set of vertices whose bit is
/// set in tau. Requires 0 <= tau < 2^n.
VertexSet support(std::uint64_t tau, int n);

/// The strictly increasing tuple (k_1, ..., k_p) of distinct uniformities
/// defining a complete k-uniform hypergraph. Shape constraints (each k_i >= 2,
/// strictly increasing, nonempty) are enforced at construction; the upper
/// bound k_p <= n is checked against a vertex count via validate_for.
class UniformityProfile {
 public:
  explicit UniformityProfile(std::vector<int> ks);
  UniformityProfile(std::initializer_list<int> ks)
      : UniformityProfile(std::vector<int>(ks)) {}

  const std::vector<int>& ks() const { return ks_; }
  bool single() const { return ks_.size() == 1; }
  int max_k() const { return ks_.back(); }

  /// Throws std::invalid_argument unless 2 <= k_1 < ... < k_p <= n.
  void validate_for(int n) const;

  /// Parses a comma-separated list such as "3" or "2,3".
  static UniformityProfile parse(const std::string& text);
  /// Renders "2,3".
  std::string to_string() const;

  friend bool operator==(const UniformityProfile& a, const UniformityProfile& b) {
    return a.ks_ == b.ks_;
  }

 private:
  std::vector<int> ks_;
};

/// A hypergraph on vertices {1, ..., n}: every edge is a vertex subset of
/// cardinality >= 2 and edges are distinct. Immutable after construction;
/// edges are kept sorted so equal hypergraphs compare equal.
class Hypergraph {
 public:
  Hypergraph(int n, std::vector<VertexSet> edges);

  int n() const { return n_; }
  const std::vector<VertexSet>& edges() const { return edges_; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<VertexSet> edges_;
};

/// The complete k-uniform hypergraph on n vertices: all subsets of {1..n}
/// whose cardinality is one of the profile's k_i.
Hypergraph complete_k_uniform(int n, const UniformityProfile& profile);

/// The reduced neighbor sets { e \ {l} : e in E, l in e }. Elements may have
/// cardinality 1: the stabilizer applies CZ on e \ {l}, which degenerates to
/// a single-qubit Z when |e| = 2.
std::vector<VertexSet> neighborhood(const Hypergraph& h, int l);

/// Number of edges contained in the support of tau.
std::uint64_t edge_count_in_support(const Hypergraph& h, std::uint64_t tau);

}  // namespace hgstab

#endif  // HGSTAB_HYPERGRAPH_HPP
