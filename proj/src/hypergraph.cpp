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

#include "hgstab/hypergraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hgstab {

namespace {

void check_vertex_range(int v, int n, const char* what) {
  if (v < 1 || v > n) {
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(v) + " out of range 1.." +
                                std::to_string(n));
  }
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) {
      throw std::invalid_argument("VertexSet::of: vertex out of range 1..64");
    }
    bits |= std::uint64_t{1} << (v - 1);
  }
  return from_bits(bits);
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  std::uint64_t rest = bits_;
  while (rest != 0) {
    const int bit = std::countr_zero(rest);
    out.push_back(bit + 1);
    rest &= rest - 1;
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : vertices()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

VertexSet support(std::uint64_t tau, int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("support: vertex count out of range 1..64");
  }
  if (n < kMaxVertices && tau >> n != 0) {
    throw std::invalid_argument("support: basis index out of range for n=" +
                                std::to_string(n));
  }
  return VertexSet::from_bits(tau);
}

UniformityProfile::UniformityProfile(std::vector<int> ks) : ks_(std::move(ks)) {
  if (ks_.empty()) {
    throw std::invalid_argument("invalid profile: empty");
  }
  int prev = 1;
  for (int k : ks_) {
    if (k < 2) {
      throw std::invalid_argument("invalid profile: uniformity " +
                                  std::to_string(k) + " < 2");
    }
    if (k <= prev) {
      throw std::invalid_argument(
          "invalid profile: uniformities must be strictly increasing");
    }
    prev = k;
  }
}

void UniformityProfile::validate_for(int n) const {
  if (max_k() > n) {
    throw std::invalid_argument("invalid profile: uniformity " +
                                std::to_string(max_k()) + " exceeds n=" +
                                std::to_string(n));
  }
}

UniformityProfile UniformityProfile::parse(const std::string& text) {
  std::vector<int> ks;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid profile: cannot parse '" + item + "'");
    }
    if (pos != item.size()) {
      throw std::invalid_argument("invalid profile: cannot parse '" + item + "'");
    }
    ks.push_back(value);
  }
  return UniformityProfile(std::move(ks));
}

std::string UniformityProfile::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < ks_.size(); ++i) {
    if (i > 0) os << ',';
    os << ks_[i];
  }
  return os.str();
}

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("Hypergraph: vertex count out of range 1..64");
  }
  const VertexSet all =
      VertexSet::from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  for (VertexSet e : edges_) {
    if (e.size() < 2) {
      throw std::invalid_argument("Hypergraph: edge " + e.to_string() +
                                  " has fewer than 2 vertices");
    }
    if (!e.subset_of(all)) {
      throw std::invalid_argument("Hypergraph: edge " + e.to_string() +
                                  " not contained in {1.." + std::to_string(n) + "}");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("Hypergraph: duplicate edge");
  }
}

Hypergraph complete_k_uniform(int n, const UniformityProfile& profile) {
  profile.validate_for(n);
  std::vector<VertexSet> edges;
  for (int k : profile.ks()) {
    // Gosper's hack walks all n-bit masks of popcount k in ascending order.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = (n == 64) ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << n) - 1;
    while (true) {
      edges.push_back(VertexSet::from_bits(mask));
      if (k == n) break;
      const std::uint64_t c = mask & -mask;
      const std::uint64_t r = mask + c;
      if (r < mask) break;  // wrapped past the top combination
      mask = (((r ^ mask) >> 2) / c) | r;
      if (mask > limit) break;
    }
  }
  return Hypergraph(n, std::move(edges));
}

std::vector<VertexSet> neighborhood(const Hypergraph& h, int l) {
  check_vertex_range(l, h.n(), "neighborhood");
  std::vector<VertexSet> out;
  for (VertexSet e : h.edges()) {
    if (e.contains(l)) {
      out.push_back(e.without(l));
    }
  }
  return out;
}

std::uint64_t edge_count_in_support(const Hypergraph& h, std::uint64_t tau) {
  const VertexSet sup = support(tau, h.n());
  std::uint64_t count = 0;
  for (VertexSet e : h.edges()) {
    if (e.subset_of(sup)) {
      ++count;
    }
  }
  return count;
}

}  // namespace hgstab
