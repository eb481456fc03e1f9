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

#include "hgstab/dyadic.hpp"

#include <algorithm>

namespace hgstab {

void DyadicRational::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) {
    return;
  }
  const auto trailing = mpz_scan1(num_.get_mpz_t(), 0);
  const unsigned shift = std::min<unsigned long>(trailing, exp_);
  if (shift > 0) {
    num_ >>= shift;
    exp_ -= shift;
  }
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& other) {
  const unsigned e = std::max(exp_, other.exp_);
  num_ <<= (e - exp_);
  num_ += other.num_ << (e - other.exp_);
  exp_ = e;
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& other) {
  const unsigned e = std::max(exp_, other.exp_);
  num_ <<= (e - exp_);
  num_ -= other.num_ << (e - other.exp_);
  exp_ = e;
  normalize();
  return *this;
}

int DyadicRational::compare(const DyadicRational& a, const DyadicRational& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  const BigInt lhs = a.num_ << (e - a.exp_);
  const BigInt rhs = b.num_ << (e - b.exp_);
  return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
}

std::string DyadicRational::to_string() const {
  if (exp_ == 0) {
    return num_.get_str();
  }
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

}  // namespace hgstab
