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

#ifndef HGSTAB_DYADIC_HPP
#define HGSTAB_DYADIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hgstab {

using BigInt = mpz_class;

/// Exact number of the form numerator / 2^exponent.
///
/// Normalized so that the fraction is in lowest terms: either the exponent is
/// zero or the numerator is odd; the value zero is stored as 0 / 2^0. All
/// arithmetic is exact — there is no rounding anywhere in this class.
class DyadicRational {
 public:
  DyadicRational() : num_(0), exp_(0) {}
  DyadicRational(BigInt numerator, unsigned exponent)
      : num_(std::move(numerator)), exp_(exponent) {
    normalize();
  }
  DyadicRational(long value) : num_(value), exp_(0) {}  // NOLINT(runtime/explicit)
  DyadicRational(int value) : num_(value), exp_(0) {}   // NOLINT(runtime/explicit)

  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  int signum() const { return mpz_sgn(num_.get_mpz_t()); }

  DyadicRational operator-() const { return DyadicRational(-num_, exp_); }
  DyadicRational abs() const { return DyadicRational(::abs(num_), exp_); }

  DyadicRational& operator+=(const DyadicRational& other);
  DyadicRational& operator-=(const DyadicRational& other);

  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) {
    a += b;
    return a;
  }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) {
    a -= b;
    return a;
  }
  friend DyadicRational operator*(const BigInt& k, const DyadicRational& d) {
    return DyadicRational(k * d.num_, d.exp_);
  }
  friend DyadicRational operator*(long k, const DyadicRational& d) {
    return DyadicRational(k * d.num_, d.exp_);
  }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend bool operator!=(const DyadicRational& a, const DyadicRational& b) {
    return !(a == b);
  }
  friend bool operator<(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) >= 0;
  }

  /// Renders "p" when the exponent is zero (including "0"), "p/2^q" otherwise.
  /// This string form is used verbatim in CLI and JSON output.
  std::string to_string() const;

 private:
  static int compare(const DyadicRational& a, const DyadicRational& b);
  void normalize();

  BigInt num_;
  unsigned exp_;
};

}  // namespace hgstab

#endif  // HGSTAB_DYADIC_HPP
