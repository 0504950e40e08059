// Copyright 2026 The circorbit Authors.
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

#ifndef CIRCORBIT_NUMTHEORY_HPP_
#define CIRCORBIT_NUMTHEORY_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace circorbit {

// Signed arbitrary-precision integer used for intermediate signed sums.
using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative count of combinatorial objects.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  // Throws InvalidArgument if `v` is negative.
  explicit BigCount(BigInt v);

  const BigInt& value() const { return value_; }
  std::string str() const { return value_.str(); }
  bool is_zero() const { return value_.is_zero(); }

  BigCount& operator+=(const BigCount& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator*(const BigCount& lhs, const BigCount& rhs) {
    return BigCount(BigInt(lhs.value_ * rhs.value_));
  }

  friend bool operator==(const BigCount& lhs, const BigCount& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const BigCount& lhs, const BigCount& rhs) {
    if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
    if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigInt value_{0};
};

// Throws InvalidArgument for gcd(0, 0).
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

struct Bezout {
  std::int64_t g;
  std::int64_t u;
  std::int64_t v;
};

// u*a + v*b == g == gcd(a, b), for a, b >= 1.
Bezout extended_gcd(std::int64_t a, std::int64_t b);

// Möbius function by trial division. Throws InvalidArgument for m == 0.
int moebius(std::uint64_t m);

// All divisors of m in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t m);

// C(x, y); zero when y < 0 or y > x.
BigCount binomial(std::int64_t x, std::int64_t y);

// C(l/m, k/m) when m divides both l and k, else zero.
BigCount scaled_binomial(std::int64_t l, std::int64_t k, std::int64_t m);

// Floor and ceiling of num/den for den > 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

}  // namespace circorbit

#endif  // CIRCORBIT_NUMTHEORY_HPP_
