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

#include "circorbit/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <string>

#include "circorbit/errors.hpp"

namespace circorbit {

BigCount::BigCount(BigInt v) : value_(std::move(v)) {
  if (value_ < 0) {
    throw InvalidArgument("BigCount must be nonnegative, got " + value_.str());
  }
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw InvalidArgument("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) {
    throw InvalidArgument("extended_gcd requires positive arguments");
  }
  // Invariant: old_r = old_u*a + old_v*b and r = u*a + v*b.
  std::int64_t old_r = a, r = b;
  std::int64_t old_u = 1, u = 0;
  std::int64_t old_v = 0, v = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_u = std::exchange(u, old_u - q * u);
    old_v = std::exchange(v, old_v - q * v);
  }
  return {old_r, old_u, old_v};
}

int moebius(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("moebius(0) is undefined");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("divisors(0) is undefined");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t i = 1; i * i <= m; ++i) {
    if (m % i != 0) continue;
    low.push_back(i);
    if (i != m / i) high.push_back(m / i);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

BigCount binomial(std::int64_t x, std::int64_t y) {
  if (x < 0) throw InvalidArgument("binomial requires x >= 0");
  if (y < 0 || y > x) return BigCount{};
  y = std::min(y, x - y);
  // After step i the accumulator holds C(x - y + i, i), so each division is exact.
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= y; ++i) {
    acc *= x - y + i;
    acc /= i;
  }
  return BigCount(std::move(acc));
}

BigCount scaled_binomial(std::int64_t l, std::int64_t k, std::int64_t m) {
  if (l < 1 || m < 1) throw InvalidArgument("scaled_binomial requires l >= 1 and m >= 1");
  if (l % m != 0 || k % m != 0) return BigCount{};
  return binomial(l / m, k / m);
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

}  // namespace circorbit
