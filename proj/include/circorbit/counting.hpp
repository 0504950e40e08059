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

#ifndef CIRCORBIT_COUNTING_HPP_
#define CIRCORBIT_COUNTING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "circorbit/graph.hpp"
#include "circorbit/lattice.hpp"
#include "circorbit/numtheory.hpp"

namespace circorbit {

enum class CountMethod { reduced, unreduced, oracle };

std::string_view to_string(CountMethod method);
// Throws InvalidArgument on unknown names.
CountMethod parse_count_method(std::string_view name);

// One summand μ(m) C(l/(qm), k/(qm)). `q` is set only by the unreduced method.
struct CountTerm {
  std::optional<std::uint64_t> q;
  std::uint64_t m;
  int mu;
  BigCount binomial;
};

struct OrbitCountReport {
  std::int64_t n;
  std::int64_t a;
  std::int64_t b;
  std::int64_t l;
  std::int64_t k;
  // Absent when (l, k) is not an admissible pair.
  std::optional<std::int64_t> omega;
  BigCount count;
  std::vector<CountTerm> terms;
  CountMethod method;

  std::optional<OrbitClass> orbit_class() const {
    if (!omega) return std::nullopt;
    return OrbitClass{l, k, *omega};
  }
};

// Primitive periodic orbits of length l and b-count k:
//   (n/l) Σ_{m | gcd(l,k,ω)} μ(m) C(l/m, k/m).
// Zero with no terms when (l, k) is not admissible. Throws DisconnectedGraph.
OrbitCountReport count_orbits_lk(const CirculantGraph& graph, std::int64_t l, std::int64_t k);

// Same count via the sum over word repetition numbers q | gcd(l, k) coprime
// to ω. Throws NotLatticePoint when (l, k) is not admissible.
OrbitCountReport count_orbits_lk_unreduced(const CirculantGraph& graph, std::int64_t l,
                                           std::int64_t k);

struct LengthCount {
  BigCount total;
  std::vector<OrbitCountReport> per_class;
  // Winding numbers in range whose b-count is fractional, hence contribute zero.
  std::vector<SkippedWinding> skipped;
};

// All primitive periodic orbits of length l, summed over admissible b-counts.
LengthCount count_orbits_l(const CirculantGraph& graph, std::int64_t l,
                           CountMethod method = CountMethod::reduced);

// Divisors of gamma coprime to omega, increasing.
std::vector<std::uint64_t> coprime_divisors(std::uint64_t gamma, std::uint64_t omega);

struct SumReduction {
  BigInt lhs;
  BigInt rhs;
};

// lhs = Σ_{q | γ, gcd(q,ω)=1} Σ_{s | γ/q} μ(s) f(qs)
// rhs = Σ_{m | gcd(γ,ω)} μ(m) f(m)
SumReduction sum_reduction_check(std::uint64_t gamma, std::uint64_t omega,
                                 const std::function<BigInt(std::uint64_t)>& f);

// gcd(r, ω): the power t with φ(w, v) = q^t for a primitive orbit q, where r
// is the repetition number of w. Throws DoesNotClose.
std::int64_t predicted_repetition(const CirculantGraph& graph, const Word& w);

}  // namespace circorbit

#endif  // CIRCORBIT_COUNTING_HPP_
