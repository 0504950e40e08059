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

#ifndef CIRCORBIT_LATTICE_HPP_
#define CIRCORBIT_LATTICE_HPP_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "circorbit/graph.hpp"

namespace circorbit {

// Generators (d', -a') and (l0, k0) of the lattice of integer (l, k) with
// n | la + kd, together with the inverse map M.
//
// M is kept as an integer matrix over the common denominator n:
//
//   M = (1/n) [ k0  -l0 ]
//             [ a'   d' ]
//
// l0 is normalized to 0 <= l0 < d', so l0 = 0 whenever d' = 1.
struct LatticeBasis {
  std::int64_t n;
  std::int64_t g;
  std::int64_t a_prime;
  std::int64_t d_prime;
  std::int64_t l0;
  std::int64_t k0;

  // Row-major numerators of M.
  std::array<std::array<std::int64_t, 2>, 2> m_numerators() const {
    return {{{k0, -l0}, {a_prime, d_prime}}};
  }
  std::int64_t m_denominator() const { return n; }
};

// An admissible (l, k) pair together with its winding number.
struct OrbitClass {
  std::int64_t l;
  std::int64_t k;
  std::int64_t omega;

  friend auto operator<=>(const OrbitClass&, const OrbitClass&) = default;
};

// Throws DisconnectedGraph.
LatticeBasis basis(const CirculantGraph& graph);

// (x, y) = M (l, k) with y = ω/g. Throws NotLatticePoint when non-integral.
std::pair<std::int64_t, std::int64_t> to_coords(const LatticeBasis& basis,
                                                std::pair<std::int64_t, std::int64_t> point);

// x (d', -a') + y (l0, k0).
std::pair<std::int64_t, std::int64_t> from_coords(const LatticeBasis& basis,
                                                  std::pair<std::int64_t, std::int64_t> coords);

// Every OrbitClass of length l, found by scanning winding numbers in
// [ceil(la/n), floor(lb/n)]; sorted by ω.
std::vector<OrbitClass> bcounts_for_length(const CirculantGraph& graph, std::int64_t l);

// Winding numbers in the admissible range whose b-count (ωn - la)/d is not an
// integer, with that b-count as a reduced fraction.
struct SkippedWinding {
  std::int64_t omega;
  std::int64_t k_numerator;
  std::int64_t k_denominator;
};
std::vector<SkippedWinding> skipped_windings(const CirculantGraph& graph, std::int64_t l);

// All OrbitClass with 1 <= l <= l_max, ordered by (l, ω).
std::vector<OrbitClass> lattice_points(const CirculantGraph& graph, std::int64_t l_max);

}  // namespace circorbit

#endif  // CIRCORBIT_LATTICE_HPP_
