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

#include "circorbit/lattice.hpp"

#include <numeric>
#include <string>

#include "circorbit/errors.hpp"
#include "circorbit/numtheory.hpp"

namespace circorbit {

namespace {

void check_length(std::int64_t l) {
  if (l < 1) throw InvalidArgument("orbit length must be positive (got " + std::to_string(l) + ")");
}

}  // namespace

LatticeBasis basis(const CirculantGraph& graph) {
  graph.require_connected();
  const std::int64_t n = graph.n();
  const std::int64_t g = graph.g();
  const std::int64_t a_prime = graph.a() / g;
  const std::int64_t d_prime = graph.d() / g;
  // Solve l0 a' + k0 d' = n, i.e. l0 a + k0 d = g n.
  const Bezout bez = extended_gcd(a_prime, d_prime);
  std::int64_t l0 = ((bez.u % d_prime) * (n % d_prime)) % d_prime;
  if (l0 < 0) l0 += d_prime;
  const std::int64_t k0 = (n - l0 * a_prime) / d_prime;
  return {n, g, a_prime, d_prime, l0, k0};
}

std::pair<std::int64_t, std::int64_t> to_coords(const LatticeBasis& basis,
                                                std::pair<std::int64_t, std::int64_t> point) {
  const auto [l, k] = point;
  const std::int64_t x_num = l * basis.k0 - basis.l0 * k;
  const std::int64_t y_num = l * basis.a_prime + k * basis.d_prime;
  if (x_num % basis.n != 0 || y_num % basis.n != 0) {
    throw NotLatticePoint("(" + std::to_string(l) + "," + std::to_string(k) +
                          ") is not in the lattice for n=" + std::to_string(basis.n));
  }
  return {x_num / basis.n, y_num / basis.n};
}

std::pair<std::int64_t, std::int64_t> from_coords(const LatticeBasis& basis,
                                                  std::pair<std::int64_t, std::int64_t> coords) {
  const auto [x, y] = coords;
  return {x * basis.d_prime + y * basis.l0, -x * basis.a_prime + y * basis.k0};
}

std::vector<OrbitClass> bcounts_for_length(const CirculantGraph& graph, std::int64_t l) {
  graph.require_connected();
  check_length(l);
  const std::int64_t n = graph.n();
  const std::int64_t lo = ceil_div(l * graph.a(), n);
  const std::int64_t hi = floor_div(l * graph.b(), n);
  std::vector<OrbitClass> out;
  for (std::int64_t omega = lo; omega <= hi; ++omega) {
    const std::int64_t num = omega * n - l * graph.a();
    if (num % graph.d() != 0) continue;
    const std::int64_t k = num / graph.d();
    if (k < 0 || k > l) continue;
    out.push_back({l, k, omega});
  }
  return out;
}

std::vector<SkippedWinding> skipped_windings(const CirculantGraph& graph, std::int64_t l) {
  graph.require_connected();
  check_length(l);
  const std::int64_t n = graph.n();
  const std::int64_t lo = ceil_div(l * graph.a(), n);
  const std::int64_t hi = floor_div(l * graph.b(), n);
  std::vector<SkippedWinding> out;
  for (std::int64_t omega = lo; omega <= hi; ++omega) {
    const std::int64_t num = omega * n - l * graph.a();
    if (num % graph.d() == 0) continue;
    const std::int64_t common = std::gcd(num, graph.d());
    out.push_back({omega, num / common, graph.d() / common});
  }
  return out;
}

std::vector<OrbitClass> lattice_points(const CirculantGraph& graph, std::int64_t l_max) {
  graph.require_connected();
  check_length(l_max);
  std::vector<OrbitClass> out;
  for (std::int64_t l = 1; l <= l_max; ++l) {
    auto row = bcounts_for_length(graph, l);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace circorbit
