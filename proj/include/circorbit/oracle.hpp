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

#ifndef CIRCORBIT_ORACLE_HPP_
#define CIRCORBIT_ORACLE_HPP_

// Brute-force enumeration of periodic orbits. Everything here works from the
// definitions (walk every step sequence from every vertex, canonicalize the
// resulting circuit up to rotation) and never calls the closed formulas, so it
// can serve as ground truth for them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circorbit/counting.hpp"
#include "circorbit/graph.hpp"
#include "circorbit/numtheory.hpp"
#include "circorbit/words.hpp"

namespace circorbit {

// A periodic orbit in canonical form: the rotation of the circuit whose
// (start vertex, step string) pair is least, vertex compared first.
struct Orbit {
  Vertex start;
  Word steps;
  std::int64_t l;
  std::int64_t k;
  std::int64_t omega;
  // Orbit repetition number; 1 means primitive.
  std::int64_t repetition;

  bool primitive() const { return repetition == 1; }

  friend bool operator==(const Orbit& lhs, const Orbit& rhs) {
    return lhs.start == rhs.start && lhs.steps == rhs.steps;
  }
  friend std::strong_ordering operator<=>(const Orbit& lhs, const Orbit& rhs) {
    if (auto c = lhs.start <=> rhs.start; c != 0) return c;
    return lhs.steps <=> rhs.steps;
  }
};

// The orbit containing the circuit that starts at v with step sequence w.
// Throws DoesNotClose.
Orbit phi(const CirculantGraph& graph, const Word& w, Vertex v);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 28;

struct EnumeratedOrbit {
  Orbit orbit;
  // Number of (start, steps) presentations met during enumeration.
  std::size_t presentations;
};

// Every periodic orbit of length l (b-count k if given), sorted canonically,
// with presentation counts. Throws BudgetExceeded when 2^l * n > budget.
std::vector<EnumeratedOrbit> enumerate_with_presentations(
    const CirculantGraph& graph, std::int64_t l, std::optional<std::int64_t> k = std::nullopt,
    std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<Orbit> enumerate_orbits(const CirculantGraph& graph, std::int64_t l,
                                    std::optional<std::int64_t> k = std::nullopt,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

// Oracle-method report: primitive orbits found by enumeration. Terms are empty.
OrbitCountReport count_by_enumeration(const CirculantGraph& graph, std::int64_t l,
                                      std::int64_t k,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

// One admissible (graph, l, k) class compared across the oracle and both
// closed formulas, plus the repetition law for every presentation.
struct ClassCheck {
  std::int64_t n, a, b, l, k, omega;
  std::uint64_t oracle_primitive;
  BigCount reduced;
  BigCount unreduced;
  std::uint64_t repetition_checks;
  std::uint64_t repetition_mismatches;
  bool pass;
};

// Per-length totals: the fixed-length formula against the per-class sum and
// the oracle.
struct LengthCheck {
  std::int64_t n, a, b, l;
  BigCount total;
  BigCount class_sum;
  std::uint64_t oracle_primitive;
  bool pass;
};

struct VerificationReport {
  std::int64_t n_max;
  std::int64_t l_max;
  std::vector<ClassCheck> classes;
  std::vector<LengthCheck> lengths;
  std::uint64_t mismatches = 0;
  std::optional<std::string> first_counterexample;

  bool passed() const { return mismatches == 0; }
};

// Checks every connected C_n(a, b) with n <= n_max at every length l <= l_max.
// Throws BudgetExceeded when 2^l_max * n_max > budget.
VerificationReport verify_range(std::int64_t n_max, std::int64_t l_max,
                                std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace circorbit

#endif  // CIRCORBIT_ORACLE_HPP_
