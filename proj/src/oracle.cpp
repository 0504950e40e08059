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

#include "circorbit/oracle.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "circorbit/counting.hpp"
#include "circorbit/errors.hpp"

namespace circorbit {

namespace {

void check_budget(std::int64_t n, std::int64_t l, std::uint64_t budget) {
  const bool too_long = l >= 63 || (n > 0 && (std::uint64_t{1} << l) > budget / static_cast<std::uint64_t>(n));
  if (too_long) {
    throw BudgetExceeded("enumerating length " + std::to_string(l) + " on " + std::to_string(n) +
                         " vertices needs 2^" + std::to_string(l) + "*" + std::to_string(n) +
                         " presentations, budget is " + std::to_string(budget));
  }
}

// Compares the rotations of the circuit starting at positions s and t.
std::strong_ordering compare_rotations(const std::vector<Vertex>& starts, const Word& w,
                                       std::size_t s, std::size_t t) {
  if (auto c = starts[s] <=> starts[t]; c != 0) return c;
  const std::size_t l = w.length();
  for (std::size_t i = 0; i < l; ++i) {
    const Letter x = w[(s + i) % l];
    const Letter y = w[(t + i) % l];
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool rotation_fixes(const std::vector<Vertex>& starts, const Word& w, std::size_t p) {
  if (starts[p] != starts[0]) return false;
  const std::size_t l = w.length();
  for (std::size_t i = 0; i < l; ++i) {
    if (w[i] != w[(i + p) % l]) return false;
  }
  return true;
}

// Walks every arrangement of W_2(l, k) from every vertex. Only called for
// closing (l, k).
template <typename Visit>
void for_each_presentation(const CirculantGraph& graph, std::int64_t l, std::int64_t k,
                           Visit&& visit) {
  Word w = Word::sorted(static_cast<std::size_t>(l), static_cast<std::size_t>(k));
  do {
    for (Vertex v = 0; v < graph.n(); ++v) visit(w, v);
  } while (w.next_arrangement());
}

bool closes(const CirculantGraph& graph, std::int64_t l, std::int64_t k) {
  return (l * graph.a() + k * graph.d()) % graph.n() == 0;
}

}  // namespace

Orbit phi(const CirculantGraph& graph, const Word& w, Vertex v) {
  const Circuit circuit(graph, v, w);
  std::vector<Vertex> starts = path_from(graph, circuit.start(), w);
  starts.pop_back();
  const std::size_t l = w.length();

  std::size_t best = 0;
  for (std::size_t s = 1; s < l; ++s) {
    if (compare_rotations(starts, w, s, best) < 0) best = s;
  }
  std::size_t period = l;
  for (std::size_t p = 1; p < l; ++p) {
    if (l % p == 0 && rotation_fixes(starts, w, p)) {
      period = p;
      break;
    }
  }
  return Orbit{starts[best],
               rotate(w, static_cast<std::int64_t>(best)),
               static_cast<std::int64_t>(l),
               static_cast<std::int64_t>(w.b_count()),
               circuit.winding(),
               static_cast<std::int64_t>(l / period)};
}

std::vector<EnumeratedOrbit> enumerate_with_presentations(const CirculantGraph& graph,
                                                          std::int64_t l,
                                                          std::optional<std::int64_t> k,
                                                          std::uint64_t budget) {
  if (l < 1) throw InvalidArgument("orbit length must be positive");
  if (k && (*k < 0 || *k > l)) throw InvalidArgument("b-count must satisfy 0 <= k <= l");
  check_budget(graph.n(), l, budget);

  std::map<Orbit, std::size_t> seen;
  const std::int64_t k_lo = k.value_or(0);
  const std::int64_t k_hi = k.value_or(l);
  for (std::int64_t kk = k_lo; kk <= k_hi; ++kk) {
    if (!closes(graph, l, kk)) continue;
    for_each_presentation(graph, l, kk, [&](const Word& w, Vertex v) {
      ++seen[phi(graph, w, v)];
    });
  }
  std::vector<EnumeratedOrbit> out;
  out.reserve(seen.size());
  for (auto& [orbit, count] : seen) out.push_back({orbit, count});
  return out;
}

std::vector<Orbit> enumerate_orbits(const CirculantGraph& graph, std::int64_t l,
                                    std::optional<std::int64_t> k, std::uint64_t budget) {
  std::vector<Orbit> out;
  for (auto& e : enumerate_with_presentations(graph, l, k, budget)) {
    out.push_back(std::move(e.orbit));
  }
  return out;
}

OrbitCountReport count_by_enumeration(const CirculantGraph& graph, std::int64_t l,
                                      std::int64_t k, std::uint64_t budget) {
  if (k < 0 || k > l) throw InvalidArgument("b-count must satisfy 0 <= k <= l");
  std::uint64_t primitive = 0;
  for (const Orbit& orbit : enumerate_orbits(graph, l, k, budget)) {
    if (orbit.primitive()) ++primitive;
  }
  OrbitCountReport report{graph.n(), graph.a(), graph.b(), l, k, std::nullopt,
                          BigCount(primitive), {}, CountMethod::oracle};
  if (closes(graph, l, k)) report.omega = (l * graph.a() + k * graph.d()) / graph.n();
  return report;
}

VerificationReport verify_range(std::int64_t n_max, std::int64_t l_max, std::uint64_t budget) {
  VerificationReport report{n_max, l_max, {}, {}, 0, std::nullopt};
  if (n_max < 3 || l_max < 1) return report;
  check_budget(n_max, l_max, budget);

  auto fail = [&](const std::string& what) {
    ++report.mismatches;
    if (!report.first_counterexample) report.first_counterexample = what;
  };

  for (std::int64_t n = 3; n <= n_max; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = a + 1; b < n; ++b) {
        const CirculantGraph graph = CirculantGraph::create(n, a, b);
        if (!graph.strongly_connected()) continue;
        for (std::int64_t l = 1; l <= l_max; ++l) {
          std::uint64_t oracle_total = 0;
          for (std::int64_t k = 0; k <= l; ++k) {
            if (!closes(graph, l, k)) continue;
            std::map<Orbit, std::size_t> seen;
            std::uint64_t rep_checks = 0;
            std::uint64_t rep_mismatches = 0;
            for_each_presentation(graph, l, k, [&](const Word& w, Vertex v) {
              Orbit orbit = phi(graph, w, v);
              ++rep_checks;
              if (orbit.repetition != predicted_repetition(graph, w)) ++rep_mismatches;
              ++seen[std::move(orbit)];
            });
            std::uint64_t primitive = 0;
            for (const auto& [orbit, count] : seen) {
              if (orbit.primitive()) ++primitive;
            }
            oracle_total += primitive;

            const OrbitCountReport reduced = count_orbits_lk(graph, l, k);
            const OrbitCountReport unreduced = count_orbits_lk_unreduced(graph, l, k);
            const bool pass = reduced.count == BigCount(primitive) &&
                              unreduced.count == reduced.count && rep_mismatches == 0;
            report.classes.push_back({n, a, b, l, k, *reduced.omega, primitive, reduced.count,
                                      unreduced.count, rep_checks, rep_mismatches, pass});
            if (!pass) {
              std::ostringstream msg;
              msg << graph.name() << " l=" << l << " k=" << k << ": oracle=" << primitive
                  << " reduced=" << reduced.count.str() << " unreduced=" << unreduced.count.str()
                  << " repetition mismatches=" << rep_mismatches;
              fail(msg.str());
            }
          }

          const LengthCount totals = count_orbits_l(graph, l);
          BigCount class_sum;
          for (const auto& r : totals.per_class) class_sum += r.count;
          const bool pass = totals.total == class_sum && totals.total == BigCount(oracle_total);
          report.lengths.push_back({n, a, b, l, totals.total, class_sum, oracle_total, pass});
          if (!pass) {
            std::ostringstream msg;
            msg << graph.name() << " l=" << l << ": total=" << totals.total.str()
                << " class sum=" << class_sum.str() << " oracle=" << oracle_total;
            fail(msg.str());
          }
        }
      }
    }
  }
  return report;
}

}  // namespace circorbit
