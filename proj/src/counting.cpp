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

#include "circorbit/counting.hpp"

#include <cassert>
#include <numeric>
#include <string>

#include "circorbit/errors.hpp"

namespace circorbit {

namespace {

void check_class_args(std::int64_t l, std::int64_t k) {
  if (l < 1) throw InvalidArgument("orbit length must be positive");
  if (k < 0 || k > l) throw InvalidArgument("b-count must satisfy 0 <= k <= l");
}

std::optional<std::int64_t> winding_for(const CirculantGraph& graph, std::int64_t l,
                                        std::int64_t k) {
  const std::int64_t delta = l * graph.a() + k * graph.d();
  if (delta % graph.n() != 0) return std::nullopt;
  return delta / graph.n();
}

// n * sum / l, insisting on exact division.
BigCount scale_by_n_over_l(const CirculantGraph& graph, std::int64_t l, const BigInt& sum) {
  const BigInt scaled = sum * graph.n();
  if (scaled % l != 0) {
    throw NonIntegerResult("n * " + sum.str() + " is not divisible by l = " + std::to_string(l) +
                           " on " + graph.name());
  }
  return BigCount(BigInt(scaled / l));
}

OrbitCountReport empty_report(const CirculantGraph& graph, std::int64_t l, std::int64_t k,
                              std::optional<std::int64_t> omega, CountMethod method) {
  return {graph.n(), graph.a(), graph.b(), l, k, omega, BigCount{}, {}, method};
}

}  // namespace

std::string_view to_string(CountMethod method) {
  switch (method) {
    case CountMethod::reduced:
      return "reduced";
    case CountMethod::unreduced:
      return "unreduced";
    case CountMethod::oracle:
      return "oracle";
  }
  return "unknown";
}

CountMethod parse_count_method(std::string_view name) {
  if (name == "reduced") return CountMethod::reduced;
  if (name == "unreduced") return CountMethod::unreduced;
  if (name == "oracle") return CountMethod::oracle;
  throw InvalidArgument("unknown count method \"" + std::string(name) + "\"");
}

OrbitCountReport count_orbits_lk(const CirculantGraph& graph, std::int64_t l, std::int64_t k) {
  graph.require_connected();
  check_class_args(l, k);
  const auto omega = winding_for(graph, l, k);
  if (!omega) return empty_report(graph, l, k, std::nullopt, CountMethod::reduced);
  assert(*omega >= 1);

  OrbitCountReport report = empty_report(graph, l, k, omega, CountMethod::reduced);
  const std::uint64_t common =
      std::gcd(gcd(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(k)),
               static_cast<std::uint64_t>(*omega));
  BigInt sum = 0;
  for (std::uint64_t m : divisors(common)) {
    const int mu = moebius(m);
    if (mu == 0) continue;
    BigCount term = scaled_binomial(l, k, static_cast<std::int64_t>(m));
    sum += mu * term.value();
    report.terms.push_back({std::nullopt, m, mu, std::move(term)});
  }
  report.count = scale_by_n_over_l(graph, l, sum);
  return report;
}

OrbitCountReport count_orbits_lk_unreduced(const CirculantGraph& graph, std::int64_t l,
                                           std::int64_t k) {
  graph.require_connected();
  check_class_args(l, k);
  const auto omega = winding_for(graph, l, k);
  if (!omega) {
    throw NotLatticePoint("(l,k) = (" + std::to_string(l) + "," + std::to_string(k) +
                          ") does not close on " + graph.name());
  }
  assert(*omega >= 1);

  OrbitCountReport report = empty_report(graph, l, k, omega, CountMethod::unreduced);
  const std::uint64_t gamma = gcd(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(k));
  BigInt sum = 0;
  for (std::uint64_t q : coprime_divisors(gamma, static_cast<std::uint64_t>(*omega))) {
    for (std::uint64_t m : divisors(gamma / q)) {
      const int mu = moebius(m);
      if (mu == 0) continue;
      BigCount term = scaled_binomial(l, k, static_cast<std::int64_t>(q * m));
      sum += mu * term.value();
      report.terms.push_back({q, m, mu, std::move(term)});
    }
  }
  report.count = scale_by_n_over_l(graph, l, sum);
  return report;
}

LengthCount count_orbits_l(const CirculantGraph& graph, std::int64_t l, CountMethod method) {
  if (method == CountMethod::oracle) {
    throw InvalidArgument("count_orbits_l evaluates closed formulas only");
  }
  LengthCount result;
  for (const OrbitClass& cls : bcounts_for_length(graph, l)) {
    OrbitCountReport report = method == CountMethod::reduced
                                  ? count_orbits_lk(graph, cls.l, cls.k)
                                  : count_orbits_lk_unreduced(graph, cls.l, cls.k);
    result.total += report.count;
    result.per_class.push_back(std::move(report));
  }
  result.skipped = skipped_windings(graph, l);
  return result;
}

std::vector<std::uint64_t> coprime_divisors(std::uint64_t gamma, std::uint64_t omega) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q : divisors(gamma)) {
    if (std::gcd(q, omega) == 1) out.push_back(q);
  }
  return out;
}

SumReduction sum_reduction_check(std::uint64_t gamma, std::uint64_t omega,
                                 const std::function<BigInt(std::uint64_t)>& f) {
  SumReduction out{0, 0};
  for (std::uint64_t q : coprime_divisors(gamma, omega)) {
    for (std::uint64_t s : divisors(gamma / q)) {
      const int mu = moebius(s);
      if (mu != 0) out.lhs += mu * f(q * s);
    }
  }
  for (std::uint64_t m : divisors(std::gcd(gamma, omega))) {
    const int mu = moebius(m);
    if (mu != 0) out.rhs += mu * f(m);
  }
  return out;
}

std::int64_t predicted_repetition(const CirculantGraph& graph, const Word& w) {
  const auto omega = winding_number(graph, w);
  if (!omega) {
    throw DoesNotClose("step sequence " + w.to_string(graph.alphabet()) + " does not close on " +
                       graph.name());
  }
  const auto r = static_cast<std::int64_t>(decompose(w).repetition);
  return std::gcd(r, *omega);
}

}  // namespace circorbit
