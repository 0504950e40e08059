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

#ifndef CIRCORBIT_SERIALIZE_HPP_
#define CIRCORBIT_SERIALIZE_HPP_

// JSON and CSV encodings shared by the CLI. Counts are always decimal strings
// so that values beyond 53 bits survive any JSON consumer. Field order is
// fixed, so parsing and re-dumping reproduces the same bytes.

#include <string>
#include <vector>

#include "json.hpp"

#include "circorbit/counting.hpp"
#include "circorbit/lattice.hpp"
#include "circorbit/oracle.hpp"

namespace circorbit {

using Json = nlohmann::ordered_json;

// {n, a, b, l, k, omega, count, terms: [{q?, m, mu, binomial}], method}
Json to_json(const OrbitCountReport& report);

// {n, a, b, l, total, classes: [...], skipped?: [{omega, k}]}
Json to_json(const CirculantGraph& graph, std::int64_t l, const LengthCount& counts,
             bool show_skipped);

// {start, steps, l, k, omega, repetition}; steps in the graph's step notation.
Json to_json(const CirculantGraph& graph, const Orbit& orbit);

Json to_json(const LatticeBasis& basis);
Json to_json(const OrbitClass& cls);

Json to_json(const VerificationReport& report);

// "l,k,omega" header followed by one row per class.
std::string to_csv(const std::vector<OrbitClass>& classes);

}  // namespace circorbit

#endif  // CIRCORBIT_SERIALIZE_HPP_
