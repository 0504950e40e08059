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

#include "circorbit/serialize.hpp"

#include <sstream>

namespace circorbit {

Json to_json(const OrbitCountReport& report) {
  Json j;
  j["n"] = report.n;
  j["a"] = report.a;
  j["b"] = report.b;
  j["l"] = report.l;
  j["k"] = report.k;
  j["omega"] = report.omega ? Json(*report.omega) : Json(nullptr);
  j["count"] = report.count.str();
  Json terms = Json::array();
  for (const CountTerm& t : report.terms) {
    Json term;
    if (t.q) term["q"] = *t.q;
    term["m"] = t.m;
    term["mu"] = t.mu;
    term["binomial"] = t.binomial.str();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  j["method"] = std::string(to_string(report.method));
  return j;
}

Json to_json(const CirculantGraph& graph, std::int64_t l, const LengthCount& counts,
             bool show_skipped) {
  Json j;
  j["n"] = graph.n();
  j["a"] = graph.a();
  j["b"] = graph.b();
  j["l"] = l;
  j["total"] = counts.total.str();
  Json classes = Json::array();
  for (const auto& r : counts.per_class) classes.push_back(to_json(r));
  j["classes"] = std::move(classes);
  if (show_skipped) {
    Json skipped = Json::array();
    for (const SkippedWinding& s : counts.skipped) {
      Json entry;
      entry["omega"] = s.omega;
      entry["k"] = std::to_string(s.k_numerator) + "/" + std::to_string(s.k_denominator);
      skipped.push_back(std::move(entry));
    }
    j["skipped"] = std::move(skipped);
  }
  return j;
}

Json to_json(const CirculantGraph& graph, const Orbit& orbit) {
  Json j;
  j["start"] = orbit.start;
  j["steps"] = orbit.steps.to_string(graph.alphabet());
  j["l"] = orbit.l;
  j["k"] = orbit.k;
  j["omega"] = orbit.omega;
  j["repetition"] = orbit.repetition;
  return j;
}

Json to_json(const LatticeBasis& basis) {
  Json j;
  j["n"] = basis.n;
  j["g"] = basis.g;
  j["a_prime"] = basis.a_prime;
  j["d_prime"] = basis.d_prime;
  j["l0"] = basis.l0;
  j["k0"] = basis.k0;
  Json m;
  m["denominator"] = basis.m_denominator();
  m["numerators"] = basis.m_numerators();
  j["M"] = std::move(m);
  return j;
}

Json to_json(const OrbitClass& cls) {
  Json j;
  j["l"] = cls.l;
  j["k"] = cls.k;
  j["omega"] = cls.omega;
  return j;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["n_max"] = report.n_max;
  j["l_max"] = report.l_max;
  j["passed"] = report.passed();
  j["mismatches"] = report.mismatches;
  j["first_counterexample"] =
      report.first_counterexample ? Json(*report.first_counterexample) : Json(nullptr);
  j["class_checks"] = report.classes.size();
  j["length_checks"] = report.lengths.size();
  Json classes = Json::array();
  for (const ClassCheck& c : report.classes) {
    Json row;
    row["n"] = c.n;
    row["a"] = c.a;
    row["b"] = c.b;
    row["l"] = c.l;
    row["k"] = c.k;
    row["omega"] = c.omega;
    row["oracle"] = std::to_string(c.oracle_primitive);
    row["reduced"] = c.reduced.str();
    row["unreduced"] = c.unreduced.str();
    row["repetition_checks"] = c.repetition_checks;
    row["repetition_mismatches"] = c.repetition_mismatches;
    row["pass"] = c.pass;
    classes.push_back(std::move(row));
  }
  j["classes"] = std::move(classes);
  Json lengths = Json::array();
  for (const LengthCheck& c : report.lengths) {
    Json row;
    row["n"] = c.n;
    row["a"] = c.a;
    row["b"] = c.b;
    row["l"] = c.l;
    row["total"] = c.total.str();
    row["class_sum"] = c.class_sum.str();
    row["oracle"] = std::to_string(c.oracle_primitive);
    row["pass"] = c.pass;
    lengths.push_back(std::move(row));
  }
  j["lengths"] = std::move(lengths);
  return j;
}

std::string to_csv(const std::vector<OrbitClass>& classes) {
  std::ostringstream out;
  out << "l,k,omega\n";
  for (const OrbitClass& c : classes) out << c.l << ',' << c.k << ',' << c.omega << '\n';
  return out.str();
}

}  // namespace circorbit
