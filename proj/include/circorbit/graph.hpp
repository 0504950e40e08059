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

#ifndef CIRCORBIT_GRAPH_HPP_
#define CIRCORBIT_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circorbit/words.hpp"

namespace circorbit {

using Vertex = std::int64_t;

// The 2-regular circulant digraph C_n(a, b) on Z_n with bonds v -> v+a and
// v -> v+b. Stored implicitly; bonds are derived on demand.
class CirculantGraph {
 public:
  // Throws RejectedParameters unless 0 < a < b < n. Disconnected graphs are
  // accepted and flagged.
  static CirculantGraph create(std::int64_t n, std::int64_t a, std::int64_t b);

  std::int64_t n() const { return n_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  // b - a
  std::int64_t d() const { return b_ - a_; }
  // gcd(a, d) == gcd(a, b)
  std::int64_t g() const { return g_; }
  bool strongly_connected() const { return connected_; }

  std::int64_t step(Letter c) const { return c == Letter::b ? b_ : a_; }
  StepAlphabet alphabet() const { return {a_, b_}; }
  Vertex reduce(std::int64_t v) const { return ((v % n_) + n_) % n_; }

  // "C_n(a,b)"
  std::string name() const;

  // Throws DisconnectedGraph unless gcd(n, a, b) = 1.
  void require_connected() const;

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  CirculantGraph(std::int64_t n, std::int64_t a, std::int64_t b);

  std::int64_t n_;
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t g_;
  bool connected_;
};

inline CirculantGraph new_circulant(std::int64_t n, std::int64_t a, std::int64_t b) {
  return CirculantGraph::create(n, a, b);
}

bool is_strongly_connected(const CirculantGraph& graph);

struct Bond {
  Vertex origin;
  Letter step;

  Vertex terminus(const CirculantGraph& graph) const {
    return graph.reduce(origin + graph.step(step));
  }
};

// Sum of step sizes, (l - k)a + kb.
std::int64_t transit_distance(const CirculantGraph& graph, const Word& w);

// Δ(w)/n when n divides Δ(w).
std::optional<std::int64_t> winding_number(const CirculantGraph& graph, const Word& w);

// v_0 = v, v_{j+1} = v_j + |e_{j+1}| mod n; l + 1 vertices.
std::vector<Vertex> path_from(const CirculantGraph& graph, Vertex v, const Word& w);

// A closed path given by start vertex and step sequence.
class Circuit {
 public:
  // Throws DoesNotClose unless n | Δ(steps), InvalidArgument on empty steps.
  Circuit(const CirculantGraph& graph, Vertex start, Word steps);

  Vertex start() const { return start_; }
  const Word& steps() const { return steps_; }
  std::size_t length() const { return steps_.length(); }
  std::int64_t winding() const { return winding_; }

 private:
  Vertex start_;
  Word steps_;
  std::int64_t winding_;
};

// General circulant C_n(s_1, ..., s_m), only used for rendering.
struct StepList {
  std::int64_t n;
  std::vector<std::int64_t> steps;
};

// Throws RejectedParameters unless 0 < s_1 < ... < s_m < n and m >= 1.
StepList validate_steps(std::int64_t n, std::vector<std::int64_t> steps);

// Number of strongly connected components, gcd(n, s_1, ..., s_m).
std::int64_t component_count(const StepList& graph);

// Graphviz rendering with a circular layout hint. Two-step graphs label bonds
// "a" and "b"; longer step lists label bonds by step size.
std::string to_dot(const StepList& graph);
std::string to_dot(const CirculantGraph& graph);

}  // namespace circorbit

#endif  // CIRCORBIT_GRAPH_HPP_
