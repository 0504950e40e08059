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

#include "circorbit/graph.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "circorbit/errors.hpp"

namespace circorbit {

CirculantGraph::CirculantGraph(std::int64_t n, std::int64_t a, std::int64_t b)
    : n_(n),
      a_(a),
      b_(b),
      g_(std::gcd(a, b - a)),
      connected_(std::gcd(n, std::gcd(a, b)) == 1) {}

CirculantGraph CirculantGraph::create(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (!(0 < a && a < b && b < n)) {
    throw RejectedParameters("step sizes must satisfy 0 < a < b < n (got n=" +
                             std::to_string(n) + ", a=" + std::to_string(a) +
                             ", b=" + std::to_string(b) + ")");
  }
  return CirculantGraph(n, a, b);
}

std::string CirculantGraph::name() const {
  return "C_" + std::to_string(n_) + "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

void CirculantGraph::require_connected() const {
  if (!connected_) {
    throw DisconnectedGraph(name() + " is not strongly connected: gcd(n,a,b) = " +
                            std::to_string(std::gcd(n_, g_)) + " != 1");
  }
}

bool is_strongly_connected(const CirculantGraph& graph) { return graph.strongly_connected(); }

std::int64_t transit_distance(const CirculantGraph& graph, const Word& w) {
  const auto l = static_cast<std::int64_t>(w.length());
  const auto k = static_cast<std::int64_t>(w.b_count());
  return l * graph.a() + k * graph.d();
}

std::optional<std::int64_t> winding_number(const CirculantGraph& graph, const Word& w) {
  const std::int64_t delta = transit_distance(graph, w);
  if (delta % graph.n() != 0) return std::nullopt;
  return delta / graph.n();
}

std::vector<Vertex> path_from(const CirculantGraph& graph, Vertex v, const Word& w) {
  std::vector<Vertex> path;
  path.reserve(w.length() + 1);
  path.push_back(graph.reduce(v));
  for (std::size_t i = 0; i < w.length(); ++i) {
    path.push_back(Bond{path.back(), w[i]}.terminus(graph));
  }
  return path;
}

Circuit::Circuit(const CirculantGraph& graph, Vertex start, Word steps)
    : start_(graph.reduce(start)), steps_(std::move(steps)), winding_(0) {
  if (steps_.empty()) throw InvalidArgument("a circuit needs at least one bond");
  const auto omega = winding_number(graph, steps_);
  if (!omega) {
    throw DoesNotClose("step sequence " + steps_.to_string(graph.alphabet()) +
                       " does not close on " + graph.name());
  }
  winding_ = *omega;
}

StepList validate_steps(std::int64_t n, std::vector<std::int64_t> steps) {
  if (steps.empty()) throw RejectedParameters("at least one step size is required");
  std::int64_t prev = 0;
  for (std::int64_t s : steps) {
    if (s <= prev || s >= n) {
      throw RejectedParameters("step sizes must satisfy 0 < s_1 < ... < s_m < n (n=" +
                               std::to_string(n) + ")");
    }
    prev = s;
  }
  return {n, std::move(steps)};
}

std::int64_t component_count(const StepList& graph) {
  std::int64_t g = graph.n;
  for (std::int64_t s : graph.steps) g = std::gcd(g, s);
  return g;
}

std::string to_dot(const StepList& graph) {
  std::ostringstream name;
  name << "C_" << graph.n << "(";
  for (std::size_t i = 0; i < graph.steps.size(); ++i) {
    if (i > 0) name << ",";
    name << graph.steps[i];
  }
  name << ")";

  const std::int64_t components = component_count(graph);
  std::ostringstream out;
  out << "digraph \"" << name.str() << "\" {\n";
  out << "  layout=circo;\n";
  out << "  label=\"" << name.str() << ", " << components << " strongly connected component"
      << (components == 1 ? "" : "s") << "\";\n";
  out << "  node [shape=circle];\n";
  for (std::int64_t v = 0; v < graph.n; ++v) out << "  " << v << ";\n";
  const bool lettered = graph.steps.size() == 2;
  for (std::int64_t v = 0; v < graph.n; ++v) {
    for (std::size_t i = 0; i < graph.steps.size(); ++i) {
      const std::int64_t s = graph.steps[i];
      out << "  " << v << " -> " << (v + s) % graph.n << " [label=\"";
      if (lettered) {
        out << (i == 0 ? 'a' : 'b');
      } else {
        out << s;
      }
      out << "\", step=" << s << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const CirculantGraph& graph) {
  return to_dot(StepList{graph.n(), {graph.a(), graph.b()}});
}

}  // namespace circorbit
