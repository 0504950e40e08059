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

#include "circorbit/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "circorbit/counting.hpp"
#include "circorbit/errors.hpp"
#include "circorbit/graph.hpp"
#include "circorbit/lattice.hpp"
#include "circorbit/oracle.hpp"
#include "circorbit/serialize.hpp"
#include "circorbit/words.hpp"

namespace circorbit::cli {

namespace {

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnvVar)) {
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
    throw InvalidArgument(std::string(kBudgetEnvVar) + " must be a positive integer, got \"" +
                          std::string(text) + "\"");
  }
  return kDefaultEnumerationBudget;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, end - pos);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidArgument("expected a comma-separated list of integers, got \"" + text + "\"");
    }
    values.push_back(v);
    pos = end + 1;
  }
  return values;
}

struct GraphArgs {
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--n", n, "number of vertices")->required();
    cmd->add_option("--a", a, "smaller step size")->required();
    cmd->add_option("--b", b, "larger step size")->required();
  }
};

void print_plain(std::ostream& out, const OrbitCountReport& r) {
  out << "C_" << r.n << "(" << r.a << "," << r.b << ")  l=" << r.l << " k=" << r.k;
  if (r.omega) {
    out << " omega=" << *r.omega;
  } else {
    out << " (not admissible)";
  }
  out << "  method=" << to_string(r.method) << "\n";
  for (const CountTerm& t : r.terms) {
    out << "  ";
    if (t.q) out << "q=" << std::setw(4) << std::left << *t.q << ' ';
    out << "m=" << std::setw(4) << std::left << t.m << " mu=" << std::setw(3) << std::right
        << t.mu << "  C=" << t.binomial.str() << "\n";
  }
  out << "count " << r.count.str() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and enumeration of primitive periodic orbits on circulant digraphs "
               "C_n(a,b)",
               "circorbit"};
  app.require_subcommand(1);
  std::uint64_t budget = 0;
  std::string format;

  // count
  auto* count_cmd = app.add_subcommand("count", "count primitive periodic orbits");
  GraphArgs count_graph;
  count_graph.add_to(count_cmd);
  std::int64_t length = 0;
  std::optional<std::int64_t> bcount;
  std::string method_name = "reduced";
  bool show_skipped = false;
  count_cmd->add_option("--length", length, "orbit length l")->required();
  count_cmd->add_option("--bcount", bcount, "b-count k; omit to sum over all admissible k");
  count_cmd->add_option("--method", method_name, "reduced | unreduced | oracle")
      ->check(CLI::IsMember({"reduced", "unreduced", "oracle"}));
  count_cmd->add_flag("--show-skipped", show_skipped,
                      "list winding numbers whose b-count is fractional");
  count_cmd->add_option("--format", format, "json | plain")
      ->check(CLI::IsMember({"json", "plain"}));
  count_cmd->add_option("--budget", budget, "enumeration budget for --method oracle");

  // lattice
  auto* lattice_cmd = app.add_subcommand("lattice", "lattice basis and admissible (l,k,omega)");
  GraphArgs lattice_graph;
  lattice_graph.add_to(lattice_cmd);
  std::int64_t lmax = 0;
  lattice_cmd->add_option("--lmax", lmax, "largest orbit length")->required();
  lattice_cmd->add_option("--format", format, "json | csv | plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  // lyndon count|list
  auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon words with fixed b-count");
  lyndon_cmd->require_subcommand(1);
  auto* lyndon_count = lyndon_cmd->add_subcommand("count", "count Lyndon words");
  auto* lyndon_list = lyndon_cmd->add_subcommand("list", "list Lyndon words in lexicographic order");
  std::int64_t word_length = 0;
  std::int64_t word_bcount = 0;
  std::string steps_arg;
  for (auto* cmd : {lyndon_count, lyndon_list}) {
    cmd->add_option("--length", word_length, "word length l")->required();
    cmd->add_option("--bcount", word_bcount, "number of letters b")->required();
  }
  lyndon_list->add_option("--steps", steps_arg, "n,a,b: print words in step notation");
  lyndon_list->add_option("--budget", budget, "generation budget");
  lyndon_list->add_option("--format", format, "plain | json")
      ->check(CLI::IsMember({"json", "plain"}));

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "brute-force orbit enumeration (JSON lines)");
  GraphArgs enum_graph;
  enum_graph.add_to(enum_cmd);
  std::int64_t enum_length = 0;
  std::optional<std::int64_t> enum_bcount;
  bool primitive_only = false;
  enum_cmd->add_option("--length", enum_length, "orbit length l")->required();
  enum_cmd->add_option("--bcount", enum_bcount, "restrict to b-count k");
  enum_cmd->add_flag("--primitive-only", primitive_only, "omit nonprimitive orbits");
  enum_cmd->add_option("--budget", budget, "enumeration budget (2^l * n presentations)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "compare closed formulas against enumeration");
  std::int64_t nmax = 0;
  std::int64_t verify_lmax = 0;
  verify_cmd->add_option("--nmax", nmax, "largest vertex count")->required();
  verify_cmd->add_option("--lmax", verify_lmax, "largest orbit length")->required();
  verify_cmd->add_option("--budget", budget, "enumeration budget");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "render a circulant digraph");
  std::int64_t graph_n = 0;
  std::string graph_steps;
  graph_cmd->add_option("--n", graph_n, "number of vertices")->required();
  graph_cmd->add_option("--steps", graph_steps, "s1,s2,... step sizes")->required();
  graph_cmd->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("circorbit");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParameterError;
  }

  try {
    if (budget == 0) budget = default_budget();

    if (count_cmd->parsed()) {
      const CirculantGraph graph = CirculantGraph::create(count_graph.n, count_graph.a, count_graph.b);
      graph.require_connected();
      const CountMethod method = parse_count_method(method_name);
      const bool plain = format == "plain";
      if (bcount) {
        OrbitCountReport report;
        switch (method) {
          case CountMethod::reduced:
            report = count_orbits_lk(graph, length, *bcount);
            break;
          case CountMethod::unreduced:
            report = count_orbits_lk_unreduced(graph, length, *bcount);
            break;
          case CountMethod::oracle:
            report = count_by_enumeration(graph, length, *bcount, budget);
            break;
        }
        if (plain) {
          print_plain(out, report);
        } else {
          out << to_json(report).dump() << "\n";
        }
        return kSuccess;
      }

      LengthCount counts;
      if (method == CountMethod::oracle) {
        counts.skipped = skipped_windings(graph, length);
        for (const OrbitClass& cls : bcounts_for_length(graph, length)) {
          OrbitCountReport r = count_by_enumeration(graph, cls.l, cls.k, budget);
          counts.total += r.count;
          counts.per_class.push_back(std::move(r));
        }
      } else {
        counts = count_orbits_l(graph, length, method);
      }
      if (plain) {
        out << graph.name() << "  l=" << length << "  method=" << method_name << "\n";
        out << std::setw(8) << "k" << std::setw(8) << "omega" << "  count\n";
        for (const auto& r : counts.per_class) {
          out << std::setw(8) << r.k << std::setw(8) << *r.omega << "  " << r.count.str() << "\n";
        }
        if (show_skipped) {
          for (const SkippedWinding& s : counts.skipped) {
            out << std::setw(8) << (std::to_string(s.k_numerator) + "/" + std::to_string(s.k_denominator))
                << std::setw(8) << s.omega << "  skipped (fractional b-count)\n";
          }
        }
        out << "total " << counts.total.str() << "\n";
      } else {
        out << to_json(graph, length, counts, show_skipped).dump() << "\n";
      }
      return kSuccess;
    }

    if (lattice_cmd->parsed()) {
      const CirculantGraph graph =
          CirculantGraph::create(lattice_graph.n, lattice_graph.a, lattice_graph.b);
      const LatticeBasis base = basis(graph);
      const std::vector<OrbitClass> points = lattice_points(graph, lmax);
      if (format == "csv") {
        out << "# " << graph.name() << " basis: a_prime=" << base.a_prime
            << " d_prime=" << base.d_prime << " l0=" << base.l0 << " k0=" << base.k0
            << " M=[[" << base.k0 << "," << -base.l0 << "],[" << base.a_prime << ","
            << base.d_prime << "]]/" << base.n << "\n";
        out << to_csv(points);
      } else if (format == "plain") {
        out << graph.name() << "  g=" << base.g << "  a'=" << base.a_prime << "  d'=" << base.d_prime
            << "  (l0,k0)=(" << base.l0 << "," << base.k0 << ")\n";
        out << "M = (1/" << base.n << ") [[" << base.k0 << ", " << -base.l0 << "], ["
            << base.a_prime << ", " << base.d_prime << "]]\n";
        for (const OrbitClass& c : points) {
          out << "  l=" << c.l << " k=" << c.k << " omega=" << c.omega << "\n";
        }
      } else {
        Json j;
        j["graph"] = {{"n", graph.n()}, {"a", graph.a()}, {"b", graph.b()}};
        j["basis"] = to_json(base);
        Json rows = Json::array();
        for (const OrbitClass& c : points) rows.push_back(to_json(c));
        j["points"] = std::move(rows);
        out << j.dump() << "\n";
      }
      return kSuccess;
    }

    if (lyndon_count->parsed()) {
      out << count_lyndon(word_length, word_bcount).str() << "\n";
      return kSuccess;
    }

    if (lyndon_list->parsed()) {
      std::optional<CirculantGraph> context;
      if (!steps_arg.empty()) {
        const std::vector<std::int64_t> nab = parse_int_list(steps_arg);
        if (nab.size() != 3) throw InvalidArgument("--steps expects n,a,b");
        context = CirculantGraph::create(nab[0], nab[1], nab[2]);
      }
      const std::vector<Word> words = list_lyndon(word_length, word_bcount, budget);
      auto render = [&](const Word& w) {
        return context ? w.to_string(context->alphabet()) : w.to_string();
      };
      if (format == "json") {
        Json arr = Json::array();
        for (const Word& w : words) arr.push_back(render(w));
        out << arr.dump() << "\n";
      } else {
        for (const Word& w : words) out << render(w) << "\n";
      }
      return kSuccess;
    }

    if (enum_cmd->parsed()) {
      const CirculantGraph graph = CirculantGraph::create(enum_graph.n, enum_graph.a, enum_graph.b);
      std::uint64_t primitive = 0;
      std::uint64_t nonprimitive = 0;
      for (const Orbit& orbit : enumerate_orbits(graph, enum_length, enum_bcount, budget)) {
        if (orbit.primitive()) {
          ++primitive;
        } else {
          ++nonprimitive;
          if (primitive_only) continue;
        }
        out << to_json(graph, orbit).dump() << "\n";
      }
      Json summary;
      summary["n"] = graph.n();
      summary["a"] = graph.a();
      summary["b"] = graph.b();
      summary["l"] = enum_length;
      summary["k"] = enum_bcount ? Json(*enum_bcount) : Json(nullptr);
      summary["primitive"] = primitive;
      summary["nonprimitive"] = nonprimitive;
      err << Json{{"summary", std::move(summary)}}.dump() << "\n";
      return kSuccess;
    }

    if (verify_cmd->parsed()) {
      const VerificationReport report = verify_range(nmax, verify_lmax, budget);
      out << to_json(report).dump() << "\n";
      return report.passed() ? kSuccess : kVerificationMismatch;
    }

    if (graph_cmd->parsed()) {
      out << to_dot(validate_steps(graph_n, parse_int_list(graph_steps)));
      return kSuccess;
    }
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << "\n";
    return kDisconnectedGraph;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kParameterError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kParameterError;
}

}  // namespace circorbit::cli
