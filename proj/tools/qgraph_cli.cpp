// Copyright 2026 The qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Prints one JSON report per invocation.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 unsupported.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgraph/automorphisms.hpp"
#include "qgraph/canonical.hpp"
#include "qgraph/decomposition.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/homcount.hpp"
#include "qgraph/quantum_expr.hpp"
#include "qgraph/schmidt.hpp"
#include "qgraph/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qgraph;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;

struct Flags {
  std::uint64_t seed = 0;
  int max_n = 11;
  std::uint64_t budget = 100'000'000;
  double tol = kDefaultTol;
  bool timing = false;
};

// "-" or empty reads stdin; an existing path reads the file; anything else is
// graph text.
Graph load_graph(const std::string& arg) {
  std::string text;
  if (arg.empty() || arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text = arg;
  }
  return parse_graph(text);
}

bool in_qu_domain(const Graph& g) {
  return recognize_tree_cograph(g) || recognize_g5_cograph(g);
}

json cmd_recognize(const Graph& g) {
  json r;
  r["n"] = g.n();
  r["edges"] = g.num_edges();
  r["cograph"] = recognize_cograph(g);
  r["forest"] = recognize_forest(g);
  r["tree_cograph"] = recognize_tree_cograph(g);
  r["g5_cograph"] = recognize_g5_cograph(g);
  auto d = decompose(g, BaseClass::kSupported);
  r["decomposition"] = d ? to_json(*d) : json(nullptr);
  return r;
}

json witness_json(const SchmidtResult& s) {
  if (!s.witness) return nullptr;
  return json::array({s.witness->first.to_string(), s.witness->second.to_string()});
}

json cmd_qsym(const Graph& g, const Flags& f) {
  AutOptions ao;
  ao.max_n = f.max_n;
  json r;
  const bool small = g.n() <= f.max_n;
  std::optional<SchmidtResult> brute;
  if (small) brute = schmidt_bruteforce(g, ao);
  if (in_qu_domain(g)) {
    auto d = decompose(g, BaseClass::kSupported);
    const bool schmidt = schmidt_structural(*d);
    r["schmidt"] = schmidt;
    r["has_quantum_symmetry"] = !is_commutative(qu_expr(g));
    r["method"] = "structural";
  } else if (brute && brute->holds) {
    // Schmidt's criterion alone already forces quantum symmetry.
    r["schmidt"] = true;
    r["has_quantum_symmetry"] = true;
    r["method"] = "bruteforce";
  } else {
    throw Unsupported("quantum symmetry is undecided outside the supported classes");
  }
  r["witness"] = brute ? witness_json(*brute) : json(nullptr);
  return r;
}

json cmd_qaut(const Graph& g) {
  QExpr e = qu_expr(g);
  json r;
  r["qexpr"] = serialize(e);
  r["classical_order"] = classical_order(e).str();
  r["is_trivial"] = is_trivial(e);
  r["is_commutative"] = is_commutative(e);
  r["in_jordan_grammar"] = in_jordan_grammar(e);
  r["expr"] = to_json(e);
  return r;
}

json cmd_qiso(const Graph& g, const Graph& h) {
  // Tree-cographs and G5-cographs are superrigid: a graph quantum isomorphic
  // to one of them is isomorphic to it.
  if (!in_qu_domain(g) && !in_qu_domain(h)) {
    throw Unsupported("quantum isomorphism is undecided outside the supported classes");
  }
  const bool iso = iso_test(g, h);
  json r;
  r["isomorphic"] = iso;
  r["quantum_isomorphic"] = iso;
  return r;
}

json cmd_hom(const Graph& g, const Graph& h, const Flags& f) {
  CountOptions o;
  o.budget = f.budget;
  HomCounts c = count_all(g, h, o);
  json r;
  r["hom"] = c.hom;
  r["mon"] = c.mon;
  r["quo"] = c.quo;
  r["aut"] = c.aut;
  return r;
}

json suite_json(const SuiteResult& s, bool timing) {
  json r;
  r["suite"] = s.name;
  r["passed"] = s.passed;
  r["checked"] = s.checked;
  r["failures"] = s.failures;
  r["details"] = s.details;
  if (timing) r["seconds"] = s.seconds;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum automorphism groups of graphs in tractable classes"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--seed", flags.seed, "Seed for randomized checks");
  app.add_option("--max-n", flags.max_n, "Vertex limit for brute-force automorphisms");
  app.add_option("--budget", flags.budget, "Work budget for homomorphism counting");
  app.add_option("--tol", flags.tol, "Numerical tolerance");
  app.add_flag("--timing", flags.timing, "Add wall-clock timing to the report");

  std::string g_arg;
  std::string h_arg;
  std::string suite = "all";

  auto* recognize = app.add_subcommand("recognize", "Class membership and decomposition");
  recognize->add_option("graph", g_arg, "graph6, edge list, file, or - for stdin");
  auto* qsym = app.add_subcommand("qsym", "Schmidt criterion and quantum symmetry");
  qsym->add_option("graph", g_arg, "graph6, edge list, file, or - for stdin");
  auto* qaut = app.add_subcommand("qaut", "Quantum automorphism group expression");
  qaut->add_option("graph", g_arg, "graph6, edge list, file, or - for stdin");
  auto* qiso = app.add_subcommand("qiso", "Isomorphism and quantum isomorphism");
  qiso->add_option("first", g_arg, "First graph")->required();
  qiso->add_option("second", h_arg, "Second graph")->required();
  auto* hom = app.add_subcommand("hom", "Homomorphism, mono, quotient, and automorphism counts");
  hom->add_option("first", g_arg, "First graph")->required();
  hom->add_option("second", h_arg, "Second graph")->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  int exit_code = kExitOk;
  try {
    if (verify->parsed()) {
      report["command"] = "verify";
      VerifyOptions vo;
      vo.seed = flags.seed;
      vo.tol = flags.tol;
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        names.push_back(suite);
      }
      json results = json::array();
      bool all_ok = true;
      for (const auto& name : names) {
        SuiteResult s = run_suite(name, vo);
        all_ok = all_ok && s.passed;
        results.push_back(suite_json(s, flags.timing));
      }
      report["result"] = {{"passed", all_ok}, {"suites", results}};
      if (!all_ok) exit_code = kExitVerifyFailed;
    } else {
      Graph g = load_graph(g_arg);
      if (qiso->parsed() || hom->parsed()) {
        Graph h = load_graph(h_arg);
        report["command"] = qiso->parsed() ? "qiso" : "hom";
        report["input"] = json::array({write_graph6(g), write_graph6(h)});
        report["result"] = qiso->parsed() ? cmd_qiso(g, h) : cmd_hom(g, h, flags);
      } else {
        const char* name = recognize->parsed() ? "recognize" : qsym->parsed() ? "qsym" : "qaut";
        report["command"] = name;
        report["input"] = write_graph6(g);
        if (recognize->parsed()) {
          report["result"] = cmd_recognize(g);
        } else if (qsym->parsed()) {
          report["result"] = cmd_qsym(g, flags);
        } else {
          report["result"] = cmd_qaut(g);
        }
      }
    }
  } catch (const ParseError& e) {
    report = {{"error", "input"}, {"message", e.what()}};
    exit_code = kExitInput;
  } catch (const InvalidArgument& e) {
    report = {{"error", "input"}, {"message", e.what()}};
    exit_code = kExitInput;
  } catch (const Unsupported& e) {
    report = {{"error", "unsupported"}, {"message", e.what()}};
    exit_code = kExitUnsupported;
  } catch (const LimitExceeded& e) {
    report = {{"error", "unsupported"}, {"message", e.what()}};
    exit_code = kExitUnsupported;
  }
  if (flags.timing) {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  std::cout << report.dump(2) << '\n';
  return exit_code;
}
