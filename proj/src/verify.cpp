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

#include "qgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "qgraph/automorphisms.hpp"
#include "qgraph/canonical.hpp"
#include "qgraph/decomposition.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/homcount.hpp"
#include "qgraph/parallel.hpp"
#include "qgraph/quantum_expr.hpp"
#include "qgraph/schmidt.hpp"

namespace qgraph {

namespace {

using Clock = std::chrono::steady_clock;

void fail(SuiteResult& r, const std::string& what) {
  r.passed = false;
  if (r.failures.size() < 20) r.failures.push_back(what);
}

// Per-item failure messages from a parallel scan, merged in index order.
void merge(SuiteResult& r, const std::vector<std::string>& messages) {
  for (const auto& m : messages) {
    if (!m.empty()) fail(r, m);
  }
  r.checked += messages.size();
}

std::vector<Graph> all_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& g : enumerate_graphs(k)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> trees_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& t : enumerate_trees(k)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Graph> forests_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& f : enumerate_forests(k)) out.push_back(std::move(f));
  }
  return out;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_connected(int n, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, rng);
    if (is_connected(g)) return g;
  }
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

void suite_cograph_classification(SuiteResult& r, const VerifyOptions& o) {
  auto start = Clock::now();
  std::size_t total = 0;
  for (int n = 1; n <= 7; ++n) {
    auto gs = enumerate_graphs(n);
    total += gs.size();
    std::vector<std::string> key(gs.size());
    parallel_for(gs.size(), [&](std::size_t i) {
      if (recognize_cograph(gs[i]) && !schmidt_bruteforce(gs[i]).holds) {
        key[i] = brute_canonical(gs[i]);
      }
    }, o.parallel);
    std::set<std::string> found;
    for (auto& k : key) {
      if (!k.empty()) found.insert(k);
    }
    std::set<std::string> expected;
    if (n == 1) {
      expected.insert(brute_canonical(Graph(1)));
    } else {
      for (const Graph& x : {build_X(n), build_Y(n)}) {
        expected.insert(brute_canonical(x));
        expected.insert(brute_canonical(complement(x)));
      }
    }
    r.details["non_schmidt_cographs"][std::to_string(n)] = found.size();
    if (found != expected) {
      fail(r, "non-Schmidt cographs on " + std::to_string(n) +
                  " vertices differ from {X_n, X_n^c, Y_n, Y_n^c}");
    }
  }
  r.checked = total;
  r.details["graphs"] = total;
  if (total != 1252) fail(r, "expected 1252 graphs on at most 7 vertices");
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) fail(r, "runtime bound of 60 s exceeded");
}

void suite_schmidt_alternative(SuiteResult& r, const VerifyOptions& o) {
  auto start = Clock::now();
  auto gs = all_graphs_up_to(7);
  std::vector<std::string> msg(gs.size());
  std::vector<int> supported(gs.size(), 0);
  parallel_for(gs.size(), [&](std::size_t i) {
    const Graph& g = gs[i];
    const bool brute = schmidt_bruteforce(g).holds;
    bool any = false;
    for (BaseClass b : {BaseClass::kCograph, BaseClass::kTreeCograph, BaseClass::kG5}) {
      auto d = decompose(g, b);
      if (!d) continue;
      any = true;
      if (schmidt_structural(*d) != brute) {
        msg[i] = std::string("structural Schmidt differs (") + to_string(b) +
                 ") on " + write_graph6(g);
      }
    }
    if (recognize_forest(g)) {
      any = true;
      if (!recognize_tree_cograph(g)) msg[i] = "forest not a tree-cograph " + write_graph6(g);
    }
    if (!any) return;
    supported[i] = 1;
    if (is_commutative(qu_expr(g)) == brute) {
      msg[i] = "commutativity does not match Schmidt on " + write_graph6(g);
    }
  }, o.parallel);
  merge(r, msg);
  r.details["supported_graphs"] = std::count(supported.begin(), supported.end(), 1);
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 120.0) fail(r, "runtime bound of 120 s exceeded");
}

void suite_abelianization(SuiteResult& r, const VerifyOptions& o) {
  auto forests = forests_up_to(9);
  std::vector<Graph> tc;
  for (auto& g : all_graphs_up_to(7)) {
    if (recognize_tree_cograph(g)) tc.push_back(std::move(g));
  }
  r.details["forests"] = forests.size();
  r.details["tree_cographs"] = tc.size();
  std::vector<Graph> all = forests;
  all.insert(all.end(), tc.begin(), tc.end());
  std::vector<std::string> msg(all.size());
  parallel_for(all.size(), [&](std::size_t i) {
    if (classical_order(qu_expr(all[i])) != count_automorphisms(all[i])) {
      msg[i] = "classical order differs from |Aut| on " + write_graph6(all[i]);
    }
  }, o.parallel);
  merge(r, msg);
}

void suite_quantum_asymmetry(SuiteResult& r, const VerifyOptions& o) {
  auto trees = trees_up_to(9);
  std::vector<std::string> msg(trees.size());
  std::vector<int> asym(trees.size(), 0);
  parallel_for(trees.size(), [&](std::size_t i) {
    asym[i] = count_automorphisms(trees[i]) == 1;
    if (is_trivial(qu_expr(trees[i])) != static_cast<bool>(asym[i])) {
      msg[i] = "triviality differs from asymmetry on " + write_graph6(trees[i]);
    }
  }, o.parallel);
  merge(r, msg);
  r.details["trees"] = trees.size();
  r.details["asymmetric"] = std::count(asym.begin(), asym.end(), 1);
}

void suite_psi(SuiteResult& r, const VerifyOptions& o) {
  for (int n = 1; n <= 9; ++n) {
    auto trees = enumerate_trees(n);
    std::vector<std::string> msg(trees.size());
    std::vector<CanonKey> keys(trees.size());
    parallel_for(trees.size(), [&](std::size_t i) {
      RootedTree rt = psi(trees[i]);
      std::vector<int> colors(rt.tree.n(), 0);
      colors[rt.root] = 1;
      if (count_automorphisms(trees[i]) != count_automorphisms(rt.tree, colors)) {
        msg[i] = "psi changes the automorphism count of " + write_graph6(trees[i]);
      }
      keys[i] = rooted_tree_canonical(rt);
    }, o.parallel);
    merge(r, msg);
    std::set<CanonKey> distinct(keys.begin(), keys.end());
    if (distinct.size() != trees.size()) {
      fail(r, "psi is not injective on trees with " + std::to_string(n) + " vertices");
    }
  }
}

void suite_census(SuiteResult& r, const VerifyOptions&) {
  auto gs = enumerate_graphs(5);
  r.checked = gs.size();
  if (gs.size() != 34) fail(r, "expected 34 graphs on five vertices");
  // Expected non-tree-cographs with their centers.
  const std::vector<std::pair<Graph, Graph>> expected = {
      {graphs::cycle(5), graphs::cycle(5)},
      {graphs::bull(), graphs::complete(3)},
      {graphs::pan(), graphs::path(3)},
      {complement(graphs::pan()), graphs::complete(2)},
  };
  std::set<std::string> want;
  for (const auto& [g, z] : expected) want.insert(brute_canonical(g));
  std::set<std::string> got;
  for (const Graph& g : gs) {
    if (recognize_tree_cograph(g)) continue;
    got.insert(brute_canonical(g));
    bool matched = false;
    for (const auto& [e, z] : expected) {
      if (iso_test(g, e)) {
        matched = true;
        if (!iso_test(induced_subgraph(g, center(g)), z)) {
          fail(r, "unexpected center for " + write_graph6(g));
        }
      }
    }
    if (!matched) fail(r, "unexpected non-tree-cograph " + write_graph6(g));
  }
  r.details["negatives"] = got.size();
  if (got != want) fail(r, "non-tree-cographs are not pan, pan^c, bull, C5");
}

void suite_lovasz(SuiteResult& r, const VerifyOptions& o) {
  auto start = Clock::now();
  auto small = all_graphs_up_to(4);
  std::vector<std::pair<Graph, Graph>> pairs;
  for (const auto& g : small) {
    for (const auto& h : small) pairs.emplace_back(g, h);
  }
  const std::size_t exhaustive = pairs.size();
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> hsize(1, 6);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(5, rng);
    Graph h = random_graph(hsize(rng), rng);
    pairs.emplace_back(std::move(g), std::move(h));
  }
  // Build the shared representative cache before the parallel scan.
  for (int k = 1; k <= 5; ++k) lovasz_terms(Graph(k), Graph(1));
  std::vector<std::string> msg(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& [g, h] = pairs[i];
    if (lovasz_sum(g, h) != hom_count_serial(g, h)) {
      msg[i] = "Lovasz sum differs for " + write_graph6(g) + " -> " + write_graph6(h);
    }
  }, o.parallel);
  merge(r, msg);
  r.details["exhaustive_pairs"] = exhaustive;
  r.details["random_pairs"] = 200;
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) fail(r, "runtime bound of 60 s exceeded");
}

void suite_hom_identities(SuiteResult& r, const VerifyOptions& o) {
  auto gs = all_graphs_up_to(6);
  const Graph k1(1);
  const Graph k2 = graphs::complete(2);
  std::vector<std::string> msg(gs.size());
  parallel_for(gs.size(), [&](std::size_t i) {
    const Graph& g = gs[i];
    if (hom_count(k1, g) != static_cast<std::uint64_t>(g.n()) ||
        hom_count(k2, g) != 2 * static_cast<std::uint64_t>(g.num_edges())) {
      msg[i] = "hom identity fails on " + write_graph6(g);
    }
  }, o.parallel);
  merge(r, msg);
}

void suite_f_isomorphism(SuiteResult& r, const VerifyOptions& o) {
  auto forests = forests_up_to(6);
  auto family = trees_up_to(6);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < forests.size(); ++i) {
    for (std::size_t j = i + 1; j < forests.size(); ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::string> msg(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const Graph& a = forests[pairs[k].first];
    const Graph& b = forests[pairs[k].second];
    if (f_isomorphic(a, b, family).equivalent) {
      msg[k] = "trees do not separate " + write_graph6(a) + " and " + write_graph6(b);
    }
  }, o.parallel);
  merge(r, msg);
  r.details["forests"] = forests.size();
  r.details["pairs"] = pairs.size();
}

void suite_magic(SuiteResult& r, const VerifyOptions& o) {
  MagicUnitary w = k4_witness();
  w.set_tol(o.tol);
  const double comm = max_commutator_norm(w);
  r.details["k4_commutator_norm"] = comm;
  if (!is_magic_unitary(w)) fail(r, "K4 witness is not a magic unitary");
  if (!adapted_to(w, graphs::complete(4))) fail(r, "K4 witness is not adapted to K4");
  if (std::abs(comm - 0.5) > 1e-9) fail(r, "K4 commutator norm is not 0.5");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> small_dim(1, 2);
  for (int t = 0; t < 200; ++t) {
    const int n = size(rng);
    MagicUnitary u = random_magic_unitary(n, dim(rng), rng);
    MagicUnitary v = random_magic_unitary(n, small_dim(rng), rng);
    u.set_tol(o.tol);
    v.set_tol(o.tol);
    const std::string tag = " (trial " + std::to_string(t) + ")";
    if (!is_magic_unitary(u)) fail(r, "random magic unitary invalid" + tag);
    if (!is_magic_unitary(convolve(u, v))) fail(r, "convolution invalid" + tag);
    Permutation p = positivity_permutation(u);
    for (int j = 0; j < n; ++j) {
      if (u.at(p[j], j).norm() <= o.tol) fail(r, "positivity permutation hits zero" + tag);
    }
    Eigen::MatrixXd s = entrywise_trace(u);
    for (int i = 0; i < n; ++i) {
      if (std::abs(s.row(i).sum() - 1.0) > o.tol || std::abs(s.col(i).sum() - 1.0) > o.tol) {
        fail(r, "trace matrix not doubly stochastic" + tag);
      }
    }
    if (s.minCoeff() < -o.tol || s.maxCoeff() > 1.0 + o.tol) {
      fail(r, "trace matrix entries outside [0,1]" + tag);
    }
    ++r.checked;
  }
  // Quantum isomorphisms g -> sigma(g) from adapted unitaries.
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 5;
    Graph g = random_graph(n, rng);
    MagicUnitary a = random_adapted(g, 1 + t % 3, rng);
    std::vector<int> sigma = random_perm(n, rng);
    Graph h = relabel(g, sigma);
    MagicUnitary q = convolve(permutation_pattern(Permutation(sigma)), a);
    q.set_tol(o.tol);
    const std::string tag = " (iso trial " + std::to_string(t) + ")";
    if (!is_quantum_iso(q, g, h)) fail(r, "conjugated unitary is not a quantum iso" + tag);
    Eigen::MatrixXd s = entrywise_trace(q);
    Eigen::MatrixXd ag(n, n);
    Eigen::MatrixXd ah(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        ag(i, j) = g.adjacent(i, j);
        ah(i, j) = h.adjacent(i, j);
      }
    }
    if ((s * ag - ah * s).cwiseAbs().maxCoeff() > 1e-9) {
      fail(r, "trace matrix does not intertwine adjacencies" + tag);
    }
    if (!fractionally_isomorphic(g, h)) fail(r, "quantum isomorphic graphs not fractionally isomorphic" + tag);
    ++r.checked;
  }
}

void suite_fractional(SuiteResult& r, const VerifyOptions& o) {
  const Graph c6 = graphs::cycle(6);
  const Graph two_k3 = disjoint_sum(graphs::complete(3), graphs::complete(3));
  if (!fractionally_isomorphic(c6, two_k3)) fail(r, "C6 and 2K3 should be fractionally isomorphic");
  if (iso_test(c6, two_k3)) fail(r, "C6 and 2K3 are not isomorphic");
  for (int n = 1; n <= 8; ++n) {
    auto trees = enumerate_trees(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = 0; j < trees.size(); ++j) pairs.emplace_back(i, j);
    }
    std::vector<std::string> msg(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
      const Graph& a = trees[pairs[k].first];
      const Graph& b = trees[pairs[k].second];
      if (fractionally_isomorphic(a, b) && !iso_test(a, b)) {
        msg[k] = "fractionally isomorphic trees not isomorphic: " + write_graph6(a) +
                 " " + write_graph6(b);
      }
    }, o.parallel);
    merge(r, msg);
  }
}

void suite_component_projections(SuiteResult& r, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed + 12);
  std::uniform_int_distribution<int> piece_size(1, 3);
  std::uniform_int_distribution<int> copies(2, 3);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int t = 0; t < 50; ++t) {
    // Repeated components so automorphisms can exchange them.
    const int k = piece_size(rng);
    const int m = copies(rng);
    Graph piece = random_connected(k, rng);
    std::vector<Graph> parts(m, piece);
    int used = k * m;
    if (used + 2 <= 8) {
      parts.push_back(random_connected(2, rng));
      used += 2;
    }
    if (used + 1 <= 8) parts.push_back(Graph(1));
    Graph g = disjoint_sum(parts);
    MagicUnitary a = random_adapted(g, dim(rng), rng);
    std::vector<int> sigma = random_perm(g.n(), rng);
    Graph h = relabel(g, sigma);
    MagicUnitary q = convolve(permutation_pattern(Permutation(sigma)), a);
    q.set_tol(o.tol);
    const std::string tag = " (trial " + std::to_string(t) + ", " + write_graph6(g) + ")";
    if (!check_component_projections(q, g, h).ok) fail(r, "component projections" + tag);
    if (!check_eccentricity_blocks(q, g, h).ok) fail(r, "eccentricity blocks" + tag);
    // Complements are connected, so their eccentricities are finite.
    if (!check_eccentricity_blocks(q, complement(g), complement(h)).ok) {
      fail(r, "eccentricity blocks on complements" + tag);
    }
    ++r.checked;
  }
}

const std::vector<std::pair<std::string, std::function<void(SuiteResult&, const VerifyOptions&)>>>&
registry() {
  static const std::vector<
      std::pair<std::string, std::function<void(SuiteResult&, const VerifyOptions&)>>>
      suites = {
          {"cograph-classification", suite_cograph_classification},
          {"schmidt-alternative", suite_schmidt_alternative},
          {"abelianization", suite_abelianization},
          {"quantum-asymmetry", suite_quantum_asymmetry},
          {"psi", suite_psi},
          {"census", suite_census},
          {"lovasz", suite_lovasz},
          {"hom-identities", suite_hom_identities},
          {"f-isomorphism", suite_f_isomorphism},
          {"magic", suite_magic},
          {"fractional", suite_fractional},
          {"component-projections", suite_component_projections},
      };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    SuiteResult r;
    r.name = name;
    auto start = Clock::now();
    try {
      fn(r, options);
    } catch (const std::exception& e) {
      fail(r, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  }
  throw InvalidArgument("unknown suite: " + name);
}

}  // namespace qgraph
