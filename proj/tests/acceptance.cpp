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

// Acceptance harness: one PASS/FAIL line per criterion. Expected values come
// from the brute-force oracles in oracles.hpp, never from the library itself.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qgraph/automorphisms.hpp"
#include "qgraph/canonical.hpp"
#include "qgraph/decomposition.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/homcount.hpp"
#include "qgraph/magic.hpp"
#include "qgraph/quantum_expr.hpp"
#include "qgraph/schmidt.hpp"

using namespace qgraph;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::string note;
  std::vector<std::string> failures;
  void fail(const std::string& m) {
    ok = false;
    if (failures.size() < 5) failures.push_back(m);
  }
};

using Clock = std::chrono::steady_clock;

// Independent construction of Z_n(g): Z_1 = g, Z_{n+1} = K_1 + complement(Z_n).
Graph z_oracle(Graph g, int n) {
  for (int k = 1; k < n; ++k) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u) {
      for (int v = u + 1; v < g.n(); ++v) {
        if (!g.adjacent(u, v)) c.add_edge(u, v);
      }
    }
    Graph next(g.n() + 1);
    for (auto [u, v] : c.edges()) next.add_edge(u, v);
    g = next;
  }
  return g;
}

Graph complement_oracle(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

bool has_p4(const Graph& g) {
  static const std::string p4 = oracle::canonical(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (oracle::canonical(induced_subgraph(g, {a, b, c, d})) == p4) return true;
        }
  return false;
}

// Every graph on n <= 7 vertices, one per class. For n <= 6 this is the brute
// force oracle; for n = 7 the library list is checked for pairwise
// non-isomorphism and the class count instead.
std::vector<std::vector<Graph>> all_graphs(Outcome& out) {
  static const int expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  std::vector<std::vector<Graph>> gs(8);
  for (int n = 1; n <= 6; ++n) gs[n] = oracle::graphs(n);
  gs[7] = enumerate_graphs(7);
  std::set<std::string> keys;
  for (const Graph& g : gs[7]) keys.insert(oracle::canonical(g));
  if (keys.size() != gs[7].size()) out.fail("duplicate isomorphism classes at n=7");
  for (int n = 1; n <= 7; ++n) {
    if (static_cast<int>(gs[n].size()) != expected[n]) {
      out.fail("class count at n=" + std::to_string(n));
    }
  }
  return gs;
}

Outcome cograph_classification() {
  Outcome out;
  auto t0 = Clock::now();
  auto gs = all_graphs(out);
  std::size_t total = 0;
  for (int n = 1; n <= 7; ++n) {
    total += gs[n].size();
    std::set<std::string> expected;
    if (n == 1) {
      expected.insert(oracle::canonical(Graph(1)));
    } else {
      Graph x = z_oracle(Graph(1), n);
      Graph y = z_oracle(Graph(2, {{0, 1}}), n - 1);
      for (const Graph& g : {x, complement_oracle(x), y, complement_oracle(y)}) {
        expected.insert(oracle::canonical(g));
      }
    }
    std::set<std::string> failing;
    for (const Graph& g : gs[n]) {
      if (has_p4(g)) continue;
      const bool lib = schmidt_bruteforce(g).holds;
      if (lib != oracle::schmidt(g)) out.fail("schmidt mismatch " + write_graph6(g));
      if (!lib) failing.insert(oracle::canonical(g));
    }
    if (failing != expected) out.fail("non-Schmidt cographs differ at n=" + std::to_string(n));
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (total != 1252) out.fail("expected 1252 classes, got " + std::to_string(total));
  if (secs >= 60) out.fail("runtime " + std::to_string(secs) + " s");
  out.note = std::to_string(total) + " classes";
  return out;
}

Outcome schmidt_alternative() {
  Outcome out;
  auto t0 = Clock::now();
  auto gs = all_graphs(out);
  std::size_t checked = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : gs[n]) {
      if (!recognize_tree_cograph(g) && !recognize_g5_cograph(g)) continue;
      const bool schmidt = oracle::schmidt(g);
      if (schmidt_bruteforce(g).holds != schmidt) out.fail("brute force " + write_graph6(g));
      if (is_commutative(qu_expr(g)) != !schmidt) out.fail("commutativity " + write_graph6(g));
      auto d = decompose(g, BaseClass::kSupported);
      if (!d || schmidt_structural(*d) != schmidt) out.fail("structural " + write_graph6(g));
      ++checked;
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 120) out.fail("runtime " + std::to_string(secs) + " s");
  out.note = std::to_string(checked) + " graphs";
  return out;
}

Outcome abelianization() {
  Outcome out;
  std::size_t forests = 0;
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& f : oracle::forests(n)) {
      if (classical_order(qu_expr(f)) != oracle::aut_count(f)) out.fail("forest " + write_graph6(f));
      ++forests;
    }
  }
  std::size_t tcs = 0;
  auto gs = all_graphs(out);
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : gs[n]) {
      if (!recognize_tree_cograph(g)) continue;
      if (classical_order(qu_expr(g)) != oracle::aut_count(g)) out.fail("tree-cograph " + write_graph6(g));
      ++tcs;
    }
  }
  out.note = std::to_string(forests) + " forests, " + std::to_string(tcs) + " tree-cographs";
  return out;
}

Outcome quantum_asymmetry() {
  Outcome out;
  std::size_t trees = 0;
  std::size_t asym = 0;
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : oracle::trees(n)) {
      const bool trivial_aut = oracle::aut_count(t) == 1;
      if (is_trivial(qu_expr(t)) != trivial_aut) out.fail("tree " + write_graph6(t));
      asym += trivial_aut;
      ++trees;
    }
  }
  out.note = std::to_string(trees) + " trees, " + std::to_string(asym) + " asymmetric";
  return out;
}

Outcome psi_fidelity() {
  Outcome out;
  std::size_t trees = 0;
  for (int n = 1; n <= 9; ++n) {
    std::set<std::string> images;
    auto ts = oracle::trees(n);
    for (const Graph& t : ts) {
      RootedTree r = psi(t);
      if (!is_tree(r.tree)) out.fail("psi output not a tree " + write_graph6(t));
      std::vector<int> colors(r.tree.n(), 0);
      colors[r.root] = 1;
      if (oracle::aut_count(r.tree, colors) != oracle::aut_count(t)) {
        out.fail("rooted order " + write_graph6(t));
      }
      if (rooted_tree_aut_order(r) != oracle::aut_count(t)) out.fail("library rooted order " + write_graph6(t));
      images.insert(std::to_string(r.tree.n()) + oracle::rooted_key(r.tree, r.root, -1));
      ++trees;
    }
    if (images.size() != ts.size()) out.fail("psi not injective at n=" + std::to_string(n));
  }
  out.note = std::to_string(trees) + " trees";
  return out;
}

Outcome census() {
  Outcome out;
  const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const Graph bull(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
  const Graph pan(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  const Graph p3(3, {{0, 1}, {1, 2}});
  const Graph k2(2, {{0, 1}});
  std::map<std::string, std::string> expected = {
      {oracle::canonical(c5), oracle::canonical(c5)},
      {oracle::canonical(bull), oracle::canonical(k3)},
      {oracle::canonical(pan), oracle::canonical(p3)},
      {oracle::canonical(complement_oracle(pan)), oracle::canonical(k2)},
  };
  auto gs = oracle::graphs(5);
  if (gs.size() != 34) out.fail("expected 34 graphs");
  std::map<std::string, std::string> negatives;
  for (const Graph& g : gs) {
    if (recognize_tree_cograph(g)) continue;
    auto d = oracle::distances(g);
    std::vector<int> ecc(5, 0);
    for (int u = 0; u < 5; ++u) {
      for (int v = 0; v < 5; ++v) ecc[u] = std::max(ecc[u], d[u][v]);
    }
    int best = *std::min_element(ecc.begin(), ecc.end());
    VertexSet oracle_center;
    for (int u = 0; u < 5; ++u) {
      if (ecc[u] == best) oracle_center.push_back(u);
    }
    if (center(g) != oracle_center) out.fail("center mismatch " + write_graph6(g));
    negatives[oracle::canonical(g)] = oracle::canonical(induced_subgraph(g, oracle_center));
  }
  if (negatives != expected) out.fail("negative set or centers differ");
  out.note = std::to_string(negatives.size()) + " negatives of " + std::to_string(gs.size());
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

Outcome lovasz() {
  Outcome out;
  auto t0 = Clock::now();
  std::vector<Graph> small;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : oracle::graphs(n)) small.push_back(g);
  }
  std::size_t pairs = 0;
  auto check = [&](const Graph& g, const Graph& h) {
    try {
      if (lovasz_sum(g, h) != oracle::count_maps(g, h, 0)) {
        out.fail("sum differs " + write_graph6(g) + " " + write_graph6(h));
      }
    } catch (const InternalError& e) {
      out.fail(std::string("non-integral term: ") + e.what());
    }
    ++pairs;
  };
  for (const Graph& g : small) {
    for (const Graph& h : small) check(g, h);
  }
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> hsize(1, 6);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(5, rng);
    Graph h = random_graph(hsize(rng), rng);
    check(g, h);
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 60) out.fail("runtime " + std::to_string(secs) + " s");
  out.note = std::to_string(pairs) + " pairs";
  return out;
}

Outcome hom_identities() {
  Outcome out;
  const Graph k1(1);
  const Graph k2(2, {{0, 1}});
  std::size_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::graphs(n)) {
      if (hom_count(k1, g) != static_cast<std::uint64_t>(n)) out.fail("hom(K1) " + write_graph6(g));
      std::uint64_t edges = g.edges().size();
      if (hom_count(k2, g) != 2 * edges) out.fail("hom(K2) " + write_graph6(g));
      ++checked;
    }
  }
  out.note = std::to_string(checked) + " graphs";
  return out;
}

Outcome f_isomorphism() {
  Outcome out;
  std::vector<Graph> forests;
  std::vector<Graph> family;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& f : oracle::forests(n)) forests.push_back(f);
    for (const Graph& t : oracle::trees(n)) family.push_back(t);
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < forests.size(); ++i) {
    for (std::size_t j = i + 1; j < forests.size(); ++j) {
      const Graph& a = forests[i];
      const Graph& b = forests[j];
      FIsoResult r = f_isomorphic(a, b, family);
      if (r.equivalent || !r.witness) {
        out.fail("not distinguished " + write_graph6(a) + " " + write_graph6(b));
      } else if (oracle::count_maps(*r.witness, a, 0) == oracle::count_maps(*r.witness, b, 0)) {
        out.fail("bad witness " + write_graph6(a) + " " + write_graph6(b));
      }
      ++pairs;
    }
  }
  out.note = std::to_string(pairs) + " pairs, " + std::to_string(family.size()) + " trees";
  return out;
}

// Direct numeric checks of the magic relations, independent of the library.
bool magic_oracle(const MagicUnitary& u, double tol) {
  const int n = u.n();
  const int d = u.d();
  ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (int i = 0; i < n; ++i) {
    ComplexMatrix row = ComplexMatrix::Zero(d, d);
    ComplexMatrix col = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix& p = u.at(i, j);
      if ((p - p.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
      if ((p * p - p).cwiseAbs().maxCoeff() > tol) return false;
      row += p;
      col += u.at(j, i);
    }
    if ((row - id).cwiseAbs().maxCoeff() > tol || (col - id).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

Eigen::MatrixXd adj(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

Outcome magic_numerics() {
  Outcome out;
  MagicUnitary w = k4_witness();
  if (!is_magic_unitary(w) || !magic_oracle(w, kTol)) out.fail("K4 witness not magic");
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (!adapted_to(w, k4)) out.fail("K4 witness not adapted");
  double comm = 0;
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      ComplexMatrix p = w.at(a / 4, a % 4);
      ComplexMatrix q = w.at(b / 4, b % 4);
      Eigen::JacobiSVD<ComplexMatrix> svd(p * q - q * p);
      comm = std::max(comm, svd.singularValues()(0));
    }
  }
  if (std::abs(comm - 0.5) > kTol) out.fail("commutator norm " + std::to_string(comm));
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int t = 0; t < 200; ++t) {
    const int n = size(rng);
    MagicUnitary u = random_magic_unitary(n, dim(rng), rng);
    MagicUnitary v = random_magic_unitary(n, 1 + t % 2, rng);
    if (!magic_oracle(u, kTol)) out.fail("random unitary not magic");
    if (!magic_oracle(convolve(u, v), kTol)) out.fail("convolution not magic");
    Permutation p = positivity_permutation(u);
    for (int j = 0; j < n; ++j) {
      if (u.at(p[j], j).norm() <= kTol) out.fail("positivity permutation hits zero");
    }
    Eigen::MatrixXd s(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) s(i, j) = u.at(i, j).trace().real() / u.d();
    }
    if ((entrywise_trace(u) - s).cwiseAbs().maxCoeff() > kTol) out.fail("trace matrix differs");
    if ((s.rowwise().sum().array() - 1).abs().maxCoeff() > kTol ||
        (s.colwise().sum().array() - 1).abs().maxCoeff() > kTol || s.minCoeff() < -kTol) {
      out.fail("trace matrix not doubly stochastic");
    }
  }
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 5;
    Graph g = random_graph(n, rng);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Graph h = relabel(g, sigma);
    MagicUnitary q = convolve(permutation_pattern(Permutation(sigma)), random_adapted(g, 1 + t % 3, rng));
    Eigen::MatrixXd s = entrywise_trace(q);
    if ((s * adj(g) - adj(h) * s).cwiseAbs().maxCoeff() > kTol) out.fail("trace does not intertwine");
  }
  out.note = "commutator norm " + std::to_string(comm);
  return out;
}

// Stable colors of g + h by plain iterated refinement with string signatures.
std::pair<std::map<std::string, int>, std::map<std::string, int>> stable_histograms(
    const Graph& g, const Graph& h) {
  Graph u = disjoint_sum(g, h);
  std::vector<std::string> color(u.n(), "");
  for (int round = 0; round <= u.n(); ++round) {
    std::vector<std::string> next(u.n());
    for (int v = 0; v < u.n(); ++v) {
      std::vector<std::string> nb;
      for (int w = 0; w < u.n(); ++w) {
        if (u.adjacent(v, w)) nb.push_back(color[w]);
      }
      std::sort(nb.begin(), nb.end());
      std::string s = color[v] + "{";
      for (auto& x : nb) s += x + ",";
      next[v] = s + "}";
    }
    std::map<std::string, std::string> compact;
    for (auto& s : next) compact.emplace(s, "");
    int id = 0;
    for (auto& [k, val] : compact) val = std::to_string(id++);
    for (int v = 0; v < u.n(); ++v) color[v] = compact[next[v]];
  }
  std::map<std::string, int> hg;
  std::map<std::string, int> hh;
  for (int v = 0; v < u.n(); ++v) (v < g.n() ? hg : hh)[color[v]]++;
  return {hg, hh};
}

Outcome fractional() {
  Outcome out;
  const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const Graph two_k3(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  if (!fractionally_isomorphic(c6, two_k3)) out.fail("C6 vs 2K3 should be fractionally isomorphic");
  if (iso_test(c6, two_k3)) out.fail("C6 vs 2K3 should not be isomorphic");
  std::size_t pairs = 0;
  for (int n = 1; n <= 8; ++n) {
    auto ts = oracle::trees(n);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = 0; j < ts.size(); ++j) {
        auto [a, b] = stable_histograms(ts[i], ts[j]);
        const bool frac = fractionally_isomorphic(ts[i], ts[j]);
        if (frac != (a == b)) out.fail("histogram disagreement");
        if (frac && !iso_test(ts[i], ts[j])) out.fail("fractional but not isomorphic");
        if (iso_test(ts[i], ts[j]) != (i == j)) out.fail("iso_test wrong on trees");
        ++pairs;
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    auto gs = oracle::graphs(n);
    for (const Graph& g : gs) {
      for (const Graph& h : gs) {
        auto [a, b] = stable_histograms(g, h);
        if (fractionally_isomorphic(g, h) != (a == b)) out.fail("histogram disagreement");
      }
    }
  }
  out.note = std::to_string(pairs) + " tree pairs";
  return out;
}

Graph random_connected(int n, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, rng);
    auto c = oracle::component_of(g);
    if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) return g;
  }
}

Outcome component_projections() {
  Outcome out;
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> piece(1, 3);
  std::uniform_int_distribution<int> copies(2, 3);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int t = 0; t < 50; ++t) {
    const int k = piece(rng);
    const int m = copies(rng);
    std::vector<Graph> parts(m, random_connected(k, rng));
    int used = k * m;
    if (used + 2 <= 8) {
      parts.push_back(random_connected(2, rng));
      used += 2;
    }
    if (used + 1 <= 8) parts.push_back(Graph(1));
    Graph g = disjoint_sum(parts);
    MagicUnitary a = random_adapted(g, dim(rng), rng);
    std::vector<int> sigma(g.n());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Graph h = relabel(g, sigma);
    MagicUnitary q = convolve(permutation_pattern(Permutation(sigma)), a);
    if (!magic_oracle(q, kTol)) out.fail("not magic");
    // Oracle quantum iso check: (A_h (x) I) Q = Q (A_g (x) I) blockwise.
    const int n = g.n();
    const int d = q.d();
    double err = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        ComplexMatrix lhs = ComplexMatrix::Zero(d, d);
        ComplexMatrix rhs = ComplexMatrix::Zero(d, d);
        for (int x = 0; x < n; ++x) {
          if (h.adjacent(i, x)) lhs += q.at(x, j);
          if (g.adjacent(x, j)) rhs += q.at(i, x);
        }
        err = std::max(err, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
    if (err > kTol) out.fail("not a quantum iso");
    if (!check_component_projections(q, g, h).ok) out.fail("component projections trial " + std::to_string(t));
    if (!check_eccentricity_blocks(q, g, h).ok) out.fail("eccentricity blocks trial " + std::to_string(t));
    if (!check_eccentricity_blocks(q, complement(g), complement(h)).ok) {
      out.fail("complement eccentricity blocks trial " + std::to_string(t));
    }
  }
  out.note = "50 quantum isos";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cograph classification", cograph_classification},
      {"schmidt alternative consistency", schmidt_alternative},
      {"abelianization", abelianization},
      {"quantum asymmetry of trees", quantum_asymmetry},
      {"psi fidelity", psi_fidelity},
      {"five-vertex census", census},
      {"lovasz formula", lovasz},
      {"hom identities", hom_identities},
      {"forest f-isomorphism", f_isomorphism},
      {"magic unitary numerics", magic_numerics},
      {"fractional isomorphism", fractional},
      {"component projections and eccentricity blocks", component_projections},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%s %2zu %s (%s, %.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.note.c_str(), secs);
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
