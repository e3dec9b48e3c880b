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

#ifndef QGRAPH_MAGIC_HPP_
#define QGRAPH_MAGIC_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qgraph/automorphisms.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

using ComplexMatrix = Eigen::MatrixXcd;

constexpr double kDefaultTol = 1e-9;

// n x n grid of d x d complex matrices, row-major.
class MagicUnitary {
 public:
  MagicUnitary(int n, int d, double tol = kDefaultTol);

  int n() const { return n_; }
  int d() const { return d_; }
  double tol() const { return tol_; }
  void set_tol(double tol) { tol_ = tol; }

  ComplexMatrix& at(int i, int j) { return entries_[i * n_ + j]; }
  const ComplexMatrix& at(int i, int j) const { return entries_[i * n_ + j]; }

 private:
  int n_;
  int d_;
  double tol_;
  std::vector<ComplexMatrix> entries_;
};

struct MagicReport {
  bool ok = true;
  // Row/column orthogonality failed although projections and sums passed.
  bool orthogonality_only = false;
  std::vector<std::string> violations;
};

MagicReport check_magic_unitary(const MagicUnitary& u);
bool is_magic_unitary(const MagicUnitary& u);

// U A = A U with A acting by scalars.
bool adapted_to(const MagicUnitary& u, const Graph& g);
// U A_g = A_h U, rows indexed by h and columns by g.
bool is_quantum_iso(const MagicUnitary& u, const Graph& g, const Graph& h);

MagicUnitary identity_pattern(int n, int d = 1);
// Entry (i, j) is the identity when i = p(j).
MagicUnitary permutation_pattern(const Permutation& p, int d = 1);

// r_ij = sum_k p_ik (x) q_kj. If q is a quantum isomorphism g -> h and p one
// h -> l, the result is one g -> l.
MagicUnitary convolve(const MagicUnitary& p, const MagicUnitary& q);
// [[0, U], [U*, 0]].
MagicUnitary block_qi_embed(const MagicUnitary& u);

// Indices x with u_xx different from the identity.
VertexSet magic_support(const MagicUnitary& u);

// Regular representation of the cyclic group generated by p: a commutative
// magic unitary of dimension ord(p) whose support is supp(p).
MagicUnitary cyclic_lift(const Permutation& p);

// Combines two adapted magic unitaries with disjoint supports. Entries of u
// act on the first tensor factor, entries of v on the second after a fixed
// generic change of basis, so the two parts no longer commute.
MagicUnitary schmidt_combine(const MagicUnitary& u, const MagicUnitary& v,
                             const Graph& g, std::uint64_t seed = 0);

MagicUnitary k4_witness();

double spectral_norm(const ComplexMatrix& m);
// Largest ||u_ab u_cd - u_cd u_ab|| over all entry pairs.
double max_commutator_norm(const MagicUnitary& u);

// Perfect matching on the pattern of nonzero entries.
Permutation positivity_permutation(const MagicUnitary& u);

// Normalized trace of each entry.
Eigen::MatrixXd entrywise_trace(const MagicUnitary& u);

struct ComponentProjectionReport {
  bool ok = true;
  int k = 0;
  // p_ij for components H_i of h and G_j of g.
  std::vector<std::vector<ComplexMatrix>> p;
  std::vector<std::string> violations;
};

ComponentProjectionReport check_component_projections(const MagicUnitary& u,
                                                      const Graph& g,
                                                      const Graph& h);

struct EccentricityReport {
  bool ok = true;
  std::vector<std::string> violations;
};

EccentricityReport check_eccentricity_blocks(const MagicUnitary& u,
                                             const Graph& g, const Graph& h);

// Sub-grid on the given rows and columns.
MagicUnitary restrict(const MagicUnitary& u, const VertexSet& rows,
                      const VertexSet& cols);

// Random unitary from the QR factorization of a complex Gaussian matrix.
ComplexMatrix random_unitary(int d, std::mt19937_64& rng);

// Random valid magic unitary: commutative blocks on a random partition,
// conjugated by random unitaries and shuffled by outer permutations.
MagicUnitary random_magic_unitary(int n, int d, std::mt19937_64& rng);

// Quantum automorphism sum_k E_k (x) P_{s_k} for automorphisms s_k of g and
// orthogonal projections E_k from a random unitary.
MagicUnitary random_adapted(const Graph& g, int d, std::mt19937_64& rng);

// Entry (x, y) replaced by W u_xy W*.
MagicUnitary conjugate(const MagicUnitary& u, const ComplexMatrix& w);

nlohmann::ordered_json to_json(const MagicUnitary& u);

}  // namespace qgraph

#endif  // QGRAPH_MAGIC_HPP_
