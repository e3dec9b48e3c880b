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

#include "qgraph/magic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

using Complex = std::complex<double>;

ComplexMatrix eye(int d) { return ComplexMatrix::Identity(d, d); }

double frob(const ComplexMatrix& m) { return m.norm(); }

std::string at_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_same_n(const MagicUnitary& u, int n, const char* what) {
  if (u.n() != n) throw InvalidArgument(std::string("size mismatch: ") + what);
}

}  // namespace

MagicUnitary::MagicUnitary(int n, int d, double tol)
    : n_(n), d_(d), tol_(tol),
      entries_(static_cast<std::size_t>(n) * n, ComplexMatrix::Zero(d, d)) {
  if (n < 0 || d < 1) throw InvalidArgument("bad magic unitary dimensions");
}

MagicReport check_magic_unitary(const MagicUnitary& u) {
  MagicReport r;
  const int n = u.n();
  const int d = u.d();
  const double tol = u.tol();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix& e = u.at(i, j);
      if (e.rows() != d || e.cols() != d) {
        throw InvalidArgument("entry " + at_str(i, j) + " has wrong dimension");
      }
      if (frob(e - e.adjoint()) > tol) {
        r.violations.push_back("entry " + at_str(i, j) + " is not self-adjoint");
      }
      if (frob(e * e - e) > tol) {
        r.violations.push_back("entry " + at_str(i, j) + " is not idempotent");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    ComplexMatrix row = ComplexMatrix::Zero(d, d);
    ComplexMatrix col = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < n; ++j) {
      row += u.at(i, j);
      col += u.at(j, i);
    }
    if (frob(row - eye(d)) > tol) {
      r.violations.push_back("row " + std::to_string(i) + " does not sum to 1");
    }
    if (frob(col - eye(d)) > tol) {
      r.violations.push_back("column " + std::to_string(i) + " does not sum to 1");
    }
  }
  const bool basic_ok = r.violations.empty();
  bool orth_ok = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (frob(u.at(i, j) * u.at(i, k)) > 10 * tol) {
          orth_ok = false;
          r.violations.push_back("row " + std::to_string(i) + " entries " +
                                 std::to_string(j) + "," + std::to_string(k) +
                                 " are not orthogonal");
        }
        if (frob(u.at(j, i) * u.at(k, i)) > 10 * tol) {
          orth_ok = false;
          r.violations.push_back("column " + std::to_string(i) + " entries " +
                                 std::to_string(j) + "," + std::to_string(k) +
                                 " are not orthogonal");
        }
      }
    }
  }
  r.orthogonality_only = basic_ok && !orth_ok;
  r.ok = r.violations.empty();
  return r;
}

bool is_magic_unitary(const MagicUnitary& u) { return check_magic_unitary(u).ok; }

bool is_quantum_iso(const MagicUnitary& u, const Graph& g, const Graph& h) {
  check_same_n(u, g.n(), "graph g");
  check_same_n(u, h.n(), "graph h");
  const int n = u.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (U A_g)_ij = sum_{k ~ j} u_ik and (A_h U)_ij = sum_{k ~ i} u_kj.
      ComplexMatrix diff = ComplexMatrix::Zero(u.d(), u.d());
      for (int k = 0; k < n; ++k) {
        if (g.adjacent(k, j)) diff += u.at(i, k);
        if (h.adjacent(i, k)) diff -= u.at(k, j);
      }
      if (diff.cwiseAbs().maxCoeff() > u.tol()) return false;
    }
  }
  return true;
}

bool adapted_to(const MagicUnitary& u, const Graph& g) {
  return is_quantum_iso(u, g, g);
}

MagicUnitary identity_pattern(int n, int d) {
  return permutation_pattern(Permutation::identity(n), d);
}

MagicUnitary permutation_pattern(const Permutation& p, int d) {
  MagicUnitary u(p.n(), d);
  for (int j = 0; j < p.n(); ++j) u.at(p[j], j) = eye(d);
  return u;
}

MagicUnitary convolve(const MagicUnitary& p, const MagicUnitary& q) {
  check_same_n(q, p.n(), "convolution");
  const int n = p.n();
  MagicUnitary r(n, p.d() * q.d(), std::max(p.tol(), q.tol()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        r.at(i, j) += Eigen::kroneckerProduct(p.at(i, k), q.at(k, j)).eval();
      }
    }
  }
  return r;
}

MagicUnitary block_qi_embed(const MagicUnitary& u) {
  const int n = u.n();
  MagicUnitary b(2 * n, u.d(), u.tol());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.at(i, n + j) = u.at(i, j);
      b.at(n + i, j) = u.at(j, i).adjoint();
    }
  }
  return b;
}

VertexSet magic_support(const MagicUnitary& u) {
  VertexSet s;
  for (int x = 0; x < u.n(); ++x) {
    if (frob(u.at(x, x) - eye(u.d())) > u.tol()) s.push_back(x);
  }
  return s;
}

MagicUnitary cyclic_lift(const Permutation& p) {
  // Powers p^0 .. p^{m-1}, m the order of p.
  std::vector<Permutation> powers{Permutation::identity(p.n())};
  while (true) {
    Permutation next = compose(p, powers.back());
    if (next.is_identity()) break;
    powers.push_back(next);
  }
  const int m = static_cast<int>(powers.size());
  MagicUnitary u(p.n(), m);
  for (int k = 0; k < m; ++k) {
    for (int y = 0; y < p.n(); ++y) u.at(powers[k][y], y)(k, k) = 1.0;
  }
  return u;
}

ComplexMatrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  return qr.householderQ() * eye(d);
}

MagicUnitary conjugate(const MagicUnitary& u, const ComplexMatrix& w) {
  MagicUnitary r(u.n(), u.d(), u.tol());
  for (int i = 0; i < u.n(); ++i) {
    for (int j = 0; j < u.n(); ++j) r.at(i, j) = w * u.at(i, j) * w.adjoint();
  }
  return r;
}

MagicUnitary schmidt_combine(const MagicUnitary& u, const MagicUnitary& v,
                             const Graph& g, std::uint64_t seed) {
  check_same_n(u, g.n(), "u");
  check_same_n(v, g.n(), "v");
  if (!adapted_to(u, g) || !adapted_to(v, g)) {
    throw InvalidArgument("schmidt_combine needs magic unitaries adapted to g");
  }
  VertexSet su = magic_support(u);
  VertexSet sv = magic_support(v);
  if (su.empty() || sv.empty()) {
    throw InvalidArgument("schmidt_combine needs two nontrivial magic unitaries");
  }
  std::vector<int> side(g.n(), 0);
  for (int x : su) side[x] = 1;
  for (int x : sv) {
    if (side[x] != 0) throw InvalidArgument("supports overlap");
    side[x] = 2;
  }
  const int du = u.d();
  const int dv = v.d();
  std::mt19937_64 rng(seed);
  const ComplexMatrix omega = random_unitary(du * dv, rng);
  MagicUnitary w(g.n(), du * dv, std::max(u.tol(), v.tol()));
  for (int x = 0; x < g.n(); ++x) {
    for (int y = 0; y < g.n(); ++y) {
      if (side[x] == 1 && side[y] == 1) {
        w.at(x, y) = Eigen::kroneckerProduct(u.at(x, y), eye(dv)).eval();
      } else if (side[x] == 2 && side[y] == 2) {
        ComplexMatrix lifted = Eigen::kroneckerProduct(eye(du), v.at(x, y)).eval();
        w.at(x, y) = omega * lifted * omega.adjoint();
      } else if (x == y) {
        w.at(x, y) = eye(du * dv);
      }
    }
  }
  return w;
}

MagicUnitary k4_witness() {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  ComplexMatrix q = ComplexMatrix::Constant(2, 2, Complex(0.5, 0.0));
  const ComplexMatrix one = eye(2);
  MagicUnitary u(4, 2);
  u.at(0, 0) = p;
  u.at(0, 1) = one - p;
  u.at(1, 0) = one - p;
  u.at(1, 1) = p;
  u.at(2, 2) = q;
  u.at(2, 3) = one - q;
  u.at(3, 2) = one - q;
  u.at(3, 3) = q;
  return u;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double max_commutator_norm(const MagicUnitary& u) {
  const int n = u.n();
  double best = 0.0;
  for (int a = 0; a < n * n; ++a) {
    for (int b = a + 1; b < n * n; ++b) {
      const ComplexMatrix& x = u.at(a / n, a % n);
      const ComplexMatrix& y = u.at(b / n, b % n);
      ComplexMatrix c = x * y - y * x;
      // Skip the SVD when the commutator is visibly zero.
      if (c.cwiseAbs().maxCoeff() > 1e-15) best = std::max(best, spectral_norm(c));
    }
  }
  return best;
}

Permutation positivity_permutation(const MagicUnitary& u) {
  const int n = u.n();
  // Bipartite graph column j -> rows i with u_ij nonzero; Kuhn's algorithm.
  std::vector<std::vector<int>> rows_of(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (frob(u.at(i, j)) > u.tol()) rows_of[j].push_back(i);
    }
  }
  std::vector<int> col_of_row(n, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int j) {
    for (int i : rows_of[j]) {
      if (seen[i]) continue;
      seen[i] = 1;
      if (col_of_row[i] < 0 || augment(col_of_row[i])) {
        col_of_row[i] = j;
        return true;
      }
    }
    return false;
  };
  std::vector<char> matched(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i : rows_of[j]) {
      if (col_of_row[i] < 0) {
        col_of_row[i] = j;
        matched[j] = 1;
        break;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (matched[j]) continue;
    seen.assign(n, 0);
    if (!augment(j)) {
      throw InternalError("no perfect matching on the support; tolerance too large?");
    }
  }
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[col_of_row[i]] = i;
  return Permutation(std::move(image));
}

Eigen::MatrixXd entrywise_trace(const MagicUnitary& u) {
  Eigen::MatrixXd t(u.n(), u.n());
  for (int i = 0; i < u.n(); ++i) {
    for (int j = 0; j < u.n(); ++j) t(i, j) = u.at(i, j).trace().real() / u.d();
  }
  return t;
}

MagicUnitary restrict(const MagicUnitary& u, const VertexSet& rows,
                      const VertexSet& cols) {
  if (rows.size() != cols.size()) throw InvalidArgument("restriction must be square");
  const int k = static_cast<int>(rows.size());
  MagicUnitary r(k, u.d(), u.tol());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) r.at(i, j) = u.at(rows[i], cols[j]);
  }
  return r;
}

ComponentProjectionReport check_component_projections(const MagicUnitary& u,
                                                      const Graph& g,
                                                      const Graph& h) {
  if (!is_quantum_iso(u, g, h)) throw InvalidArgument("not a quantum isomorphism");
  ComponentProjectionReport r;
  auto cg = connected_components(g);
  auto ch = connected_components(h);
  if (cg.size() != ch.size()) {
    r.ok = false;
    r.violations.push_back("component counts differ");
    return r;
  }
  const int k = static_cast<int>(cg.size());
  const int d = u.d();
  const double tol = u.tol();
  r.k = k;
  r.p.assign(k, std::vector<ComplexMatrix>(k, ComplexMatrix::Zero(d, d)));
  MagicUnitary grid(k, d, tol);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const std::string tag = at_str(i, j);
      // p_ij from column sums over H_i, for each a in G_j.
      ComplexMatrix pij;
      for (int a : cg[j].vertices) {
        ComplexMatrix s = ComplexMatrix::Zero(d, d);
        for (int y : ch[i].vertices) s += u.at(y, a);
        if (pij.size() == 0) {
          pij = s;
        } else if (frob(s - pij) > tol) {
          r.violations.push_back("p" + tag + " depends on the column");
        }
      }
      // q_ji from row sums over G_j, for each x in H_i.
      ComplexMatrix qji;
      for (int x : ch[i].vertices) {
        ComplexMatrix s = ComplexMatrix::Zero(d, d);
        for (int b : cg[j].vertices) s += u.at(x, b);
        if (qji.size() == 0) {
          qji = s;
        } else if (frob(s - qji) > tol) {
          r.violations.push_back("q" + tag + " depends on the row");
        }
      }
      if (frob(pij - qji) > tol) r.violations.push_back("p" + tag + " differs from q");
      r.p[i][j] = pij;
      grid.at(i, j) = pij;
    }
  }
  auto m = check_magic_unitary(grid);
  for (auto& v : m.violations) r.violations.push_back("component grid: " + v);
  r.ok = r.violations.empty();
  return r;
}

EccentricityReport check_eccentricity_blocks(const MagicUnitary& u,
                                             const Graph& g, const Graph& h) {
  if (!is_quantum_iso(u, g, h)) throw InvalidArgument("not a quantum isomorphism");
  EccentricityReport r;
  const int n = u.n();
  if (n == 0) return r;
  auto eg = eccentricities(g);
  auto eh = eccentricities(h);
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a) {
      if (frob(u.at(x, a)) <= u.tol()) continue;
      if (eh[x] != eg[a]) {
        r.violations.push_back("nonzero entry " + at_str(x, a) +
                               " between different eccentricities");
      }
      if (h.degree(x) != g.degree(a)) {
        r.violations.push_back("nonzero entry " + at_str(x, a) +
                               " between different degrees");
      }
    }
  }
  VertexSet zg = center(g);
  VertexSet zh = center(h);
  if (zg.size() != zh.size()) {
    r.violations.push_back("centers have different sizes");
  } else {
    MagicUnitary block = restrict(u, zh, zg);
    auto m = check_magic_unitary(block);
    for (auto& v : m.violations) r.violations.push_back("center block: " + v);
    if (m.ok && !is_quantum_iso(block, induced_subgraph(g, zg), induced_subgraph(h, zh))) {
      r.violations.push_back("center block is not a quantum isomorphism");
    }
  }
  r.ok = r.violations.empty();
  return r;
}

MagicUnitary random_magic_unitary(int n, int d, std::mt19937_64& rng) {
  if (n < 1 || d < 1) throw InvalidArgument("bad random magic unitary size");
  // Random partition of 0..n-1 into consecutive blocks.
  std::vector<int> starts{0};
  std::bernoulli_distribution cut(0.4);
  for (int i = 1; i < n; ++i) {
    if (cut(rng)) starts.push_back(i);
  }
  starts.push_back(n);
  MagicUnitary u(n, d);
  for (std::size_t b = 0; b + 1 < starts.size(); ++b) {
    const int lo = starts[b];
    const int m = starts[b + 1] - lo;
    const ComplexMatrix w = random_unitary(d, rng);
    for (int k = 0; k < d; ++k) {
      std::vector<int> sigma(m);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      const ComplexMatrix ek = w.col(k) * w.col(k).adjoint();
      for (int j = 0; j < m; ++j) u.at(lo + sigma[j], lo + j) += ek;
    }
  }
  std::vector<int> pr(n);
  std::vector<int> pc(n);
  std::iota(pr.begin(), pr.end(), 0);
  std::iota(pc.begin(), pc.end(), 0);
  std::shuffle(pr.begin(), pr.end(), rng);
  std::shuffle(pc.begin(), pc.end(), rng);
  MagicUnitary out(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(pr[i], pc[j]) = u.at(i, j);
  }
  return out;
}

MagicUnitary random_adapted(const Graph& g, int d, std::mt19937_64& rng) {
  AutGroup aut = automorphisms(g);
  const ComplexMatrix w = random_unitary(d, rng);
  std::uniform_int_distribution<std::size_t> pick(0, aut.order() - 1);
  MagicUnitary u(g.n(), d);
  for (int k = 0; k < d; ++k) {
    const Permutation& s = aut.elements()[pick(rng)];
    const ComplexMatrix ek = w.col(k) * w.col(k).adjoint();
    for (int y = 0; y < g.n(); ++y) u.at(s[y], y) += ek;
  }
  return u;
}

nlohmann::ordered_json to_json(const MagicUnitary& u) {
  nlohmann::ordered_json j;
  j["n"] = u.n();
  j["d"] = u.d();
  j["tol"] = u.tol();
  auto grid = nlohmann::ordered_json::array();
  for (int a = 0; a < u.n(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (int b = 0; b < u.n(); ++b) {
      auto m = nlohmann::ordered_json::array();
      for (int r = 0; r < u.d(); ++r) {
        auto mr = nlohmann::ordered_json::array();
        for (int c = 0; c < u.d(); ++c) {
          const Complex z = u.at(a, b)(r, c);
          mr.push_back({z.real(), z.imag()});
        }
        m.push_back(std::move(mr));
      }
      row.push_back(std::move(m));
    }
    grid.push_back(std::move(row));
  }
  j["entries"] = std::move(grid);
  return j;
}

}  // namespace qgraph
