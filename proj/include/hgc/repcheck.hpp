#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hgc/hypergraph.hpp"
#include "hgc/star_algebra.hpp"

namespace hgc {

using Matrix = Eigen::MatrixXcd;

struct MatrixFamily {
  std::size_t dim = 0;
  std::map<VertexId, Matrix> vertices;
  std::map<EdgeId, Matrix> edges;
  double tol = 1e-9;
};

struct VerificationReport {
  double proj_idempotent = 0;
  double proj_selfadjoint = 0;
  double mutual_orthogonality = 0;
  double partial_isometry = 0;
  double hr1 = 0;
  // Smallest eigenvalue of the Hermitized differences; empty when no
  // inequality applies.
  std::optional<double> hr2a_min_eig;
  std::optional<double> hr2b_min_eig;
  bool pass = false;
};

inline double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

inline double min_eigenvalue(const Matrix& m) {
  if (m.size() == 0) return 0;
  const Matrix herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline void check_family_shape(const Hypergraph& h, const MatrixFamily& fam) {
  auto check = [&](const Matrix& m, const std::string& who) {
    if (static_cast<std::size_t>(m.rows()) != fam.dim || static_cast<std::size_t>(m.cols()) != fam.dim)
      fail(ErrorKind::DimensionMismatch, who + " is " + std::to_string(m.rows()) + "x" +
                                             std::to_string(m.cols()) + ", expected dimension " +
                                             std::to_string(fam.dim));
  };
  for (const auto& v : h.vertices()) {
    auto it = fam.vertices.find(v);
    if (it == fam.vertices.end()) fail(ErrorKind::HypergraphMismatch, "family has no matrix for vertex '" + v.str() + "'");
    check(it->second, "P(" + v.str() + ")");
  }
  for (const auto& [e, ends] : h.edges()) {
    auto it = fam.edges.find(e);
    if (it == fam.edges.end()) fail(ErrorKind::HypergraphMismatch, "family has no matrix for edge '" + e.str() + "'");
    check(it->second, "S(" + e.str() + ")");
  }
  for (const auto& [v, m] : fam.vertices)
    if (!h.has_vertex(v)) fail(ErrorKind::HypergraphMismatch, "family names unknown vertex '" + v.str() + "'");
  for (const auto& [e, m] : fam.edges)
    if (!h.has_edge(e)) fail(ErrorKind::HypergraphMismatch, "family names unknown edge '" + e.str() + "'");
}

/// Residuals of every relation in operator norm; order relations via the
/// spectrum of the difference.
inline VerificationReport verify_ck_family(const Hypergraph& h, const MatrixFamily& fam) {
  validate(h);
  check_family_shape(h, fam);
  const auto d = static_cast<Eigen::Index>(fam.dim);
  VerificationReport rep;
  auto P = [&](const VertexId& v) -> const Matrix& { return fam.vertices.at(v); };
  auto S = [&](const EdgeId& e) -> const Matrix& { return fam.edges.at(e); };
  auto psum = [&](const VertexSet& vs) {
    Matrix m = Matrix::Zero(d, d);
    for (const auto& v : vs) m += P(v);
    return m;
  };

  for (const auto& v : h.vertices()) {
    rep.proj_idempotent = std::max(rep.proj_idempotent, operator_norm(P(v) * P(v) - P(v)));
    rep.proj_selfadjoint = std::max(rep.proj_selfadjoint, operator_norm(P(v).adjoint() - P(v)));
    for (const auto& w : h.vertices())
      if (v < w) rep.mutual_orthogonality = std::max(rep.mutual_orthogonality, operator_norm(P(v) * P(w)));
  }
  for (const auto& [e, ee] : h.edges()) {
    rep.partial_isometry = std::max(rep.partial_isometry, operator_norm(S(e) * S(e).adjoint() * S(e) - S(e)));
    for (const auto& [f, fe] : h.edges()) {
      Matrix target = e == f ? psum(ee.range) : Matrix::Zero(d, d);
      rep.hr1 = std::max(rep.hr1, operator_norm(S(e).adjoint() * S(f) - target));
    }
    const double a = min_eigenvalue(psum(ee.source) - S(e) * S(e).adjoint());
    rep.hr2a_min_eig = rep.hr2a_min_eig ? std::min(*rep.hr2a_min_eig, a) : a;
  }
  for (const auto& v : h.vertices()) {
    Matrix sum = Matrix::Zero(d, d);
    bool emits = false;
    for (const auto& [e, ee] : h.edges())
      if (ee.source.contains(v)) {
        sum += S(e) * S(e).adjoint();
        emits = true;
      }
    if (!emits) continue;
    const double b = min_eigenvalue(sum - P(v));
    rep.hr2b_min_eig = rep.hr2b_min_eig ? std::min(*rep.hr2b_min_eig, b) : b;
  }

  const double t = fam.tol;
  rep.pass = rep.proj_idempotent <= t && rep.proj_selfadjoint <= t && rep.mutual_orthogonality <= t &&
             rep.partial_isometry <= t && rep.hr1 <= t && (!rep.hr2a_min_eig || *rep.hr2a_min_eig >= -t) &&
             (!rep.hr2b_min_eig || *rep.hr2b_min_eig >= -t);
  return rep;
}

/// Path-space model of a finite acyclic graph: one basis vector per path
/// ending at a sink; s_e prepends e.
inline MatrixFamily standard_graph_representation(const Hypergraph& h) {
  validate(h);
  if (classify_kind(h) != HypergraphKind::Graph && h.edge_count() > 0)
    fail(ErrorKind::NotAGraph, "standard representation needs singleton sources and ranges");

  auto src = [&](const EdgeId& e) { return *h.source(e).begin(); };
  auto rng = [&](const EdgeId& e) { return *h.range(e).begin(); };

  // Kahn's algorithm, only to detect cycles.
  std::map<VertexId, int> indeg;
  for (const auto& v : h.vertices()) indeg[v] = 0;
  for (const auto& [e, ends] : h.edges()) ++indeg[rng(e)];
  std::vector<VertexId> queue;
  for (const auto& [v, k] : indeg)
    if (k == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& [e, ends] : h.edges())
      if (src(e) == v && --indeg[rng(e)] == 0) queue.push_back(rng(e));
  }
  if (seen != h.vertex_count()) fail(ErrorKind::HasCycle, "graph has a directed cycle");

  struct Path {
    VertexId start;
    std::vector<EdgeId> edges;
    auto operator<=>(const Path&) const = default;
  };
  std::vector<Path> basis;
  std::vector<Path> layer;
  for (const auto& v : sinks_sources(h).sinks) layer.push_back({v, {}});
  while (!layer.empty()) {
    basis.insert(basis.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto& p : layer)
      for (const auto& [e, ends] : h.edges())
        if (rng(e) == p.start) {
          Path q{src(e), {e}};
          q.edges.insert(q.edges.end(), p.edges.begin(), p.edges.end());
          next.push_back(std::move(q));
        }
    layer = std::move(next);
  }
  std::sort(basis.begin(), basis.end());
  std::map<Path, Eigen::Index> pos;
  for (const auto& p : basis) pos.emplace(p, static_cast<Eigen::Index>(pos.size()));

  MatrixFamily fam;
  fam.dim = basis.size();
  fam.tol = 1e-12;
  const auto d = static_cast<Eigen::Index>(fam.dim);
  for (const auto& v : h.vertices()) fam.vertices[v] = Matrix::Zero(d, d);
  for (const auto& [e, ends] : h.edges()) fam.edges[e] = Matrix::Zero(d, d);
  for (const auto& p : basis) {
    const auto i = pos.at(p);
    fam.vertices[p.start](i, i) = 1;
    for (const auto& [e, ends] : h.edges())
      if (rng(e) == p.start) {
        Path q{src(e), {e}};
        q.edges.insert(q.edges.end(), p.edges.begin(), p.edges.end());
        fam.edges[e](pos.at(q), i) = 1;
      }
  }
  return fam;
}

/// The *-homomorphism determined by the family.
inline Matrix evaluate(const StarExpression& x, const MatrixFamily& fam) {
  const auto& a = *x.alphabet();
  check_family_shape(a.hypergraph(), fam);
  const auto d = static_cast<Eigen::Index>(fam.dim);
  std::vector<Matrix> pm, sm, tm;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) pm.push_back(fam.vertices.at(a.vertex(static_cast<int>(v))));
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    sm.push_back(fam.edges.at(a.edge(static_cast<int>(e))));
    tm.push_back(sm.back().adjoint());
  }
  Matrix out = Matrix::Zero(d, d);
  for (const auto& [w, c] : x.terms()) {
    Matrix m = Matrix::Identity(d, d);
    for (const auto& l : w) {
      const auto i = static_cast<std::size_t>(l.index);
      m = m * (l.kind == LetterKind::P ? pm[i] : l.kind == LetterKind::S ? sm[i] : tm[i]);
    }
    out += c.to_complex() * m;
  }
  return out;
}

inline double max_abs_entry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Deterministic generator of small random expressions: 1..8 letters per
/// word, 1..5 terms, coefficients from {±1, ±i, ±1/2}.
class ExpressionSampler {
 public:
  ExpressionSampler(AlphabetPtr alphabet, std::uint64_t seed) : a_(std::move(alphabet)), rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  Letter letter() {
    const std::size_t nv = a_->vertex_count(), ne = a_->edge_count();
    const std::size_t k = below(nv + 2 * ne);
    if (k < nv) return {LetterKind::P, static_cast<int>(k)};
    if (k < nv + ne) return {LetterKind::S, static_cast<int>(k - nv)};
    return {LetterKind::T, static_cast<int>(k - nv - ne)};
  }

  Word word(std::size_t max_len = 8) {
    Word w;
    const std::size_t len = 1 + below(max_len);
    for (std::size_t i = 0; i < len; ++i) w.push_back(letter());
    return w;
  }

  Scalar coefficient() {
    static const std::array<Scalar, 6> choices{Scalar(1),          Scalar(-1),
                                               Scalar(0, 1),       Scalar(0, -1),
                                               Scalar(Rational(1, 2)), Scalar(Rational(-1, 2))};
    return choices[below(choices.size())];
  }

  StarExpression expression(std::size_t max_terms = 5, std::size_t max_len = 8) {
    StarExpression x(a_);
    const std::size_t terms = 1 + below(max_terms);
    for (std::size_t i = 0; i < terms; ++i) x.add_term(word(max_len), coefficient());
    return x;
  }

 private:
  AlphabetPtr a_;
  std::mt19937_64 rng_;
};

/// Max entrywise gap between x and its normal form under the family.
inline double symbolic_numeric_consistency(const RelationSystem& rs, const MatrixFamily& fam,
                                           std::size_t trials, std::uint64_t seed) {
  if (!verify_ck_family(rs.hypergraph(), fam).pass)
    fail(ErrorKind::PreconditionFailed, "family does not satisfy the relations");
  if (rs.alphabet->vertex_count() + rs.alphabet->edge_count() == 0) return 0;
  ExpressionSampler sampler(rs.alphabet, seed);
  double worst = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = sampler.expression();
    worst = std::max(worst, max_abs_entry(evaluate(x, fam) - evaluate(normalize(x, rs), fam)));
  }
  return worst;
}

}  // namespace hgc
