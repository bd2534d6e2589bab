#include <gtest/gtest.h>

#include "support.hpp"

using namespace hgc;
using namespace hgc::literals;
using namespace hgc::testing;

namespace {

Matrix unit(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1;
  return m;
}

Hypergraph one_edge() {
  Hypergraph h(VertexSet{"v"_v, "w"_v}, {});
  h.add_edge("e"_e, {"v"_v}, {"w"_v});
  return h;
}

MatrixFamily one_edge_by_hand() {
  MatrixFamily fam;
  fam.dim = 2;
  fam.tol = 1e-12;
  fam.vertices["v"_v] = unit(2, 0, 0);
  fam.vertices["w"_v] = unit(2, 1, 1);
  fam.edges["e"_e] = unit(2, 0, 1);
  return fam;
}

Matrix random_unitary(Rng& rng, Eigen::Index d) {
  std::normal_distribution<double> g;
  Matrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

std::vector<Hypergraph> matrix_rows() {
  std::vector<Hypergraph> out{shapes::single_vertex()};
  for (std::size_t n = 2; n <= 5; ++n) {
    out.push_back(shapes::line_graph(n));
    out.push_back(shapes::parallel_edges(n));
    out.push_back(shapes::star_graph(n));
  }
  return out;
}

}  // namespace

TEST(Verify, MatrixUnits) {
  const auto rep = verify_ck_family(one_edge(), one_edge_by_hand());
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.hr1, 0.0);
  ASSERT_TRUE(rep.hr2a_min_eig && rep.hr2b_min_eig);
  EXPECT_NEAR(*rep.hr2b_min_eig, 0.0, 1e-15);
}

TEST(Verify, PerturbedEntry) {
  auto fam = one_edge_by_hand();
  fam.edges["e"_e](0, 1) += 1e-3;
  const auto rep = verify_ck_family(one_edge(), fam);
  EXPECT_FALSE(rep.pass);
  EXPECT_NEAR(rep.hr1, 2e-3 + 1e-6, 1e-9);
}

TEST(Verify, NonProjection) {
  MatrixFamily fam;
  fam.dim = 2;
  fam.vertices["v"_v] = Matrix::Identity(2, 2) / 2.0;
  fam.vertices["w"_v] = Matrix::Identity(2, 2) / 2.0;
  fam.edges["e"_e] = Matrix::Zero(2, 2);
  const auto rep = verify_ck_family(one_edge(), fam);
  EXPECT_FALSE(rep.pass);
  EXPECT_NEAR(rep.proj_idempotent, 0.25, 1e-12);
}

TEST(Verify, ShapeErrors) {
  auto fam = one_edge_by_hand();
  fam.edges["e"_e] = Matrix::Zero(3, 3);
  EXPECT_THROW(verify_ck_family(one_edge(), fam), Error);
  auto missing = one_edge_by_hand();
  missing.edges.clear();
  try {
    verify_ck_family(one_edge(), missing);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypergraphMismatch);
  }
}

TEST(Represent, ByHand) {
  const auto fam = standard_graph_representation(one_edge());
  EXPECT_EQ(fam.dim, 2u);
  EXPECT_TRUE(fam.edges.at("e"_e).isApprox(one_edge_by_hand().edges.at("e"_e)));
  const auto point = standard_graph_representation(shapes::single_vertex());
  EXPECT_EQ(point.dim, 1u);
  EXPECT_EQ(point.vertices.at("v"_v)(0, 0), std::complex<double>(1, 0));
  EXPECT_EQ(standard_graph_representation(shapes::line_graph(2)).dim, 2u);
  EXPECT_EQ(standard_graph_representation(shapes::star_graph(4)).dim, 6u);
}

TEST(Represent, Errors) {
  try {
    standard_graph_representation(shapes::two_cycle());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HasCycle);
  }
  try {
    standard_graph_representation(shapes::toeplitz_range());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGraph);
  }
}

TEST(Represent, CatalogRowsVerifyAndSumToIdentity) {
  for (const auto& h : matrix_rows()) {
    const auto fam = standard_graph_representation(h);
    EXPECT_TRUE(verify_ck_family(h, fam).pass) << serialize_hg(h);
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(fam.dim), static_cast<Eigen::Index>(fam.dim));
    for (const auto& [v, m] : fam.vertices) sum += m;
    EXPECT_TRUE(sum.isIdentity(1e-15));
  }
}

TEST(Represent, RandomAcyclicGraphsVerify) {
  Rng rng(111);
  for (int i = 0; i < 100; ++i) {
    const auto h = random_acyclic_graph(rng);
    EXPECT_TRUE(verify_ck_family(h, standard_graph_representation(h)).pass);
  }
}

TEST(Represent, PerturbationIsCaught) {
  for (const auto& h : matrix_rows()) {
    const auto fam = standard_graph_representation(h);
    for (const auto& [e, m] : fam.edges) {
      auto bad = fam;
      Eigen::Index r, c;
      m.cwiseAbs().maxCoeff(&r, &c);
      bad.edges[e](r, c) += 1e-3;
      const auto rep = verify_ck_family(h, bad);
      EXPECT_FALSE(rep.pass);
      EXPECT_GE(std::max(rep.hr1, rep.partial_isometry), 5e-4);
    }
  }
}

TEST(Verify, UnitaryConjugationInvariance) {
  Rng rng(112);
  for (const auto& h : matrix_rows()) {
    const auto fam = standard_graph_representation(h);
    const Matrix u = random_unitary(rng, static_cast<Eigen::Index>(fam.dim));
    auto conj = fam;
    for (auto& [v, m] : conj.vertices) m = u * m * u.adjoint();
    for (auto& [e, m] : conj.edges) m = u * m * u.adjoint();
    conj.tol = 1e-9;
    const auto a = verify_ck_family(h, fam);
    const auto b = verify_ck_family(h, conj);
    EXPECT_TRUE(b.pass);
    EXPECT_LT(std::abs(a.hr1 - b.hr1), 1e-8);
    if (a.hr2a_min_eig) {
      EXPECT_NEAR(*a.hr2a_min_eig, *b.hr2a_min_eig, 1e-9);
    }
  }
}

TEST(Evaluate, HomomorphismLaws) {
  const auto h = shapes::line_graph(3);
  const auto fam = standard_graph_representation(h);
  const StarAlgebra alg(h);
  EXPECT_TRUE(evaluate(alg.unit_sum(), fam).isIdentity(0));
  EXPECT_TRUE(evaluate(alg.zero(), fam).isZero(0));
  ExpressionSampler sampler(alg.alphabet(), 5);
  for (int i = 0; i < 50; ++i) {
    const auto x = sampler.expression();
    const auto y = sampler.expression();
    EXPECT_LT(max_abs_entry(evaluate(x.adjoint(), fam) - evaluate(x, fam).adjoint()), 1e-12);
    EXPECT_LT(max_abs_entry(evaluate(x * y, fam) - evaluate(x, fam) * evaluate(y, fam)), 1e-12);
  }
}

TEST(Oracle, NormalizeAgreesNumerically) {
  for (const auto& h : matrix_rows()) {
    const auto fam = standard_graph_representation(h);
    const auto rs = derive_forced_equalities(h);
    EXPECT_LT(symbolic_numeric_consistency(rs, fam, 200, 7), 1e-9) << serialize_hg(h);
    EXPECT_EQ(symbolic_numeric_consistency(rs, fam, 0, 7), 0.0);
  }
  Rng rng(113);
  for (int i = 0; i < 30; ++i) {
    const auto h = random_acyclic_graph(rng);
    EXPECT_LT(symbolic_numeric_consistency(derive_forced_equalities(h), standard_graph_representation(h), 50, i),
              1e-9);
  }
}

TEST(Oracle, RejectsUnverifiedFamily) {
  auto fam = one_edge_by_hand();
  fam.edges["e"_e] *= 2.0;
  try {
    symbolic_numeric_consistency(derive_forced_equalities(one_edge()), fam, 10, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
  }
}
