#include <gtest/gtest.h>

#include "support.hpp"

using namespace hgc;
using namespace hgc::literals;
using namespace hgc::testing;

TEST(Giut, Verdicts) {
  EXPECT_EQ(giut_status(shapes::bouquet(2)).verdict, Verdict::Satisfied);
  EXPECT_EQ(giut_status(shapes::hyper_cuntz(3)).verdict, Verdict::Satisfied);
  const auto line = giut_status(shapes::line_graph(3));
  EXPECT_EQ(line.verdict, Verdict::NotSatisfied);
  EXPECT_EQ(line.sinks, VertexSet{"v1"_v});
  EXPECT_EQ(giut_status(shapes::toeplitz_source()).verdict, Verdict::NotSatisfied);
  const auto full = giut_status(shapes::full_edges(3));
  EXPECT_EQ(full.verdict, Verdict::Unknown);
  EXPECT_TRUE(full.reasons.quasi_perfect_only);
  EXPECT_TRUE(full.reasons.no_sinks);
  EXPECT_EQ(full.reasons.generated_by_isometries, Generation::Unknown);
}

TEST(Giut, DualOfSinklessUltragraph) {
  Rng rng(101);
  int seen = 0;
  while (seen < 50) {
    const auto h = random_ultragraph(rng, 6, 8);
    if (!sinks_sources(h).sinks.empty()) continue;
    ++seen;
    EXPECT_EQ(giut_status(dual_graph(h)).verdict, Verdict::Satisfied);
  }
}

TEST(NonAmenability, FullEdges) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto h = shapes::full_edges(n);
    const auto cert = non_amenability_search(h);
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(cert->witness_vertices, h.vertices());
    EXPECT_EQ(cert->witness_edges, EdgeSet{"e1"_e});
    EXPECT_EQ(cert->pattern(), "FullSingleEdge(" + std::to_string(n) + ")");
    EXPECT_TRUE(recheck(h, *cert));
  }
  for (std::size_t m = 2; m <= 3; ++m)
    for (std::size_t n = 2; n <= 3; ++n) {
      const auto h = shapes::full_edges(n, m);
      const auto cert = non_amenability_search(h);
      ASSERT_TRUE(cert.has_value());
      EXPECT_EQ(cert->pattern(), "FullMultiEdge(" + std::to_string(n) + "," + std::to_string(m) + ")");
      EXPECT_TRUE(recheck(h, *cert));
    }
}

TEST(NonAmenability, WorkedExample) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto h = shapes::full_edge_with_tail(n);
    const auto cert = non_amenability_search(h);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(recheck(h, *cert));
    EXPECT_EQ(cert->witness_edges, EdgeSet{"f"_e});
    EXPECT_FALSE(cert->witness_vertices.contains("w"_v));
  }
}

TEST(NonAmenability, NoneOnGraphsAndUltragraphs) {
  Rng rng(102);
  for (int i = 0; i < 100; ++i) {
    EXPECT_FALSE(non_amenability_search(random_graph(rng, 8, 10)).has_value());
    EXPECT_FALSE(non_amenability_search(random_ultragraph(rng, 8, 8)).has_value());
  }
}

TEST(NonAmenability, MatchesBruteForce) {
  Rng rng(103);
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    const auto h = random_hypergraph(rng, 5, 3);
    const auto cert = non_amenability_search(h);
    EXPECT_EQ(cert.has_value(), witness_exists_oracle(h)) << serialize_hg(h);
    if (cert) {
      ++found;
      EXPECT_TRUE(recheck(h, *cert));
    }
  }
  EXPECT_GT(found, 5);
}

TEST(NonAmenability, TamperedCertificateFails) {
  const auto h = shapes::full_edge_with_tail(3);
  auto cert = *non_amenability_search(h);
  cert.witness_vertices.insert("w"_v);
  EXPECT_FALSE(recheck(h, cert));
}

TEST(NonAmenability, Budget) {
  SearchOptions opt;
  opt.budget = 1;
  try {
    non_amenability_search(shapes::crossing_cycle(), opt);
    SUCCEED();
  } catch (const Error&) {
    ADD_FAILURE() << "pool below two vertices needs no search";
  }
  Hypergraph h(shapes::numbered(4), {});
  h.add_edge("e"_e, shapes::numbered(4), {"v1"_v});
  h.add_edge("f"_e, shapes::numbered(4), shapes::numbered(4));
  h.add_edge("g"_e, {"v1"_v}, {"v2"_v});
  try {
    non_amenability_search(h, opt);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(NonAmenability, HeuristicForLargePools) {
  const auto h = shapes::full_edges(20);
  const auto cert = non_amenability_search(h);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->n, 20u);
}
