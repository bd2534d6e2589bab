#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/isomorphism.hpp"

namespace hgc {

namespace shapes {

inline VertexId vtx(const std::string& base, std::size_t i) { return VertexId{base + std::to_string(i)}; }
inline EdgeId edg(const std::string& base, std::size_t i) { return EdgeId{base + std::to_string(i)}; }

inline VertexSet numbered(std::size_t n, const std::string& base = "v") {
  VertexSet out;
  for (std::size_t i = 1; i <= n; ++i) out.insert(vtx(base, i));
  return out;
}

inline Hypergraph single_vertex() {
  Hypergraph h;
  h.add_vertex(VertexId{"v"});
  return h;
}

/// v_{j+1} -> v_j for j < n.
inline Hypergraph line_graph(std::size_t n) {
  Hypergraph h(numbered(n), {});
  for (std::size_t j = 1; j < n; ++j) h.add_edge(edg("e", j), {vtx("v", j + 1)}, {vtx("v", j)});
  return h;
}

/// n-1 parallel edges v -> w.
inline Hypergraph parallel_edges(std::size_t n) {
  Hypergraph h(VertexSet{VertexId{"v"}, VertexId{"w"}}, {});
  for (std::size_t j = 1; j < n; ++j) h.add_edge(edg("e", j), {VertexId{"v"}}, {VertexId{"w"}});
  return h;
}

/// v -> w_j for j < n.
inline Hypergraph star_graph(std::size_t n) {
  Hypergraph h(numbered(n - 1, "w"), {});
  h.add_vertex(VertexId{"v"});
  for (std::size_t j = 1; j < n; ++j) h.add_edge(edg("e", j), {VertexId{"v"}}, {vtx("w", j)});
  return h;
}

/// One vertex carrying n loops.
inline Hypergraph bouquet(std::size_t n) {
  Hypergraph h = single_vertex();
  for (std::size_t j = 1; j <= n; ++j) h.add_edge(edg("e", j), {VertexId{"v"}}, {VertexId{"v"}});
  return h;
}

/// s(e_i) = {v_i}, r(e_i) = every vertex.
inline Hypergraph hyper_cuntz(std::size_t n) {
  Hypergraph h(numbered(n), {});
  for (std::size_t i = 1; i <= n; ++i) h.add_edge(edg("e", i), {vtx("v", i)}, numbered(n));
  return h;
}

inline Hypergraph toeplitz_graph() {
  Hypergraph h(VertexSet{VertexId{"v"}, VertexId{"w"}}, {});
  h.add_edge(EdgeId{"e"}, {VertexId{"w"}}, {VertexId{"v"}});
  h.add_edge(EdgeId{"f"}, {VertexId{"w"}}, {VertexId{"w"}});
  return h;
}

/// e: {w} -> {v, w}
inline Hypergraph toeplitz_range() {
  Hypergraph h(VertexSet{VertexId{"v"}, VertexId{"w"}}, {});
  h.add_edge(EdgeId{"e"}, {VertexId{"w"}}, {VertexId{"v"}, VertexId{"w"}});
  return h;
}

/// e: {v, w} -> {w}
inline Hypergraph toeplitz_source() {
  Hypergraph h(VertexSet{VertexId{"v"}, VertexId{"w"}}, {});
  h.add_edge(EdgeId{"e"}, {VertexId{"v"}, VertexId{"w"}}, {VertexId{"w"}});
  return h;
}

inline Hypergraph two_cycle() {
  Hypergraph h(VertexSet{VertexId{"v"}, VertexId{"w"}}, {});
  h.add_edge(EdgeId{"e"}, {VertexId{"v"}}, {VertexId{"w"}});
  h.add_edge(EdgeId{"f"}, {VertexId{"w"}}, {VertexId{"v"}});
  return h;
}

/// m edges, each with source and range equal to all n vertices.
inline Hypergraph full_edges(std::size_t n, std::size_t m = 1) {
  Hypergraph h(numbered(n), {});
  for (std::size_t j = 1; j <= m; ++j) h.add_edge(edg("e", j), numbered(n), numbered(n));
  return h;
}

/// w -> v_n plus one full edge on v_1..v_n.
inline Hypergraph full_edge_with_tail(std::size_t n) {
  Hypergraph h(numbered(n), {});
  h.add_vertex(VertexId{"w"});
  h.add_edge(EdgeId{"e"}, {VertexId{"w"}}, {vtx("v", n)});
  h.add_edge(EdgeId{"f"}, numbered(n), numbered(n));
  return h;
}

/// e: {v3, v4} -> {v1, v2}
inline Hypergraph crossing_pair() {
  Hypergraph h(numbered(4), {});
  h.add_edge(EdgeId{"e"}, {VertexId{"v3"}, VertexId{"v4"}}, {VertexId{"v1"}, VertexId{"v2"}});
  return h;
}

/// e1: {v1, v2} -> {v3, v4}, e2: {v3, v4} -> {v1, v2}
inline Hypergraph crossing_cycle() {
  Hypergraph h(numbered(4), {});
  h.add_edge(EdgeId{"e1"}, {VertexId{"v1"}, VertexId{"v2"}}, {VertexId{"v3"}, VertexId{"v4"}});
  h.add_edge(EdgeId{"e2"}, {VertexId{"v3"}, VertexId{"v4"}}, {VertexId{"v1"}, VertexId{"v2"}});
  return h;
}

}  // namespace shapes

struct CatalogMatch {
  std::string name;      // with parameters filled in, e.g. "M_3(ℂ)"
  std::string family;    // e.g. "M_n(ℂ)"
  std::string shape;
  std::string citation;
};

/// Match against the known small algebras by canonical labeling. The star
/// shape v -> w_j is reported by its actual algebra, a sum of n-1 copies of
/// M_2(ℂ).
inline std::optional<CatalogMatch> catalog_match(const Hypergraph& h) {
  validate(h);
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  const auto cert = canonical_certificate(h);
  auto same = [&](const Hypergraph& g) {
    return g.vertex_count() == n && g.edge_count() == m && canonical_certificate(g) == cert;
  };
  auto num = [](std::size_t k) { return std::to_string(k); };
  auto match = [](std::string name, std::string family, std::string shape) {
    return CatalogMatch{name, family, shape, "catalog:" + family + "/" + shape};
  };

  if (n == 1 && m == 0) return match("ℂ", "ℂ", "point");
  if (n >= 2 && m == n - 1 && same(shapes::line_graph(n)))
    return match("M_" + num(n) + "(ℂ)", "M_n(ℂ)", "line");
  if (n == 2 && m >= 1 && same(shapes::parallel_edges(m + 1)))
    return match("M_" + num(m + 1) + "(ℂ)", "M_n(ℂ)", "parallel");
  if (n >= 3 && m == n - 1 && same(shapes::star_graph(n)))
    return match("M_2(ℂ)^" + num(n - 1), "M_n(ℂ)", "star");
  if (n == 1 && m >= 2 && same(shapes::bouquet(m))) return match("O_" + num(m), "O_n", "bouquet");
  if (n >= 2 && m == n && same(shapes::hyper_cuntz(n)))
    return match("O_" + num(n), "O_n", "hyper-cuntz");
  if (n == 2 && m == 2 && same(shapes::toeplitz_graph())) return match("Toeplitz", "Toeplitz", "graph");
  if (n == 2 && m == 1 && same(shapes::toeplitz_range())) return match("Toeplitz", "Toeplitz", "range");
  if (n == 2 && m == 1 && same(shapes::toeplitz_source())) return match("Toeplitz", "Toeplitz", "source");
  if (n == 2 && m == 2 && same(shapes::two_cycle())) return match("M_2(C(𝕋))", "M_2(C(𝕋))", "cycle");
  if (n >= 1 && m == 1 && same(shapes::full_edges(n, 1)))
    return match("C(S¹)*ℂ^" + num(n), "C(S¹)*ℂⁿ", "full-edge");
  if (n >= 2 && m >= 2 && same(shapes::full_edges(n, m)))
    return match("O_" + num(m) + "*ℂ^" + num(n), "O_m*ℂⁿ", "full-edges");
  return std::nullopt;
}

}  // namespace hgc
