#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "hgc/hypergraph.hpp"

namespace hgc {

/// Relabeling-invariant description of a hypergraph. Two hypergraphs are
/// isomorphic iff their certificates compare equal.
struct CanonicalCertificate {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> edges;

  friend auto operator<=>(const CanonicalCertificate&, const CanonicalCertificate&) = default;
  friend bool operator==(const CanonicalCertificate&, const CanonicalCertificate&) = default;
};

namespace detail {

struct IndexedHypergraph {
  std::size_t n = 0;
  std::vector<std::vector<int>> src;
  std::vector<std::vector<int>> rng;
  std::vector<std::vector<int>> emits;     // vertex -> edges with it in the source
  std::vector<std::vector<int>> receives;  // vertex -> edges with it in the range
};

inline IndexedHypergraph index_hypergraph(const Hypergraph& h) {
  IndexedHypergraph ix;
  ix.n = h.vertex_count();
  std::map<VertexId, int> pos;
  for (const auto& v : h.vertices()) pos.emplace(v, static_cast<int>(pos.size()));
  ix.emits.resize(ix.n);
  ix.receives.resize(ix.n);
  for (const auto& [e, ends] : h.edges()) {
    const int k = static_cast<int>(ix.src.size());
    auto& s = ix.src.emplace_back();
    auto& r = ix.rng.emplace_back();
    for (const auto& v : ends.source) {
      s.push_back(pos.at(v));
      ix.emits[pos.at(v)].push_back(k);
    }
    for (const auto& v : ends.range) {
      r.push_back(pos.at(v));
      ix.receives[pos.at(v)].push_back(k);
    }
  }
  return ix;
}

inline std::vector<int> sorted_colours(const std::vector<int>& members,
                                       const std::vector<int>& colour) {
  std::vector<int> out;
  out.reserve(members.size());
  for (int m : members) out.push_back(colour[m]);
  std::sort(out.begin(), out.end());
  return out;
}

// Iterated colour refinement. Colours are ranks of sorted signatures, so the
// result never depends on input ids; the relative order of existing cells is
// preserved, which keeps individualization canonical.
inline std::vector<int> refine(const IndexedHypergraph& ix, std::vector<int> colour) {
  std::size_t cells = std::set<int>(colour.begin(), colour.end()).size();
  while (true) {
    const std::size_t m = ix.src.size();
    std::vector<std::pair<std::vector<int>, std::vector<int>>> edge_sig(m);
    for (std::size_t k = 0; k < m; ++k)
      edge_sig[k] = {sorted_colours(ix.src[k], colour), sorted_colours(ix.rng[k], colour)};
    std::vector<std::size_t> edge_order(m);
    for (std::size_t k = 0; k < m; ++k) edge_order[k] = k;
    std::sort(edge_order.begin(), edge_order.end(),
              [&](std::size_t a, std::size_t b) { return edge_sig[a] < edge_sig[b]; });
    std::vector<int> edge_colour(m);
    for (std::size_t i = 0, c = 0; i < m; ++i) {
      if (i > 0 && edge_sig[edge_order[i]] != edge_sig[edge_order[i - 1]]) ++c;
      edge_colour[edge_order[i]] = static_cast<int>(c);
    }

    std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> sig(ix.n);
    for (std::size_t v = 0; v < ix.n; ++v)
      sig[v] = {colour[v], sorted_colours(ix.emits[v], edge_colour),
                sorted_colours(ix.receives[v], edge_colour)};
    std::vector<std::size_t> order(ix.n);
    for (std::size_t v = 0; v < ix.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    std::vector<int> next(ix.n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < ix.n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      next[order[i]] = static_cast<int>(c);
    }
    const std::size_t next_cells = ix.n == 0 ? 0 : c + 1;
    colour = std::move(next);
    if (next_cells == cells) return colour;
    cells = next_cells;
  }
}

inline CanonicalCertificate certificate_for(const IndexedHypergraph& ix,
                                            const std::vector<int>& colour) {
  CanonicalCertificate cert;
  cert.vertex_count = ix.n;
  cert.edges.reserve(ix.src.size());
  for (std::size_t k = 0; k < ix.src.size(); ++k)
    cert.edges.emplace_back(sorted_colours(ix.src[k], colour),
                            sorted_colours(ix.rng[k], colour));
  std::sort(cert.edges.begin(), cert.edges.end());
  return cert;
}

// Vertices with identical incidence are swapped by an automorphism, so only
// one of them needs to be individualized.
inline bool twins(const IndexedHypergraph& ix, int a, int b) {
  return ix.emits[a] == ix.emits[b] && ix.receives[a] == ix.receives[b];
}

inline void search(const IndexedHypergraph& ix, const std::vector<int>& colour,
                   std::optional<CanonicalCertificate>& best) {
  std::vector<int> count(ix.n, 0);
  for (int c : colour) ++count[c];
  int target = -1;
  for (std::size_t c = 0; c < ix.n; ++c)
    if (count[c] > 1) {
      target = static_cast<int>(c);
      break;
    }
  if (target < 0) {
    auto cert = certificate_for(ix, colour);
    if (!best || cert < *best) best = std::move(cert);
    return;
  }
  std::vector<int> tried;
  for (std::size_t v = 0; v < ix.n; ++v) {
    if (colour[v] != target) continue;
    const int vi = static_cast<int>(v);
    if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(ix, t, vi); }))
      continue;
    tried.push_back(vi);
    // Individualize v: it keeps colour `target`, the rest of its cell moves up.
    std::vector<int> split = colour;
    for (auto& c : split)
      if (c > target) ++c;
    for (std::size_t u = 0; u < ix.n; ++u)
      if (colour[u] == target && u != v) split[u] = target + 1;
    search(ix, refine(ix, std::move(split)), best);
  }
}

}  // namespace detail

inline CanonicalCertificate canonical_certificate(const Hypergraph& h) {
  const auto ix = detail::index_hypergraph(h);
  std::optional<CanonicalCertificate> best;
  detail::search(ix, detail::refine(ix, std::vector<int>(ix.n, 0)), best);
  if (!best) best = CanonicalCertificate{};
  return *best;
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace hgc
