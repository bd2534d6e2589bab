#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgc/hgc.hpp"

namespace hgc::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline VertexSet random_subset(Rng& rng, const std::vector<VertexId>& vs) {
  VertexSet out;
  while (out.empty())
    for (const auto& v : vs)
      if (rng() % 2) out.insert(v);
  return out;
}

inline std::vector<VertexId> vertex_ids(std::size_t n) {
  std::vector<VertexId> vs;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(VertexId{"v" + std::to_string(i)});
  return vs;
}

inline Hypergraph random_hypergraph(Rng& rng, std::size_t max_v = 6, std::size_t max_e = 5) {
  const auto vs = vertex_ids(pick(rng, 1, max_v));
  Hypergraph h(VertexSet(vs.begin(), vs.end()), {});
  const std::size_t m = pick(rng, 0, max_e);
  for (std::size_t j = 1; j <= m; ++j)
    h.add_edge(EdgeId{"e" + std::to_string(j)}, random_subset(rng, vs), random_subset(rng, vs));
  return h;
}

inline Hypergraph random_ultragraph(Rng& rng, std::size_t max_v = 8, std::size_t max_e = 6) {
  const auto vs = vertex_ids(pick(rng, 1, max_v));
  Hypergraph h(VertexSet(vs.begin(), vs.end()), {});
  const std::size_t m = pick(rng, 0, max_e);
  for (std::size_t j = 1; j <= m; ++j)
    h.add_edge(EdgeId{"e" + std::to_string(j)}, {vs[pick(rng, 0, vs.size() - 1)]}, random_subset(rng, vs));
  return h;
}

inline Hypergraph random_graph(Rng& rng, std::size_t max_v = 8, std::size_t max_e = 8) {
  const auto vs = vertex_ids(pick(rng, 1, max_v));
  Hypergraph h(VertexSet(vs.begin(), vs.end()), {});
  const std::size_t m = pick(rng, 0, max_e);
  for (std::size_t j = 1; j <= m; ++j)
    h.add_edge(EdgeId{"e" + std::to_string(j)}, {vs[pick(rng, 0, vs.size() - 1)]},
               {vs[pick(rng, 0, vs.size() - 1)]});
  return h;
}

/// Edges only run from a higher index to a lower one.
inline Hypergraph random_acyclic_graph(Rng& rng, std::size_t max_v = 5, std::size_t max_e = 5) {
  const auto vs = vertex_ids(pick(rng, 1, max_v));
  Hypergraph h(VertexSet(vs.begin(), vs.end()), {});
  if (vs.size() < 2) return h;
  const std::size_t m = pick(rng, 0, max_e);
  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t a = pick(rng, 1, vs.size() - 1);
    const std::size_t b = pick(rng, 0, a - 1);
    h.add_edge(EdgeId{"e" + std::to_string(j)}, {vs[a]}, {vs[b]});
  }
  return h;
}

/// Same structure under fresh names, with vertices shuffled.
inline Hypergraph scrambled(Rng& rng, const Hypergraph& h) {
  std::vector<VertexId> old(h.vertices().begin(), h.vertices().end());
  std::vector<std::size_t> perm(old.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<VertexId, VertexId> to;
  for (std::size_t i = 0; i < old.size(); ++i) to.emplace(old[i], VertexId{"x" + std::to_string(perm[i])});
  Hypergraph out;
  for (const auto& [o, n] : to) out.add_vertex(n);
  std::size_t k = 0;
  for (const auto& [e, ends] : h.edges()) {
    VertexSet s, r;
    for (const auto& v : ends.source) s.insert(to.at(v));
    for (const auto& v : ends.range) r.insert(to.at(v));
    out.add_edge(EdgeId{"z" + std::to_string(k++)}, std::move(s), std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// oracles

/// Isomorphism by trying every vertex bijection.
inline bool brute_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const std::vector<VertexId> av(a.vertices().begin(), a.vertices().end());
  const std::vector<VertexId> bv(b.vertices().begin(), b.vertices().end());
  using Ends = std::pair<VertexSet, VertexSet>;
  std::multiset<Ends> target;
  for (const auto& [e, ends] : b.edges()) target.insert({ends.source, ends.range});
  std::vector<std::size_t> perm(av.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<VertexId, VertexId> to;
    for (std::size_t i = 0; i < av.size(); ++i) to.emplace(av[i], bv[perm[i]]);
    std::multiset<Ends> mapped;
    for (const auto& [e, ends] : a.edges()) {
      VertexSet s, r;
      for (const auto& v : ends.source) s.insert(to.at(v));
      for (const auto& v : ends.range) r.insert(to.at(v));
      mapped.insert({std::move(s), std::move(r)});
    }
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline HypergraphKind kind_oracle(const Hypergraph& h) {
  bool graph = true, ultra = true;
  for (const auto& [e, ends] : h.edges()) {
    if (ends.source.size() != 1) graph = ultra = false;
    if (ends.range.size() != 1) graph = false;
  }
  return graph ? HypergraphKind::Graph : ultra ? HypergraphKind::Ultragraph : HypergraphKind::GeneralHypergraph;
}

/// All nonempty vertex subsets closed under union and intersection that
/// contain the singletons, sources and ranges, by iterating to a fixpoint.
inline std::set<VertexSet> lattice_oracle(const Hypergraph& h) {
  std::set<VertexSet> s;
  for (const auto& v : h.vertices()) s.insert({v});
  for (const auto& [e, ends] : h.edges()) {
    s.insert(ends.source);
    s.insert(ends.range);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<VertexSet> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        VertexSet u = a, i;
        u.insert(b.begin(), b.end());
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(i, i.end()));
        grew |= s.insert(u).second;
        if (!i.empty()) grew |= s.insert(i).second;
      }
  }
  return s;
}

/// Restriction is a quotient: edges that hit the kept set in their range
/// keep a leg in it on both sides, and kept non-sinks still emit.
inline bool quotient_oracle(const Hypergraph& h, const VertexSet& keep) {
  for (const auto& [e, ends] : h.edges()) {
    bool r = false, s = false;
    for (const auto& v : keep) {
      r |= ends.range.contains(v);
      s |= ends.source.contains(v);
    }
    if (r && !s) return false;
  }
  for (const auto& v : keep) {
    bool emits = false, emits_inside = false;
    for (const auto& [e, ends] : h.edges()) {
      if (!ends.source.contains(v)) continue;
      emits = true;
      for (const auto& u : keep) emits_inside |= ends.range.contains(u);
    }
    if (emits && !emits_inside) return false;
  }
  return true;
}

/// Some subset of at least two vertices gives a quotient whose edges all
/// have the full subset as source and range.
inline bool witness_exists_oracle(const Hypergraph& h) {
  const std::vector<VertexId> vs(h.vertices().begin(), h.vertices().end());
  const std::size_t n = vs.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet keep;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) keep.insert(vs[i]);
    if (keep.size() < 2 || !quotient_oracle(h, keep)) continue;
    bool any = false, full = true;
    for (const auto& [e, ends] : h.edges()) {
      VertexSet s, r;
      for (const auto& v : keep) {
        if (ends.source.contains(v)) s.insert(v);
        if (ends.range.contains(v)) r.insert(v);
      }
      if (s.empty() || r.empty()) continue;
      any = true;
      full &= s == keep && r == keep;
    }
    if (any && full) return true;
  }
  return false;
}

inline Partition random_partition(Rng& rng, const EdgeSet& edges) {
  const std::size_t k = pick(rng, 1, edges.size());
  std::vector<EdgeSet> blocks(k);
  for (const auto& e : edges) blocks[pick(rng, 0, k - 1)].insert(e);
  Partition p;
  for (auto& b : blocks)
    if (!b.empty()) p.blocks.push_back(std::move(b));
  return p;
}

inline std::size_t range_total(const Hypergraph& h) {
  std::size_t n = 0;
  for (const auto& [e, ends] : h.edges()) n += ends.range.size();
  return n;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline HgDocument corpus(const std::string& name) {
  return parse_hg(read_file(std::string(HGC_CORPUS_DIR) + "/" + name));
}

}  // namespace hgc::testing
