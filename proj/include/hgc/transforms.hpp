#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hgc/hypergraph.hpp"

namespace hgc {

/// Provenance of every output id: new id -> the input id it was derived from.
/// Ids created from nothing (delay edges) have no entry.
struct Relabeling {
  std::map<VertexId, VertexId> vertex_origin;
  std::map<EdgeId, EdgeId> edge_origin;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

struct TransformResult {
  Hypergraph graph;
  Relabeling relabeling;
  bool weakened = false;
  std::vector<std::string> notes;
};

/// Ordered blocks of edge ids. Validated against the edge set a move needs.
struct Partition {
  std::vector<EdgeSet> blocks;

  std::size_t size() const noexcept { return blocks.size(); }

  static Partition single_block(EdgeSet edges) { return Partition{{std::move(edges)}}; }
  static Partition singletons(const EdgeSet& edges) {
    Partition p;
    for (const auto& e : edges) p.blocks.push_back(EdgeSet{e});
    return p;
  }
};

namespace detail {

template <class Id, class Taken>
Id fresh_id(const std::string& base, const Taken& taken) {
  Id candidate{base};
  for (int k = 2; taken.contains(candidate); ++k) candidate = Id{base + "_" + std::to_string(k)};
  return candidate;
}

inline void check_partition(const Partition& p, const EdgeSet& required, const std::string& what) {
  if (p.blocks.empty()) fail(ErrorKind::BadPartition, what + ": partition has no blocks");
  EdgeSet seen;
  for (const auto& block : p.blocks) {
    if (block.empty()) fail(ErrorKind::BadPartition, what + ": empty block");
    for (const auto& e : block) {
      if (!required.contains(e))
        fail(ErrorKind::BadPartition, what + ": edge '" + e.str() + "' does not belong here");
      if (!seen.insert(e).second)
        fail(ErrorKind::BadPartition, what + ": edge '" + e.str() + "' appears in two blocks");
    }
  }
  if (seen != required) fail(ErrorKind::BadPartition, what + ": blocks do not cover every edge");
}

inline std::size_t block_of(const Partition& p, const EdgeId& e) {
  for (std::size_t j = 0; j < p.blocks.size(); ++j)
    if (p.blocks[j].contains(e)) return j;
  fail(ErrorKind::BadPartition, "edge '" + e.str() + "' is in no block");
}

inline VertexSet replace(const VertexSet& s, const VertexId& w, const VertexId& by) {
  VertexSet out = s;
  out.erase(w);
  out.insert(by);
  return out;
}

// Vertex copies w^1..w^n, avoiding ids already present.
inline std::vector<VertexId> split_vertex(const Hypergraph& h, const VertexId& w, std::size_t n,
                                          VertexSet& vertices, Relabeling& rl) {
  vertices.erase(w);
  std::vector<VertexId> copies;
  for (std::size_t j = 1; j <= n; ++j) {
    VertexSet taken = h.vertices();
    taken.insert(vertices.begin(), vertices.end());
    auto c = fresh_id<VertexId>(w.str() + "^" + std::to_string(j), taken);
    vertices.insert(c);
    rl.vertex_origin.emplace(c, w);
    copies.push_back(std::move(c));
  }
  return copies;
}

inline void keep_vertices(const VertexSet& vs, Relabeling& rl) {
  for (const auto& v : vs) rl.vertex_origin.emplace(v, v);
}

class EdgeBuilder {
 public:
  EdgeBuilder() = default;

  // An edge carried over under its own reserved id keeps it; every other
  // name avoids reserved and used ids by a suffix.
  EdgeId add(const std::string& name, const EdgeId* origin, VertexSet s, VertexSet r) {
    EdgeId id{name};
    const bool own = origin && *origin == id && reserved_.contains(id) && !taken_.contains(id);
    for (int k = 2; !own && (taken_.contains(id) || reserved_.contains(id)); ++k)
      id = EdgeId{name + "_" + std::to_string(k)};
    taken_.insert(id);
    edges_.emplace(id, EdgeEnds{std::move(s), std::move(r)});
    if (origin) rl_edges_.emplace(id, *origin);
    return id;
  }

  void reserve(const EdgeId& e) { reserved_.insert(e); }

  Hypergraph::EdgeMap take_edges() { return std::move(edges_); }
  std::map<EdgeId, EdgeId> take_origin() { return std::move(rl_edges_); }

 private:
  EdgeSet reserved_;
  EdgeSet taken_;
  Hypergraph::EdgeMap edges_;
  std::map<EdgeId, EdgeId> rl_edges_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// range decomposition and merging

/// One edge (e, B) per block B of each range partition; sources are kept.
inline TransformResult decompose_ranges_partitioned(
    const Hypergraph& h, const std::map<EdgeId, std::vector<VertexSet>>& partitions) {
  validate(h);
  for (const auto& [e, blocks] : partitions) h.edge(e);
  TransformResult out;
  detail::EdgeBuilder eb;
  for (const auto& [e, ends] : h.edges()) {
    std::vector<VertexSet> blocks;
    if (auto it = partitions.find(e); it != partitions.end()) {
      blocks = it->second;
      VertexSet cover;
      for (const auto& b : blocks) {
        if (b.empty()) fail(ErrorKind::BadPartition, "edge '" + e.str() + "': empty range block");
        for (const auto& v : b)
          if (!cover.insert(v).second)
            fail(ErrorKind::BadPartition, "edge '" + e.str() + "': range blocks overlap");
      }
      if (cover != ends.range)
        fail(ErrorKind::BadPartition, "edge '" + e.str() + "': blocks must cover the range exactly");
    } else {
      for (const auto& v : ends.range) blocks.push_back(VertexSet{v});
    }
    for (const auto& b : blocks) {
      std::string name = e.str() + "@";
      bool first = true;
      for (const auto& v : b) {
        name += (first ? "" : "+") + v.str();
        first = false;
      }
      eb.add(name, &e, ends.source, b);
    }
  }
  out.graph = Hypergraph(h.vertices(), eb.take_edges());
  out.relabeling.edge_origin = eb.take_origin();
  detail::keep_vertices(h.vertices(), out.relabeling);
  return out;
}

inline TransformResult decompose_ranges(const Hypergraph& h) {
  return decompose_ranges_partitioned(h, {});
}

inline TransformResult merge_edges(const Hypergraph& h, const EdgeId& e, const EdgeId& f) {
  validate(h);
  const auto& ee = h.edge(e);
  const auto& fe = h.edge(f);
  if (e == f) fail(ErrorKind::PreconditionFailed, "cannot merge an edge with itself");
  if (ee.source != fe.source)
    fail(ErrorKind::SourceMismatch, "edges '" + e.str() + "' and '" + f.str() + "' have different sources");
  if (intersects(ee.range, fe.range))
    fail(ErrorKind::RangesOverlap, "ranges of '" + e.str() + "' and '" + f.str() + "' overlap");
  TransformResult out;
  detail::EdgeBuilder eb;
  for (const auto& [g, ends] : h.edges())
    if (g != e && g != f) eb.reserve(g);
  for (const auto& [g, ends] : h.edges())
    if (g != e && g != f) eb.add(g.str(), &g, ends.source, ends.range);
  eb.add("g(" + e.str() + "+" + f.str() + ")", &e, ee.source, set_union(ee.range, fe.range));
  out.graph = Hypergraph(h.vertices(), eb.take_edges());
  out.relabeling.edge_origin = eb.take_origin();
  detail::keep_vertices(h.vertices(), out.relabeling);
  out.notes.push_back("merged edge also originates from '" + f.str() + "'");
  return out;
}

/// Graph on the edge set with an arrow e -> f whenever s(f) meets r(e).
inline Hypergraph dual_graph(const Hypergraph& h) {
  validate(h);
  Hypergraph out;
  for (const auto& [e, ends] : h.edges()) out.add_vertex(VertexId{e.str()});
  EdgeSet taken;
  for (const auto& [e, ee] : h.edges())
    for (const auto& [f, fe] : h.edges())
      if (intersects(fe.source, ee.range)) {
        auto id = detail::fresh_id<EdgeId>(e.str() + "." + f.str(), taken);
        taken.insert(id);
        out.add_edge(id, VertexSet{VertexId{e.str()}}, VertexSet{VertexId{f.str()}});
      }
  return out;
}

// ---------------------------------------------------------------------------
// moves

inline TransformResult move_s(const Hypergraph& h, const VertexId& w) {
  validate(h);
  h.require_vertex(w);
  if (!received_edges(h, w).empty())
    fail(ErrorKind::NotASource, "vertex '" + w.str() + "' lies in the range of some edge");
  TransformResult out;
  VertexSet vs = h.vertices();
  vs.erase(w);
  Hypergraph::EdgeMap es;
  for (const auto& [e, ends] : h.edges())
    if (!ends.source.contains(w)) {
      es.emplace(e, ends);
      out.relabeling.edge_origin.emplace(e, e);
    }
  detail::keep_vertices(vs, out.relabeling);
  out.graph = Hypergraph(std::move(vs), std::move(es));
  return out;
}

/// With `allow_weakened`, edges whose range merely contains w are rerouted
/// too and the result is flagged; otherwise they are rejected.
inline TransformResult move_r(const Hypergraph& h, const VertexId& w, bool allow_weakened = false) {
  validate(h);
  h.require_vertex(w);
  const auto emitted = emitted_edges(h, w);
  if (emitted.size() != 1)
    fail(ErrorKind::EmitsNotOne, "vertex '" + w.str() + "' emits " +
                                     std::to_string(emitted.size()) + " edges, expected exactly one");
  const EdgeId f = *emitted.begin();
  const auto& fe = h.edge(f);
  if (fe.source != VertexSet{w})
    fail(ErrorKind::SourceNotSingleton, "edge '" + f.str() + "' has a source other than {" + w.str() + "}");
  if (fe.range.contains(w))
    fail(ErrorKind::PreconditionFailed, "edge '" + f.str() + "' returns to '" + w.str() + "'");

  const auto incoming = received_edges(h, w);
  VertexSet emitters;
  for (const auto& e : incoming)
    for (const auto& x : h.source(e))
      if (x != w) emitters.insert(x);
  if (emitters.size() != 1)
    fail(ErrorKind::MultipleEmitters, "vertex '" + w.str() + "' is reached from " +
                                          std::to_string(emitters.size()) + " vertices, expected one");

  TransformResult out;
  for (const auto& e : incoming)
    if (h.range(e) != VertexSet{w}) {
      if (!allow_weakened)
        fail(ErrorKind::RangeNotSingleton, "edge '" + e.str() + "' reaches '" + w.str() + "' and other vertices");
      out.weakened = true;
    }

  detail::EdgeBuilder eb;
  for (const auto& [e, ends] : h.edges())
    if (e != f && !incoming.contains(e)) eb.reserve(e);
  for (const auto& [e, ends] : h.edges())
    if (e != f && !incoming.contains(e)) eb.add(e.str(), &e, ends.source, ends.range);
  for (const auto& e : incoming) {
    VertexSet r = h.range(e);
    r.erase(w);
    r.insert(fe.range.begin(), fe.range.end());
    eb.add(e.str() + "." + f.str(), &e, h.source(e), std::move(r));
  }
  VertexSet vs = h.vertices();
  vs.erase(w);
  detail::keep_vertices(vs, out.relabeling);
  out.graph = Hypergraph(std::move(vs), eb.take_edges());
  out.relabeling.edge_origin = eb.take_origin();
  return out;
}

/// Outsplitting at w along a partition of the edges w emits.
inline TransformResult move_o(const Hypergraph& h, const VertexId& w, const Partition& p) {
  validate(h);
  h.require_vertex(w);
  const auto outgoing = emitted_edges(h, w);
  if (outgoing.empty()) fail(ErrorKind::IsSink, "vertex '" + w.str() + "' is a sink");
  detail::check_partition(p, outgoing, "move O at '" + w.str() + "'");

  TransformResult out;
  if (!is_locally_ultra_at(h, w)) out.notes.push_back("not locally ultra at " + w.str());
  VertexSet vs = h.vertices();
  const auto wc = detail::split_vertex(h, w, p.size(), vs, out.relabeling);
  VertexSet kept = h.vertices();
  kept.erase(w);
  detail::keep_vertices(kept, out.relabeling);

  detail::EdgeBuilder eb;
  for (const auto& [e, ends] : h.edges())
    if (!ends.range.contains(w)) eb.reserve(e);
  for (const auto& [e, ends] : h.edges()) {
    VertexSet s = ends.source;
    if (s.contains(w)) s = detail::replace(s, w, wc[detail::block_of(p, e)]);
    if (!ends.range.contains(w)) {
      eb.add(e.str(), &e, s, ends.range);
      continue;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      VertexSet r = i == 0 ? detail::replace(ends.range, w, wc[0]) : VertexSet{wc[i]};
      const std::string name = p.size() == 1 ? e.str() : e.str() + "#" + std::to_string(i + 1);
      eb.add(name, &e, s, std::move(r));
    }
  }
  out.graph = Hypergraph(std::move(vs), eb.take_edges());
  out.relabeling.edge_origin = eb.take_origin();
  return out;
}

/// Insplitting at w along a partition of the edges w receives.
inline TransformResult move_i(const Hypergraph& h, const VertexId& w, const Partition& p) {
  validate(h);
  h.require_vertex(w);
  const auto incoming = received_edges(h, w);
  if (incoming.empty()) fail(ErrorKind::IsSourceVertex, "vertex '" + w.str() + "' is a source");
  detail::check_partition(p, incoming, "move I at '" + w.str() + "'");

  TransformResult out;
  if (!is_locally_ultra_at(h, w)) out.notes.push_back("not locally ultra at " + w.str());
  VertexSet vs = h.vertices();
  const auto wc = detail::split_vertex(h, w, p.size(), vs, out.relabeling);
  VertexSet kept = h.vertices();
  kept.erase(w);
  detail::keep_vertices(kept, out.relabeling);

  detail::EdgeBuilder eb;
  for (const auto& [e, ends] : h.edges())
    if (!ends.source.contains(w)) eb.reserve(e);
  for (const auto& [e, ends] : h.edges()) {
    VertexSet r = ends.range;
    if (r.contains(w)) r = detail::replace(r, w, wc[detail::block_of(p, e)]);
    if (!ends.source.contains(w)) {
      eb.add(e.str(), &e, ends.source, r);
      continue;
    }
    if (ends.range.contains(w))
      out.notes.push_back("edge " + e.str() + " both leaves and enters " + w.str() +
                          "; all copies follow its block");
    for (std::size_t i = 0; i < p.size(); ++i) {
      VertexSet s = i == 0 ? detail::replace(ends.source, w, wc[0]) : VertexSet{wc[i]};
      const std::string name = p.size() == 1 ? e.str() : e.str() + "#" + std::to_string(i + 1);
      eb.add(name, &e, std::move(s), r);
    }
  }
  out.graph = Hypergraph(std::move(vs), eb.take_edges());
  out.relabeling.edge_origin = eb.take_origin();
  return out;
}

/// Indelay at w: incoming edges land on w^j by block, a chain of n-1 delay
/// edges w^{j+1} -> w^j leads back to w^1, which emits w's old edges.
inline TransformResult indelay(const Hypergraph& h, const VertexId& w, const Partition& p) {
  validate(h);
  h.require_vertex(w);
  const auto incoming = received_edges(h, w);
  if (incoming.empty()) fail(ErrorKind::IsSourceVertex, "vertex '" + w.str() + "' is a source");
  detail::check_partition(p, incoming, "indelay at '" + w.str() + "'");

  TransformResult out;
  VertexSet vs = h.vertices();
  const auto wc = detail::split_vertex(h, w, p.size(), vs, out.relabeling);
  VertexSet kept = h.vertices();
  kept.erase(w);
  detail::keep_vertices(kept, out.relabeling);

  detail::EdgeBuilder eb;
  for (const auto& [e, ends] : h.edges()) eb.reserve(e);
  for (const auto& [e, ends] : h.edges()) {
    VertexSet r = ends.range;
    if (r.contains(w)) r = detail::replace(r, w, wc[detail::block_of(p, e)]);
    VertexSet s = ends.source;
    if (s.contains(w)) s = detail::replace(s, w, wc[0]);
    eb.add(e.str(), &e, std::move(s), std::move(r));
  }
  for (std::size_t j = 1; j < p.size(); ++j)
    eb.add("f_" + std::to_string(j) + "@" + w.str(), nullptr, VertexSet{wc[j]}, VertexSet{wc[j - 1]});
  out.graph = Hypergraph(std::move(vs), eb.take_edges());
  out.relabeling.edge_origin = eb.take_origin();
  return out;
}

// ---------------------------------------------------------------------------
// quotient constructions

/// Disjoint union of gamma and delta with w added to the source of f.
/// Colliding ids of delta get a numeric suffix; `relabeling` records them.
inline TransformResult attach_product(const Hypergraph& gamma, const Hypergraph& delta,
                                      const EdgeId& f, const VertexId& w) {
  validate(gamma);
  validate(delta);
  gamma.edge(f);
  delta.require_vertex(w);

  TransformResult out;
  VertexSet vs = gamma.vertices();
  std::map<VertexId, VertexId> vmap;
  for (const auto& v : delta.vertices()) {
    VertexSet taken = vs;
    taken.insert(delta.vertices().begin(), delta.vertices().end());
    auto nv = vs.contains(v) ? detail::fresh_id<VertexId>(v.str(), taken) : v;
    vs.insert(nv);
    vmap.emplace(v, nv);
  }
  for (const auto& v : vs) {
    auto it = std::find_if(vmap.begin(), vmap.end(), [&](const auto& kv) { return kv.second == v; });
    out.relabeling.vertex_origin.emplace(v, it == vmap.end() ? v : it->first);
  }
  auto remap = [&](const VertexSet& s) {
    VertexSet o;
    for (const auto& v : s) o.insert(vmap.at(v));
    return o;
  };

  Hypergraph::EdgeMap es;
  for (const auto& [e, ends] : gamma.edges()) {
    EdgeEnds ne = ends;
    if (e == f) ne.source.insert(vmap.at(w));
    es.emplace(e, std::move(ne));
    out.relabeling.edge_origin.emplace(e, e);
  }
  for (const auto& [e, ends] : delta.edges()) {
    EdgeSet taken;
    for (const auto& [g, _] : es) taken.insert(g);
    for (const auto& [g, _] : delta.edges())
      if (g != e) taken.insert(g);
    auto ne = gamma.has_edge(e) || es.contains(e) ? detail::fresh_id<EdgeId>(e.str(), taken) : e;
    es.emplace(ne, EdgeEnds{remap(ends.source), remap(ends.range)});
    out.relabeling.edge_origin.emplace(ne, e);
  }
  out.graph = Hypergraph(std::move(vs), std::move(es));
  return out;
}

/// Why a vertex-subset restriction is (or is not) a quotient: the family that
/// keeps generators over the subset and sends the rest to zero must satisfy
/// every relation.
struct QuotientCertificate {
  bool valid = true;
  VertexSet zeroed_vertices;
  EdgeSet zeroed_edges;
  std::vector<std::string> violations;
};

struct Restriction {
  Hypergraph graph;
  QuotientCertificate certificate;
};

inline Restriction restrict_subhypergraph(const Hypergraph& h, const VertexSet& keep) {
  validate(h);
  if (keep.empty()) fail(ErrorKind::EmptyRestriction, "restriction to the empty vertex set");
  for (const auto& v : keep) h.require_vertex(v);

  Restriction out;
  auto& cert = out.certificate;
  Hypergraph::EdgeMap es;
  for (const auto& [e, ends] : h.edges()) {
    auto s = set_intersection(ends.source, keep);
    auto r = set_intersection(ends.range, keep);
    if (!s.empty() && !r.empty()) {
      es.emplace(e, EdgeEnds{std::move(s), std::move(r)});
    } else {
      cert.zeroed_edges.insert(e);
      if (!r.empty()) {
        cert.valid = false;
        cert.violations.push_back("edge " + e.str() + " reaches the subset but is sent to zero");
      }
    }
  }
  for (const auto& v : h.vertices())
    if (!keep.contains(v)) cert.zeroed_vertices.insert(v);
  out.graph = Hypergraph(keep, std::move(es));

  const auto before = sinks_sources(h).sinks;
  const auto after = sinks_sources(out.graph).sinks;
  for (const auto& v : keep)
    if (!before.contains(v) && after.contains(v)) {
      cert.valid = false;
      cert.violations.push_back("vertex " + v.str() + " loses every outgoing edge");
    }
  return out;
}

}  // namespace hgc
