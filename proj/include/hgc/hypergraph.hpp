#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hgc/error.hpp"

namespace hgc {

/// Opaque string identifier. The tag keeps vertex and edge ids apart at
/// compile time; ordering is plain lexicographic on the underlying string.
template <class Tag>
class Identifier {
 public:
  Identifier() = default;
  explicit Identifier(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const Identifier&, const Identifier&) = default;
  friend bool operator==(const Identifier&, const Identifier&) = default;

 private:
  std::string value_;
};

using VertexId = Identifier<struct VertexTag>;
using EdgeId = Identifier<struct EdgeTag>;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

namespace literals {
inline VertexId operator""_v(const char* s, std::size_t n) {
  return VertexId{std::string(s, n)};
}
inline EdgeId operator""_e(const char* s, std::size_t n) {
  return EdgeId{std::string(s, n)};
}
}  // namespace literals

// Characters reserved by the text formats (`{a b} -> {c};`, `--blocks
// "e1,e2|e3"`, `s*(e)`) may not occur inside an id.
inline bool is_id_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x80) return true;
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))
    return true;
  switch (c) {
    case '_': case '@': case '#': case '^': case '.': case '+': case '\'':
    case '(': case ')': case '~': case '!': case '$': case '%': case '&':
    case '?': case '/': case '=': case '[': case ']':
      return true;
    default:
      return false;
  }
}

inline void check_id(const std::string& id) {
  if (id.empty()) fail(ErrorKind::InvalidId, "identifier must be nonempty");
  int depth = 0;
  for (char c : id) {
    if (!is_id_char(c))
      fail(ErrorKind::InvalidId, "identifier '" + id + "' contains reserved character '" +
                                     std::string(1, c) + "'");
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) break;
  }
  if (depth != 0)
    fail(ErrorKind::InvalidId, "identifier '" + id + "' has unbalanced parentheses");
  if (std::all_of(id.begin(), id.end(), [](char c) { return c == '.'; }))
    fail(ErrorKind::InfiniteUnsupported,
         "'" + id + "' looks like an infinite family marker; only finite hypergraphs are supported");
}

struct EdgeEnds {
  VertexSet source;
  VertexSet range;

  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

/// Finite directed hypergraph: every edge carries a source and a range
/// vertex subset. Construction does not validate; call `validate`.
class Hypergraph {
 public:
  using EdgeMap = std::map<EdgeId, EdgeEnds>;

  Hypergraph() = default;
  Hypergraph(VertexSet vertices, EdgeMap edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  Hypergraph& add_vertex(const VertexId& v) {
    if (!vertices_.insert(v).second)
      fail(ErrorKind::DuplicateId, "vertex '" + v.str() + "' declared twice");
    return *this;
  }

  Hypergraph& add_edge(const EdgeId& e, VertexSet source, VertexSet range) {
    if (!edges_.emplace(e, EdgeEnds{std::move(source), std::move(range)}).second)
      fail(ErrorKind::DuplicateId, "edge '" + e.str() + "' declared twice");
    return *this;
  }

  const VertexSet& vertices() const noexcept { return vertices_; }
  const EdgeMap& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(const VertexId& v) const { return vertices_.contains(v); }
  bool has_edge(const EdgeId& e) const { return edges_.contains(e); }

  const EdgeEnds& edge(const EdgeId& e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) fail(ErrorKind::UnknownEdge, "unknown edge '" + e.str() + "'");
    return it->second;
  }
  const VertexSet& source(const EdgeId& e) const { return edge(e).source; }
  const VertexSet& range(const EdgeId& e) const { return edge(e).range; }

  void require_vertex(const VertexId& v) const {
    if (!has_vertex(v)) fail(ErrorKind::UnknownVertex, "unknown vertex '" + v.str() + "'");
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  VertexSet vertices_;
  EdgeMap edges_;
};

// ---------------------------------------------------------------------------
// set helpers

template <class T>
std::set<T> set_intersection(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

template <class T>
std::set<T> set_union(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

template <class T>
bool intersects(const std::set<T>& a, const std::set<T>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return true;
  }
  return false;
}

template <class T>
bool is_subset(const std::set<T>& a, const std::set<T>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// validation and classification

inline void validate(const Hypergraph& h) {
  for (const auto& v : h.vertices()) check_id(v.str());
  for (const auto& [e, ends] : h.edges()) {
    check_id(e.str());
    if (ends.source.empty())
      fail(ErrorKind::EmptySource, "edge '" + e.str() + "' has an empty source");
    if (ends.range.empty())
      fail(ErrorKind::EmptyRange, "edge '" + e.str() + "' has an empty range");
    for (const auto* side : {&ends.source, &ends.range})
      for (const auto& v : *side)
        if (!h.has_vertex(v))
          fail(ErrorKind::UnknownVertex,
               "edge '" + e.str() + "' references unknown vertex '" + v.str() + "'");
  }
}

enum class HypergraphKind { Graph, Ultragraph, GeneralHypergraph };

inline std::string_view to_string(HypergraphKind k) {
  switch (k) {
    case HypergraphKind::Graph: return "Graph";
    case HypergraphKind::Ultragraph: return "Ultragraph";
    case HypergraphKind::GeneralHypergraph: return "GeneralHypergraph";
  }
  return "?";
}

inline HypergraphKind classify_kind(const Hypergraph& h) {
  bool singleton_sources = true;
  bool singleton_ranges = true;
  for (const auto& [e, ends] : h.edges()) {
    singleton_sources = singleton_sources && ends.source.size() == 1;
    singleton_ranges = singleton_ranges && ends.range.size() == 1;
  }
  if (!singleton_sources) return HypergraphKind::GeneralHypergraph;
  return singleton_ranges ? HypergraphKind::Graph : HypergraphKind::Ultragraph;
}

struct SinksSources {
  VertexSet sinks;
  VertexSet sources;
};

inline SinksSources sinks_sources(const Hypergraph& h) {
  SinksSources out{h.vertices(), h.vertices()};
  for (const auto& [e, ends] : h.edges()) {
    for (const auto& v : ends.source) out.sinks.erase(v);
    for (const auto& v : ends.range) out.sources.erase(v);
  }
  return out;
}

/// Edges e with v in s(e).
inline EdgeSet emitted_edges(const Hypergraph& h, const VertexId& v) {
  EdgeSet out;
  for (const auto& [e, ends] : h.edges())
    if (ends.source.contains(v)) out.insert(e);
  return out;
}

/// Edges e with v in r(e).
inline EdgeSet received_edges(const Hypergraph& h, const VertexId& v) {
  EdgeSet out;
  for (const auto& [e, ends] : h.edges())
    if (ends.range.contains(v)) out.insert(e);
  return out;
}

inline bool is_locally_ultra_at(const Hypergraph& h, const VertexId& w) {
  h.require_vertex(w);
  for (const auto& [e, ends] : h.edges())
    if (ends.source.contains(w) && ends.source.size() != 1) return false;
  return true;
}

enum class PathClass { Perfect, QuasiPerfect, Partial, NotComposable };

inline std::string_view to_string(PathClass c) {
  switch (c) {
    case PathClass::Perfect: return "Perfect";
    case PathClass::QuasiPerfect: return "QuasiPerfect";
    case PathClass::Partial: return "Partial";
    case PathClass::NotComposable: return "NotComposable";
  }
  return "?";
}

/// Strongest class that every consecutive pair of the sequence satisfies.
inline PathClass classify_path(const Hypergraph& h, std::span<const EdgeId> path) {
  if (path.empty()) fail(ErrorKind::PreconditionFailed, "path must contain at least one edge");
  for (const auto& e : path) h.edge(e);
  PathClass result = PathClass::Perfect;
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    const auto& r = h.range(path[j]);
    const auto& s = h.source(path[j + 1]);
    PathClass pair = PathClass::NotComposable;
    if (s == r) pair = PathClass::Perfect;
    else if (is_subset(s, r)) pair = PathClass::QuasiPerfect;
    else if (intersects(s, r)) pair = PathClass::Partial;
    result = std::max(result, pair);
  }
  return result;
}

inline bool is_quasi_perfect(PathClass c) {
  return c == PathClass::Perfect || c == PathClass::QuasiPerfect;
}

/// True iff s(f) meeting r(e) forces s(f) inside r(e), for all ordered pairs.
inline bool quasi_perfect_only(const Hypergraph& h) {
  for (const auto& [e, ee] : h.edges())
    for (const auto& [f, fe] : h.edges())
      if (intersects(fe.source, ee.range) && !is_subset(fe.source, ee.range)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// generalized vertices

struct GenVertexLattice {
  std::vector<VertexSet> base;
  std::vector<VertexSet> closure;

  bool contains(const VertexSet& a) const {
    return std::binary_search(closure.begin(), closure.end(), a, order);
  }

  /// (size, lexicographic) order used for both vectors.
  static bool order(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Closure of singletons, sources and ranges under pairwise union and
/// intersection. The empty set is not stored.
inline GenVertexLattice gen_vertex_lattice(const Hypergraph& h) {
  std::set<VertexSet> base;
  for (const auto& v : h.vertices()) base.insert(VertexSet{v});
  for (const auto& [e, ends] : h.edges()) {
    base.insert(ends.source);
    base.insert(ends.range);
  }

  std::set<VertexSet> closure = base;
  std::vector<VertexSet> frontier(base.begin(), base.end());
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    const std::vector<VertexSet> known(closure.begin(), closure.end());
    for (const auto& a : frontier) {
      for (const auto& b : known) {
        for (auto c : {set_union(a, b), set_intersection(a, b)}) {
          if (!c.empty() && closure.insert(c).second) next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }

  GenVertexLattice out;
  out.base.assign(base.begin(), base.end());
  out.closure.assign(closure.begin(), closure.end());
  std::sort(out.base.begin(), out.base.end(), GenVertexLattice::order);
  std::sort(out.closure.begin(), out.closure.end(), GenVertexLattice::order);
  return out;
}

}  // namespace hgc
