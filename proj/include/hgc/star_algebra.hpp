#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgc/error.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/scalar.hpp"

namespace hgc {

/// P = p_v, S = s_e, T = s_e*.
enum class LetterKind : std::uint8_t { P, S, T };

struct Letter {
  LetterKind kind;
  int index;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter adjoint(Letter l) {
  if (l.kind == LetterKind::S) return {LetterKind::T, l.index};
  if (l.kind == LetterKind::T) return {LetterKind::S, l.index};
  return l;
}

using Word = std::vector<Letter>;

/// Hypergraph plus dense indices, shared by all expressions over it.
class Alphabet {
 public:
  explicit Alphabet(Hypergraph h) : h_(std::move(h)) {
    validate(h_);
    for (const auto& v : h_.vertices()) {
      vindex_.emplace(v, static_cast<int>(vertices_.size()));
      vertices_.push_back(v);
    }
    for (const auto& [e, ends] : h_.edges()) {
      eindex_.emplace(e, static_cast<int>(edges_.size()));
      edges_.push_back(e);
      src_.push_back(indices(ends.source));
      rng_.push_back(indices(ends.range));
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) all_.push_back(static_cast<int>(v));
  }

  const Hypergraph& hypergraph() const noexcept { return h_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const VertexId& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  const EdgeId& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  int index(const VertexId& v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) fail(ErrorKind::UnknownVertex, "unknown vertex '" + v.str() + "'");
    return it->second;
  }
  int index(const EdgeId& e) const {
    auto it = eindex_.find(e);
    if (it == eindex_.end()) fail(ErrorKind::UnknownEdge, "unknown edge '" + e.str() + "'");
    return it->second;
  }

  /// Sorted vertex indices.
  const std::vector<int>& source(int e) const { return src_.at(static_cast<std::size_t>(e)); }
  const std::vector<int>& range(int e) const { return rng_.at(static_cast<std::size_t>(e)); }
  const std::vector<int>& all_vertices() const noexcept { return all_; }

  std::vector<int> indices(const VertexSet& s) const {
    std::vector<int> out;
    for (const auto& v : s) out.push_back(vindex_.at(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string letter_text(Letter l) const {
    switch (l.kind) {
      case LetterKind::P: return "p(" + vertex(l.index).str() + ")";
      case LetterKind::S: return "s(" + edge(l.index).str() + ")";
      case LetterKind::T: return "s*(" + edge(l.index).str() + ")";
    }
    return "?";
  }

 private:
  Hypergraph h_;
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  std::map<VertexId, int> vindex_;
  std::map<EdgeId, int> eindex_;
  std::vector<std::vector<int>> src_;
  std::vector<std::vector<int>> rng_;
  std::vector<int> all_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Finite linear combination of words with exact coefficients. Zero
/// coefficients are never stored.
class StarExpression {
 public:
  using Terms = std::map<Word, Scalar>;

  explicit StarExpression(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  StarExpression(AlphabetPtr alphabet, Word w, Scalar c = 1) : alphabet_(std::move(alphabet)) {
    add_term(std::move(w), std::move(c));
  }

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  StarExpression& operator+=(const StarExpression& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  StarExpression& operator-=(const StarExpression& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend StarExpression operator+(StarExpression a, const StarExpression& b) { return a += b; }
  friend StarExpression operator-(StarExpression a, const StarExpression& b) { return a -= b; }
  StarExpression operator-() const { return scaled(-1); }

  StarExpression scaled(const Scalar& c) const {
    StarExpression out(alphabet_);
    for (const auto& [w, k] : terms_) out.add_term(w, k * c);
    return out;
  }
  friend StarExpression operator*(const Scalar& c, const StarExpression& x) { return x.scaled(c); }

  /// Bilinear concatenation, no rewriting.
  friend StarExpression operator*(const StarExpression& a, const StarExpression& b) {
    a.check_same(b);
    StarExpression out(a.alphabet_);
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.add_term(std::move(w), c * d);
      }
    return out;
  }

  StarExpression adjoint() const {
    StarExpression out(alphabet_);
    for (const auto& [w, c] : terms_) {
      Word a(w.rbegin(), w.rend());
      for (auto& l : a) l = hgc::adjoint(l);
      out.add_term(std::move(a), c.conj());
    }
    return out;
  }

  friend bool operator==(const StarExpression& a, const StarExpression& b) {
    return a.terms_ == b.terms_ && a.same_alphabet(b);
  }

  bool same_alphabet(const StarExpression& o) const {
    return alphabet_ == o.alphabet_ || alphabet_->hypergraph() == o.alphabet_->hypergraph();
  }

  /// Human readable form; re-parsable by the expression parser.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string coeff;
      bool negative = false;
      if (c.im() == 0) {
        negative = c.re() < 0;
        const Rational mag = negative ? Rational(-c.re()) : c.re();
        if (mag != 1 || w.empty()) coeff = mag.str();
      } else if (c.re() == 0) {
        negative = c.im() < 0;
        const Rational mag = negative ? Rational(-c.im()) : c.im();
        coeff = mag == 1 ? "i" : mag.str() + "i";
      } else {
        coeff = "(" + c.to_string() + ")";
      }
      if (first) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      first = false;
      std::string body;
      for (const auto& l : w) body += (body.empty() ? "" : " ") + alphabet_->letter_text(l);
      if (body.empty()) body = w.empty() && coeff.empty() ? "1" : "";
      out += coeff;
      if (!coeff.empty() && !body.empty()) out += " ";
      out += body;
    }
    return out;
  }

 private:
  void check_same(const StarExpression& o) const {
    if (!same_alphabet(o))
      fail(ErrorKind::HypergraphMismatch, "expressions live over different hypergraphs");
  }

  AlphabetPtr alphabet_;
  Terms terms_;
};

/// Generator factory for one hypergraph.
class StarAlgebra {
 public:
  explicit StarAlgebra(Hypergraph h) : alphabet_(std::make_shared<const Alphabet>(std::move(h))) {}
  explicit StarAlgebra(AlphabetPtr a) : alphabet_(std::move(a)) {}

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Hypergraph& hypergraph() const noexcept { return alphabet_->hypergraph(); }

  StarExpression zero() const { return StarExpression(alphabet_); }
  StarExpression one() const { return StarExpression(alphabet_, Word{}); }
  StarExpression scalar(const Scalar& c) const { return StarExpression(alphabet_, Word{}, c); }
  StarExpression p(const VertexId& v) const {
    return StarExpression(alphabet_, Word{{LetterKind::P, alphabet_->index(v)}});
  }
  StarExpression s(const EdgeId& e) const {
    return StarExpression(alphabet_, Word{{LetterKind::S, alphabet_->index(e)}});
  }
  StarExpression s_star(const EdgeId& e) const {
    return StarExpression(alphabet_, Word{{LetterKind::T, alphabet_->index(e)}});
  }

  /// p_A = sum of p_v over A; p_{empty} = 0.
  StarExpression projection(const VertexSet& a) const {
    StarExpression out(alphabet_);
    for (const auto& v : a) out += p(v);
    return out;
  }
  StarExpression unit_sum() const { return projection(hypergraph().vertices()); }

 private:
  AlphabetPtr alphabet_;
};

// ---------------------------------------------------------------------------
// relations

/// Oriented rewriting data derived from a hypergraph.
struct RelationSystem {
  AlphabetPtr alphabet;
  /// e -> whether s_e s_e* equals p_{s(e)}.
  std::map<EdgeId, bool> forced_iso_range;
  /// v -> edges f with p_v = sum of s_f s_f*, when that equality is forced.
  std::map<VertexId, std::optional<EdgeSet>> forced_vertex;
  /// Per edge index: right hand side of s_e s_e* as vertex indices, if forced.
  std::vector<std::optional<std::vector<int>>> iso_rhs;

  const Hypergraph& hypergraph() const { return alphabet->hypergraph(); }
};

/// Equalities obtained by squeezing a projection between the two order
/// relations.
///  * If every vertex of s(e) emits only e, then p_v <= s_e s_e* for each such
///    v, the p_v are orthogonal, and s_e s_e* <= p_{s(e)}; so s_e s_e* = p_{s(e)}.
///  * If every edge a non-sink v emits has source {v}, the ranges s_f s_f* are
///    orthogonal subprojections of p_v covering it; so p_v = sum s_f s_f*.
inline RelationSystem derive_forced_equalities(const AlphabetPtr& alphabet) {
  RelationSystem rs;
  rs.alphabet = alphabet;
  const auto& h = alphabet->hypergraph();
  rs.iso_rhs.resize(alphabet->edge_count());
  std::map<VertexId, EdgeSet> emits;
  for (const auto& v : h.vertices()) emits[v] = emitted_edges(h, v);

  for (const auto& [e, ends] : h.edges()) {
    const bool forced = std::all_of(ends.source.begin(), ends.source.end(),
                                    [&](const VertexId& v) { return emits[v] == EdgeSet{e}; });
    rs.forced_iso_range[e] = forced;
    if (forced) rs.iso_rhs[static_cast<std::size_t>(alphabet->index(e))] = alphabet->source(alphabet->index(e));
  }
  for (const auto& v : h.vertices()) {
    const auto& out = emits[v];
    const bool forced = !out.empty() && std::all_of(out.begin(), out.end(), [&](const EdgeId& f) {
      return h.source(f) == VertexSet{v};
    });
    rs.forced_vertex[v] = forced ? std::optional<EdgeSet>(out) : std::nullopt;
  }
  return rs;
}

inline RelationSystem derive_forced_equalities(const Hypergraph& h) {
  return derive_forced_equalities(std::make_shared<const Alphabet>(h));
}

namespace detail {

inline bool sorted_contains(const std::vector<int>& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Word-level rewriting with a per-call memo of normal forms.
class Normalizer {
 public:
  static constexpr std::size_t kDefaultStepLimit = 2'000'000;

  explicit Normalizer(const RelationSystem& rs, std::size_t step_limit = kDefaultStepLimit)
      : rs_(rs), a_(*rs.alphabet), limit_(step_limit) {}

  StarExpression run(const StarExpression& x) {
    StarExpression out(rs_.alphabet);
    for (const auto& [w, c] : x.terms())
      for (const auto& [nw, nc] : normal_form(w)) out.add_term(nw, c * nc);
    return out;
  }

  std::size_t steps() const noexcept { return steps_; }

 private:
  using Terms = std::vector<std::pair<Word, Scalar>>;

  const Terms& normal_form(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    Terms result;
    if (auto step = rewrite_once(w)) {
      if (++steps_ > limit_)
        fail(ErrorKind::InvariantBreach, "normalization exceeded " + std::to_string(limit_) + " rewrite steps");
      std::map<Word, Scalar> acc;
      for (const auto& [w1, c1] : *step)
        for (const auto& [w2, c2] : normal_form(w1)) {
          auto& slot = acc[w2];
          slot += c1 * c2;
        }
      for (auto& [nw, nc] : acc)
        if (!nc.is_zero()) result.emplace_back(nw, std::move(nc));
    } else {
      result.emplace_back(w, Scalar(1));
    }
    return memo_.emplace(w, std::move(result)).first->second;
  }

  // Vertices adjacent to the right of a letter, and to its left.
  const std::vector<int>& right_of(const Letter* l) const {
    if (!l) return a_.all_vertices();
    return l->kind == LetterKind::S ? a_.range(l->index) : a_.source(l->index);
  }
  const std::vector<int>& left_of(const Letter* l) const {
    if (!l) return a_.all_vertices();
    return l->kind == LetterKind::S ? a_.source(l->index) : a_.range(l->index);
  }

  static Word splice(const Word& w, std::size_t at, std::size_t len, const Word& mid) {
    Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(at + len), w.end());
    return out;
  }

  // Replace w[at, at+len) by sum of p_v over `vs`.
  static Terms projection_sum(const Word& w, std::size_t at, std::size_t len, const std::vector<int>& vs) {
    Terms out;
    for (int v : vs) out.emplace_back(splice(w, at, len, Word{{LetterKind::P, v}}), Scalar(1));
    return out;
  }

  std::optional<Terms> rewrite_once(const Word& w) const {
    using K = LetterKind;
    if (w.empty()) return projection_sum(w, 0, 0, a_.all_vertices());
    const Terms zero;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter x = w[i];
      if (i + 1 < w.size()) {
        const Letter y = w[i + 1];
        if (x.kind == K::P && y.kind == K::P) {
          if (x.index == y.index) return Terms{{splice(w, i, 2, Word{x}), Scalar(1)}};
          return zero;
        }
        if (x.kind == K::T && y.kind == K::S) {
          if (x.index != y.index) return zero;
          return projection_sum(w, i, 2, a_.range(x.index));
        }
        if (x.kind == K::P && y.kind == K::S && !sorted_contains(a_.source(y.index), x.index)) return zero;
        if (x.kind == K::S && y.kind == K::P && !sorted_contains(a_.range(x.index), y.index)) return zero;
        if (x.kind == K::P && y.kind == K::T && !sorted_contains(a_.range(y.index), x.index)) return zero;
        if (x.kind == K::T && y.kind == K::P && !sorted_contains(a_.source(x.index), y.index)) return zero;
        if (x.kind == K::S && y.kind == K::T) {
          const auto& rhs = rs_.iso_rhs[static_cast<std::size_t>(x.index)];
          if (x.index == y.index && rhs) return projection_sum(w, i, 2, *rhs);
          if (sorted_intersection(a_.range(x.index), a_.range(y.index)).empty()) return zero;
        }
        if (x.kind == K::S && y.kind == K::S &&
            sorted_intersection(a_.range(x.index), a_.source(y.index)).empty())
          return zero;
        if (x.kind == K::T && y.kind == K::T &&
            sorted_intersection(a_.source(x.index), a_.range(y.index)).empty())
          return zero;
      }
      if (x.kind == K::P) {
        const Letter* left = i > 0 ? &w[i - 1] : nullptr;
        const Letter* right = i + 1 < w.size() ? &w[i + 1] : nullptr;
        if (!left && !right) continue;
        if ((left && left->kind == K::P) || (right && right->kind == K::P)) continue;
        const auto supp = sorted_intersection(right_of(left), left_of(right));
        if (supp.empty() || supp.back() != x.index) continue;
        // X p_v Y = XY - sum over the other u in Supp of X p_u Y
        Terms out;
        out.emplace_back(splice(w, i, 1, Word{}), Scalar(1));
        for (int u : supp)
          if (u != x.index) out.emplace_back(splice(w, i, 1, Word{{K::P, u}}), Scalar(-1));
        return out;
      }
    }
    return std::nullopt;
  }

  const RelationSystem& rs_;
  const Alphabet& a_;
  std::size_t limit_;
  std::size_t steps_ = 0;
  std::map<Word, Terms> memo_;
};

}  // namespace detail

/// Deterministic normal form modulo the oriented relations.
inline StarExpression normalize(const StarExpression& x, const RelationSystem& rs,
                                std::size_t step_limit = detail::Normalizer::kDefaultStepLimit) {
  if (x.alphabet() != rs.alphabet && x.alphabet()->hypergraph() != rs.hypergraph())
    fail(ErrorKind::HypergraphMismatch, "expression and relation system use different hypergraphs");
  detail::Normalizer n(rs, step_limit);
  return n.run(x);
}

enum class Equality { Equal, Unknown };

inline std::string_view to_string(Equality e) { return e == Equality::Equal ? "Equal" : "Unknown"; }

/// Sound but incomplete: Unknown never means the elements differ.
inline Equality equal_mod_relations(const StarExpression& x, const StarExpression& y,
                                    const RelationSystem& rs) {
  return normalize(x - y, rs).is_zero() ? Equality::Equal : Equality::Unknown;
}

inline int word_degree(const Word& w) {
  int d = 0;
  for (const auto& l : w) d += l.kind == LetterKind::S ? 1 : l.kind == LetterKind::T ? -1 : 0;
  return d;
}

/// Common degree of all terms, or nullopt when mixed or when x is zero.
inline std::optional<int> gauge_degree(const StarExpression& x) {
  std::optional<int> d;
  for (const auto& [w, c] : x.terms()) {
    const int k = word_degree(w);
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d;
}

/// p_A together with its lattice membership.
struct GeneralizedProjection {
  StarExpression value;
  bool in_lattice;
};

inline GeneralizedProjection generalized_projection(const StarAlgebra& alg, const VertexSet& a) {
  for (const auto& v : a) alg.hypergraph().require_vertex(v);
  const bool member = a.empty() || gen_vertex_lattice(alg.hypergraph()).contains(a);
  return {alg.projection(a), member};
}

}  // namespace hgc
