#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/star_algebra.hpp"

namespace hgc {

/// s_mu p_A s_nu*, with A inside the last range of each nonempty path.
struct SpanElem {
  std::vector<EdgeId> mu;
  VertexSet a;
  std::vector<EdgeId> nu;

  friend bool operator==(const SpanElem&, const SpanElem&) = default;
};

inline void check_span_elem(const Hypergraph& h, const SpanElem& x) {
  if (x.a.empty()) fail(ErrorKind::InvalidSpanElement, "middle projection is empty");
  for (const auto& v : x.a) h.require_vertex(v);
  for (const auto* path : {&x.mu, &x.nu}) {
    if (path->empty()) continue;
    if (!is_quasi_perfect(classify_path(h, *path)))
      fail(ErrorKind::InvalidSpanElement, "path is not quasi perfect");
    if (!is_subset(x.a, h.range(path->back())))
      fail(ErrorKind::InvalidSpanElement, "middle projection leaves the range of the path");
  }
}

namespace detail {

inline Word path_word(const Alphabet& a, const std::vector<EdgeId>& path, LetterKind kind) {
  Word w;
  for (const auto& e : path) w.push_back({kind, a.index(e)});
  return w;
}

inline Word star_path_word(const Alphabet& a, const std::vector<EdgeId>& path) {
  Word w;
  for (auto it = path.rbegin(); it != path.rend(); ++it) w.push_back({LetterKind::T, a.index(*it)});
  return w;
}

inline Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Sum over p_u, u in `proj`, placed between `left` and `right`; the
// projection is dropped when it is absorbed by the adjacent edge source.
inline void add_with_projection(StarExpression& out, const Alphabet& a, const Word& left,
                                const VertexSet& proj, const Word& right, bool absorbed) {
  if (absorbed) {
    out.add_term(concat({left, right}), 1);
    return;
  }
  for (const auto& u : proj) out.add_term(concat({left, Word{{LetterKind::P, a.index(u)}}, right}), 1);
}

inline bool is_prefix(const std::vector<EdgeId>& p, const std::vector<EdgeId>& q) {
  return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

}  // namespace detail

inline StarExpression span_expression(const AlphabetPtr& alphabet, const SpanElem& x) {
  const auto& a = *alphabet;
  StarExpression out(alphabet);
  detail::add_with_projection(out, a, detail::path_word(a, x.mu, LetterKind::S), x.a,
                              detail::star_path_word(a, x.nu), false);
  return out;
}

/// Product of two spanning elements by the prefix case split on nu and alpha.
inline StarExpression spanning_product(const SpanElem& x, const SpanElem& y, const RelationSystem& rs) {
  const auto& h = rs.hypergraph();
  if (!quasi_perfect_only(h))
    fail(ErrorKind::NotQuasiPerfect, "hypergraph has a partial pair of edges");
  check_span_elem(h, x);
  check_span_elem(h, y);
  const auto& a = *rs.alphabet;
  StarExpression out(rs.alphabet);
  const auto& nu = x.nu;
  const auto& alpha = y.mu;
  const Word smu = detail::path_word(a, x.mu, LetterKind::S);
  const Word sbeta_star = detail::star_path_word(a, y.nu);

  if (nu == alpha) {
    const auto mid = set_intersection(x.a, y.a);
    if (!mid.empty()) detail::add_with_projection(out, a, smu, mid, sbeta_star, false);
    return out;
  }
  if (detail::is_prefix(nu, alpha)) {
    const std::vector<EdgeId> rest(alpha.begin() + static_cast<std::ptrdiff_t>(nu.size()), alpha.end());
    const auto& first_source = h.source(rest.front());
    const auto mid = set_intersection(x.a, first_source);
    if (mid.empty()) return out;
    const Word tail = detail::path_word(a, rest, LetterKind::S);
    StarExpression right(rs.alphabet);
    detail::add_with_projection(right, a, tail, y.a, sbeta_star, false);
    StarExpression left(rs.alphabet);
    detail::add_with_projection(left, a, smu, mid, {}, mid == first_source);
    return left * right;
  }
  if (detail::is_prefix(alpha, nu)) {
    const std::vector<EdgeId> rest(nu.begin() + static_cast<std::ptrdiff_t>(alpha.size()), nu.end());
    const auto& first_source = h.source(rest.front());
    const auto mid = set_intersection(y.a, first_source);
    if (mid.empty()) return out;
    StarExpression left(rs.alphabet);
    detail::add_with_projection(left, a, smu, x.a, detail::star_path_word(a, rest), false);
    StarExpression right(rs.alphabet);
    detail::add_with_projection(right, a, {}, mid, sbeta_star, mid == first_source);
    return left * right;
  }
  return out;
}

/// Every quasi-perfect path with 1..max_len edges, in lexicographic order.
inline std::vector<std::vector<EdgeId>> quasi_perfect_paths(const Hypergraph& h, std::size_t max_len) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<std::vector<EdgeId>> layer;
  for (const auto& [e, ends] : h.edges()) layer.push_back({e});
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::vector<EdgeId>> next;
    for (const auto& p : layer)
      for (const auto& [f, fe] : h.edges())
        if (is_subset(fe.source, h.range(p.back()))) {
          auto q = p;
          q.push_back(f);
          next.push_back(std::move(q));
        }
    layer = std::move(next);
  }
  return out;
}

/// Spanning elements with |mu|, |nu| <= max_len, |mu| + |nu| <= max_total and
/// A ranging over the generalized-vertex lattice.
inline std::vector<SpanElem> spanning_elements(const Hypergraph& h, std::size_t max_total,
                                               std::optional<std::size_t> max_len = std::nullopt) {
  auto paths = quasi_perfect_paths(h, max_len.value_or(max_total));
  paths.insert(paths.begin(), std::vector<EdgeId>{});
  const auto lattice = gen_vertex_lattice(h);
  std::vector<SpanElem> out;
  for (const auto& mu : paths)
    for (const auto& nu : paths) {
      if (mu.size() + nu.size() > max_total) continue;
      for (const auto& a : lattice.closure) {
        if (!mu.empty() && !is_subset(a, h.range(mu.back()))) continue;
        if (!nu.empty() && !is_subset(a, h.range(nu.back()))) continue;
        out.push_back({mu, a, nu});
      }
    }
  return out;
}

}  // namespace hgc
