#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/star_algebra.hpp"
#include "hgc/transforms.hpp"

namespace hgc {

enum class Verdict { Satisfied, NotSatisfied, Unknown };
enum class Generation { Yes, Unknown };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "Satisfied";
    case Verdict::NotSatisfied: return "NotSatisfied";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}
inline std::string_view to_string(Generation g) { return g == Generation::Yes ? "Yes" : "Unknown"; }

struct GiutReasons {
  bool quasi_perfect_only = false;
  bool no_sinks = false;
  Generation generated_by_isometries = Generation::Unknown;
};

struct GiutStatus {
  Verdict verdict = Verdict::Unknown;
  GiutReasons reasons;
  VertexSet sinks;
  VertexSet ungenerated;  // vertices without a forced p_v = sum s_e s_e*
};

/// Preconditions of gauge-invariant uniqueness. Generation by the partial
/// isometries is only semi-decided through forced vertex equalities.
inline GiutStatus giut_status(const Hypergraph& h) {
  validate(h);
  GiutStatus st;
  st.reasons.quasi_perfect_only = quasi_perfect_only(h);
  st.sinks = sinks_sources(h).sinks;
  st.reasons.no_sinks = st.sinks.empty();
  const auto rs = derive_forced_equalities(h);
  for (const auto& [v, f] : rs.forced_vertex)
    if (!f) st.ungenerated.insert(v);
  st.reasons.generated_by_isometries = st.ungenerated.empty() ? Generation::Yes : Generation::Unknown;
  if (!st.reasons.quasi_perfect_only || !st.reasons.no_sinks) st.verdict = Verdict::NotSatisfied;
  else if (st.reasons.generated_by_isometries == Generation::Yes) st.verdict = Verdict::Satisfied;
  else st.verdict = Verdict::Unknown;
  return st;
}

struct NonAmenabilityCertificate {
  VertexSet witness_vertices;
  EdgeSet witness_edges;
  std::size_t n = 0;  // |witness_vertices|
  std::size_t m = 0;  // |witness_edges|
  std::string citation;

  std::string pattern() const {
    if (m == 1) return "FullSingleEdge(" + std::to_string(n) + ")";
    return "FullMultiEdge(" + std::to_string(n) + "," + std::to_string(m) + ")";
  }
};

/// A witness is a vertex subset whose restriction is a genuine quotient and
/// consists only of edges with full source and range.
inline std::optional<NonAmenabilityCertificate> check_witness(const Hypergraph& h, const VertexSet& keep) {
  if (keep.size() < 2) return std::nullopt;
  const auto r = restrict_subhypergraph(h, keep);
  if (!r.certificate.valid || r.graph.edge_count() == 0) return std::nullopt;
  NonAmenabilityCertificate cert;
  for (const auto& [e, ends] : r.graph.edges()) {
    if (ends.source != keep || ends.range != keep) return std::nullopt;
    cert.witness_edges.insert(e);
  }
  cert.witness_vertices = keep;
  cert.n = keep.size();
  cert.m = cert.witness_edges.size();
  cert.citation = cert.m == 1 ? "quotient onto C(S¹)*ℂ^" + std::to_string(cert.n) + ", not nuclear"
                              : "quotient onto O_" + std::to_string(cert.m) + "*ℂ^" +
                                    std::to_string(cert.n) + ", not nuclear";
  return cert;
}

inline bool recheck(const Hypergraph& h, const NonAmenabilityCertificate& c) {
  auto again = check_witness(h, c.witness_vertices);
  return again && again->witness_edges == c.witness_edges && again->pattern() == c.pattern();
}

struct SearchOptions {
  std::size_t budget = std::size_t{1} << 22;  // subsets examined
  std::size_t exhaustive_limit = 16;          // candidate vertices
};

namespace detail {

// Lexicographic k-combinations of {0..n-1}.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Largest witness first, lexicographic within a size. Only vertices lying in
/// s(e) and r(e) of one edge can belong to a witness.
inline std::optional<NonAmenabilityCertificate> non_amenability_search(const Hypergraph& h,
                                                                        SearchOptions opt = {}) {
  validate(h);
  VertexSet pool;
  for (const auto& [e, ends] : h.edges()) {
    auto both = set_intersection(ends.source, ends.range);
    pool.insert(both.begin(), both.end());
  }
  const std::vector<VertexId> cand(pool.begin(), pool.end());
  const int k = static_cast<int>(cand.size());
  if (k < 2) return std::nullopt;

  if (cand.size() <= opt.exhaustive_limit) {
    std::vector<std::uint32_t> src, rng;
    for (const auto& [e, ends] : h.edges()) {
      std::uint32_t s = 0, r = 0;
      for (int i = 0; i < k; ++i) {
        if (ends.source.contains(cand[static_cast<std::size_t>(i)])) s |= 1u << i;
        if (ends.range.contains(cand[static_cast<std::size_t>(i)])) r |= 1u << i;
      }
      src.push_back(s);
      rng.push_back(r);
    }
    std::size_t examined = 0;
    for (int size = k; size >= 2; --size) {
      std::vector<int> comb(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
      do {
        if (++examined > opt.budget)
          fail(ErrorKind::BudgetExceeded, "non-amenability search exceeded its budget of " +
                                              std::to_string(opt.budget) + " subsets");
        std::uint32_t mask = 0;
        for (int i : comb) mask |= 1u << i;
        bool ok = true, any = false;
        for (std::size_t j = 0; j < src.size() && ok; ++j) {
          const std::uint32_t s = src[j] & mask, r = rng[j] & mask;
          if (s && r) {
            any = true;
            ok = s == mask && r == mask;
          }
        }
        if (!ok || !any) continue;
        VertexSet keep;
        for (int i : comb) keep.insert(cand[static_cast<std::size_t>(i)]);
        if (auto cert = check_witness(h, keep)) return cert;
      } while (detail::next_combination(comb, k));
    }
    return std::nullopt;
  }

  // Large pools: shrink s(e) ∩ r(e) for each edge to a fixpoint.
  std::vector<VertexSet> seeds;
  std::size_t work = 0;
  for (const auto& [e, ends] : h.edges()) {
    VertexSet cur = set_intersection(ends.source, ends.range);
    while (cur.size() >= 2) {
      if (++work > opt.budget) fail(ErrorKind::BudgetExceeded, "non-amenability search exceeded its budget");
      VertexSet next = cur;
      for (const auto& [g, ge] : h.edges()) {
        const bool s = intersects(ge.source, next), r = intersects(ge.range, next);
        if (s && r) next = set_intersection(next, set_intersection(ge.source, ge.range));
        else if (r) for (const auto& v : ge.range) next.erase(v);
      }
      if (next == cur) break;
      cur = std::move(next);
    }
    if (cur.size() >= 2) seeds.push_back(std::move(cur));
  }
  std::sort(seeds.begin(), seeds.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  for (const auto& s : seeds)
    if (auto cert = check_witness(h, s)) return cert;
  return std::nullopt;
}

}  // namespace hgc
