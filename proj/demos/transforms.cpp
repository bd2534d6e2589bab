// Walks the Toeplitz hypergraph through a few passes and prints the results.
#include <iostream>

#include "hgc/hgc.hpp"

int main() {
  using namespace hgc;
  using namespace hgc::literals;

  const auto h = parse_hg(R"(
    hypergraph toeplitz1 {
      vertices: v w;
      edge e: {w} -> {v w};
    }
  )").graph;

  std::cout << "kind: " << to_string(classify_kind(h)) << '\n';
  if (auto m = catalog_match(h)) std::cout << "catalog: " << m->name << '\n';

  const StarAlgebra alg(h);
  const auto rs = derive_forced_equalities(alg.alphabet());
  const auto e = alg.s("e"_e);
  std::cout << "s*(e) s(e) = " << normalize(e.adjoint() * e, rs).to_string() << '\n';
  std::cout << "s(e) s*(e) = " << normalize(e * e.adjoint(), rs).to_string() << '\n';

  const auto d = decompose_ranges(h);
  std::cout << "\ndecomposed (" << to_string(classify_kind(d.graph)) << "):\n" << serialize_hg(d.graph, "toeplitz1");
  std::cout << "\ndual graph:\n" << serialize_hg(dual_graph(h), "dual");
  std::cout << "\n" << emit_dot(h, "toeplitz1");
}
