#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgc/hgc.hpp"

namespace {

using namespace hgc;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::PreconditionFailed, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HgDocument load(const std::string& path) { return parse_hg(slurp(path)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Partition parse_blocks(const std::string& text) {
  Partition p;
  for (const auto& block : split(text, '|')) {
    EdgeSet b;
    for (const auto& e : split(block, ',')) {
      const auto id = trim(e);
      if (!id.empty()) b.insert(EdgeId{id});
    }
    p.blocks.push_back(std::move(b));
  }
  return p;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
  std::string file;
  std::vector<std::string> op;
  std::string blocks;
  bool allow_weakened = false;
  bool json = false;
  std::string output;
  std::string pass = "giut";
  std::string expr;
  std::string family;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t budget = SearchOptions{}.budget;
};

std::string arg(const Options& o, std::size_t i, const std::string& what) {
  if (o.op.size() <= i) fail(ErrorKind::PreconditionFailed, "--op " + o.op[0] + " needs " + what);
  return o.op[i];
}

int cmd_classify(const Options& o) {
  const auto doc = load(o.file);
  const auto& h = doc.graph;
  const auto ss = sinks_sources(h);
  const auto match = catalog_match(h);
  Json j;
  j["name"] = doc.name;
  j["kind"] = std::string(to_string(classify_kind(h)));
  j["vertices"] = h.vertex_count();
  j["edges"] = h.edge_count();
  j["sinks"] = vertex_list(ss.sinks);
  j["sources"] = vertex_list(ss.sources);
  j["quasi_perfect_only"] = quasi_perfect_only(h);
  j["catalog"] = match ? to_json(*match) : Json(nullptr);
  print(j);
  return 0;
}

int cmd_transform(const Options& o) {
  const auto doc = load(o.file);
  const auto& h = doc.graph;
  if (o.op.empty()) fail(ErrorKind::PreconditionFailed, "--op is required");
  const std::string& name = o.op[0];
  auto partition_at = [&](const VertexId& w) {
    if (!o.blocks.empty()) return parse_blocks(o.blocks);
    auto it = doc.partitions.find(w);
    if (it == doc.partitions.end())
      fail(ErrorKind::BadPartition, "no --blocks given and no partition declared at '" + w.str() + "'");
    return it->second;
  };

  TransformResult res;
  std::optional<QuotientCertificate> quotient;
  if (name == "decompose") {
    res = decompose_ranges(h);
  } else if (name == "merge") {
    res = merge_edges(h, EdgeId{arg(o, 1, "two edge ids")}, EdgeId{arg(o, 2, "two edge ids")});
  } else if (name == "dual") {
    res.graph = dual_graph(h);
  } else if (name == "move-s") {
    res = move_s(h, VertexId{arg(o, 1, "a vertex id")});
  } else if (name == "move-r") {
    res = move_r(h, VertexId{arg(o, 1, "a vertex id")}, o.allow_weakened);
  } else if (name == "move-o" || name == "move-i" || name == "indelay") {
    const VertexId w{arg(o, 1, "a vertex id")};
    const auto p = partition_at(w);
    res = name == "move-o" ? move_o(h, w, p) : name == "move-i" ? move_i(h, w, p) : indelay(h, w, p);
  } else if (name == "attach") {
    const auto other = load(arg(o, 1, "a second file, an edge id and a vertex id"));
    res = attach_product(h, other.graph, EdgeId{arg(o, 2, "an edge id")}, VertexId{arg(o, 3, "a vertex id")});
  } else if (name == "restrict") {
    VertexSet keep;
    for (const auto& v : split(arg(o, 1, "a comma separated vertex list"), ',')) {
      const auto id = trim(v);
      if (!id.empty()) keep.insert(VertexId{id});
    }
    auto r = restrict_subhypergraph(h, keep);
    res.graph = std::move(r.graph);
    quotient = std::move(r.certificate);
  } else {
    fail(ErrorKind::PreconditionFailed, "unknown --op '" + name + "'");
  }

  HgDocument out;
  out.name = doc.name;
  out.graph = std::move(res.graph);
  std::string text;
  if (o.json) {
    Json j;
    j["document"] = to_json(out);
    j["relabeling"] = to_json(res.relabeling);
    j["weakened"] = res.weakened;
    j["notes"] = res.notes;
    if (quotient) j["quotient"] = to_json(*quotient);
    text = j.dump(2) + "\n";
  } else {
    text = serialize_hg(out);
  }
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) fail(ErrorKind::PreconditionFailed, "cannot write '" + o.output + "'");
    f << text;
  }
  return 0;
}

int cmd_analyze(const Options& o) {
  const auto doc = load(o.file);
  const auto& h = doc.graph;
  Json j;
  j["pass"] = o.pass;
  if (o.pass == "giut") {
    j["result"] = to_json(giut_status(h));
  } else if (o.pass == "amenability") {
    SearchOptions opt;
    opt.budget = o.budget;
    const auto cert = non_amenability_search(h, opt);
    j["result"] = {{"non_amenable", cert.has_value()},
                   {"certificate", cert ? to_json(*cert) : Json(nullptr)}};
  } else if (o.pass == "lattice") {
    j["result"] = to_json(gen_vertex_lattice(h));
  } else if (o.pass == "relations") {
    j["result"] = to_json(derive_forced_equalities(h));
  } else {
    fail(ErrorKind::PreconditionFailed, "unknown --pass '" + o.pass + "'");
  }
  print(j);
  return 0;
}

int cmd_normalize(const Options& o) {
  const auto doc = load(o.file);
  const StarAlgebra alg(doc.graph);
  const auto rs = derive_forced_equalities(alg.alphabet());
  const auto x = parse_expression(o.expr, alg);
  const auto nf = normalize(x, rs);
  const auto deg = gauge_degree(nf);
  Json j;
  j["input"] = x.to_string();
  j["normal_form"] = nf.to_string();
  j["gauge_degree"] = deg ? Json(*deg) : Json(nullptr);
  print(j);
  return 0;
}

int cmd_verify(const Options& o) {
  const auto doc = load(o.file);
  const auto report = verify_ck_family(doc.graph, parse_family(slurp(o.family)));
  print(to_json(report));
  return report.pass ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  const auto doc = load(o.file);
  const auto rs = derive_forced_equalities(doc.graph);
  const double dev = symbolic_numeric_consistency(rs, parse_family(slurp(o.family)), o.trials, o.seed);
  print({{"trials", o.trials}, {"seed", o.seed}, {"max_deviation", dev}});
  return 0;
}

int cmd_represent(const Options& o) {
  print(to_json(standard_graph_representation(load(o.file).graph)));
  return 0;
}

int cmd_dot(const Options& o) {
  const auto doc = load(o.file);
  std::cout << emit_dot(doc.graph, doc.name);
  return 0;
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite hypergraph C*-algebra toolkit"};
  app.require_subcommand(1);
  Options o;
  int (*run)(const Options&) = nullptr;

  auto add = [&](const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "hypergraph document (.hg text or JSON)")->required();
    sub->callback([&run, fn] { run = fn; });
    return sub;
  };

  add("classify", "kind, sinks, sources, quasi-perfect flag and catalog match", cmd_classify);

  auto* tr = add("transform", "apply a move and print the resulting document", cmd_transform);
  tr->add_option("--op", o.op,
                 "decompose | merge e f | dual | move-s w | move-r w | move-o w | move-i w | indelay w | "
                 "attach FILE2 f w | restrict v1,v2,...")
      ->required()
      ->expected(1, 4);
  tr->add_option("--blocks", o.blocks, "edge partition, e.g. \"e1,e2|e3\"");
  tr->add_flag("--allow-weakened", o.allow_weakened, "let move-r accept a non-singleton range");
  tr->add_flag("--json", o.json, "emit JSON with relabeling and notes");
  tr->add_option("-o,--output", o.output, "write to a file instead of stdout");

  auto* an = add("analyze", "run an analysis pass", cmd_analyze);
  an->add_option("--pass", o.pass, "giut | amenability | lattice | relations")
      ->check(CLI::IsMember({"giut", "amenability", "lattice", "relations"}));
  an->add_option("--budget", o.budget, "subset budget for the amenability search");

  auto* nm = add("normalize", "normal form and gauge degree of an expression", cmd_normalize);
  nm->add_option("--expr", o.expr, "expression such as \"s*(e) s(e) - 1/2 p(v)\"")->required();

  auto* vf = add("verify", "check a matrix family against the relations", cmd_verify);
  vf->add_option("--family", o.family, "matrix family JSON")->required();

  auto* oc = add("oracle", "compare evaluation before and after normalization", cmd_oracle);
  oc->add_option("--family", o.family, "matrix family JSON")->required();
  oc->add_option("--trials", o.trials, "number of random expressions");
  oc->add_option("--seed", o.seed, "RNG seed");

  add("represent", "standard representation of an acyclic graph as a matrix family", cmd_represent);
  add("dot", "Graphviz rendering", cmd_dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("UsageError", e.what());
    return 2;
  }

  try {
    return run(o);
  } catch (const Error& e) {
    report_error(std::string(to_string(e.kind())), e.what());
    if (e.kind() == ErrorKind::SyntaxError) return 2;
    return e.kind() == ErrorKind::InvariantBreach ? 3 : 1;
  } catch (const std::exception& e) {
    report_error("InvariantBreach", e.what());
    return 3;
  }
}
