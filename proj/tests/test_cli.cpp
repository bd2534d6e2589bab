#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

#include "support.hpp"

using namespace hgc;
using namespace hgc::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string at(const std::string& name) { return std::string(HGC_CORPUS_DIR) + "/" + name; }

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / ("hgc_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

Run run(const std::string& args) {
  const auto err_path = scratch() / "stderr.txt";
  const std::string cmd = std::string(HGC_CLI_PATH) + " " + args + " 2>" + err_path.string();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, read_file(err_path.string())};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST(Cli, ClassifyToeplitz) {
  const auto r = run("classify " + at("toeplitz1.hg"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["kind"], "Ultragraph");
  EXPECT_EQ(j["catalog"]["name"], "Toeplitz");
  EXPECT_EQ(json_of(run("classify " + at("toeplitz2.hg")))["kind"], "GeneralHypergraph");
}

TEST(Cli, DecomposeThenClassify) {
  const auto out = (scratch() / "ultra_graph.hg").string();
  ASSERT_EQ(run("transform " + at("ultra.hg") + " --op decompose -o " + out).code, 0);
  EXPECT_EQ(json_of(run("classify " + out))["kind"], "Graph");
}

TEST(Cli, FigureMoves) {
  EXPECT_EQ(run("transform " + at("fig4.hg") + " --op move-s w").out, serialize_hg(corpus("fig4_out.hg")));
  EXPECT_EQ(run("transform " + at("fig5.hg") + " --op move-r w").out, serialize_hg(corpus("fig5_out.hg")));
  EXPECT_EQ(run("transform " + at("fig6.hg") + " --op move-o w --blocks \"orange|blue|green\"").out,
            serialize_hg(corpus("fig6_out.hg")));
  EXPECT_EQ(run("transform " + at("fig7.hg") + " --op move-i w").out, serialize_hg(corpus("fig7_out.hg")));
  EXPECT_EQ(run("transform " + at("fig7.hg") + " --op indelay w").out, serialize_hg(corpus("fig8_out.hg")));
}

TEST(Cli, TransformJsonAndOtherOps) {
  const auto r = run("transform " + at("fig7.hg") + " --op indelay w --json");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["relabeling"]["vertex_origin"]["w^3"], "w");
  EXPECT_EQ(run("transform " + at("toeplitz1.hg") + " --op dual").code, 0);
  const auto restricted = json_of(run("transform " + at("worked4.hg") + " --op restrict v1,v2,v3 --json"));
  EXPECT_EQ(restricted["quotient"]["valid"], true);
  EXPECT_EQ(run("transform " + at("hgn.hg") + " --op attach " + at("point.hg") + " e1 v").code, 0);
  const auto merged = run("transform " + at("star3.hg") + " --op merge e1 e2");
  ASSERT_EQ(merged.code, 0) << merged.err;
  EXPECT_NE(merged.out.find("g(e1+e2)"), std::string::npos);
}

TEST(Cli, PreconditionFailuresExitOne) {
  const auto r = run("transform " + at("fig4.hg") + " --op move-s x");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.err)["error"], "NotASource");
  EXPECT_EQ(run("transform " + at("fig6.hg") + " --op move-o w --blocks \"orange|blue\"").code, 1);
  EXPECT_EQ(run("transform " + at("toeplitz1.hg") + " --op merge e").code, 1);
  EXPECT_EQ(run("transform " + at("toeplitz1.hg") + " --op nope").code, 1);
  EXPECT_EQ(run("classify " + at("missing.hg")).code, 1);
  EXPECT_EQ(run("classify " + write_temp("empty_src.hg", "hypergraph X { vertices: v; edge e: {} -> {v}; }")).code, 1);
}

TEST(Cli, SyntaxErrorsExitTwo) {
  const auto bad = write_temp("bad.hg", "hypergraph X { vertices: v; edge e {v} -> {v}; }");
  const auto r = run("classify " + bad);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("column"), std::string::npos);
  EXPECT_EQ(run("normalize " + at("toeplitz1.hg") + " --expr \"p(v) +\"").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, Analyze) {
  const auto j = json_of(run("analyze " + at("hgn.hg") + " --pass amenability"));
  EXPECT_EQ(j["result"]["certificate"]["witness_vertices"].size(), 3u);
  EXPECT_EQ(json_of(run("analyze " + at("line3.hg") + " --pass amenability"))["result"]["non_amenable"], false);
  EXPECT_EQ(json_of(run("analyze " + at("cuntz2.hg")))["result"]["verdict"], "Satisfied");
  EXPECT_EQ(json_of(run("analyze " + at("toeplitz1.hg") + " --pass lattice"))["result"]["closure"].size(), 3u);
  EXPECT_EQ(json_of(run("analyze " + at("hgn.hg") + " --pass relations"))["result"]["forced_iso_range"]["e1"], true);
}

TEST(Cli, Normalize) {
  const auto j = json_of(run("normalize " + at("toeplitz1.hg") + " --expr \"s*(e) s(e)\""));
  EXPECT_EQ(j["normal_form"], "p(v) + p(w)");
  EXPECT_EQ(j["gauge_degree"], 0);
}

TEST(Cli, RepresentVerifyOracle) {
  const auto fam = run("represent " + at("line3.hg"));
  ASSERT_EQ(fam.code, 0);
  const auto path = write_temp("line3.json", fam.out);
  const auto v = run("verify " + at("line3.hg") + " --family " + path);
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(json_of(v)["pass"], true);
  const auto o = json_of(run("oracle " + at("line3.hg") + " --family " + path + " --trials 50 --seed 3"));
  EXPECT_LT(o["max_deviation"].get<double>(), 1e-9);

  auto broken = Json::parse(fam.out);
  broken["edges"]["e1"][0][0] = 0.5;
  const auto bad = write_temp("line3_bad.json", broken.dump());
  EXPECT_EQ(run("verify " + at("line3.hg") + " --family " + bad).code, 1);
  EXPECT_EQ(run("represent " + at("cycle2.hg")).code, 1);
}

TEST(Cli, Dot) {
  const auto r = run("dot " + at("toeplitz1.hg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Cli, Deterministic) {
  const std::string args = "oracle " + at("line3.hg") + " --family " +
                           write_temp("line3_det.json", run("represent " + at("line3.hg")).out) + " --seed 9";
  EXPECT_EQ(run(args).out, run(args).out);
  const std::string t = "transform " + at("fig6.hg") + " --op move-o w --json";
  EXPECT_EQ(run(t).out, run(t).out);
}
