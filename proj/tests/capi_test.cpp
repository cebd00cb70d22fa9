#include "mcover/mcover.h"

#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

json take(char* s) {
  std::string text = s;
  mcover_string_free(s);
  return json::parse(text);
}

struct GraphPtr {
  mcover_graph* g = nullptr;
  ~GraphPtr() { mcover_graph_free(g); }
};

TEST(CApi, VersionAndNames) {
  EXPECT_EQ(mcover_abi_version(), MCOVER_ABI_VERSION);
  EXPECT_STREQ(mcover_status_name(MCOVER_OK), "ok");
  EXPECT_STREQ(mcover_status_name(MCOVER_E_GRAPH6_MULTIGRAPH), "graph6-multigraph");
}

TEST(CApi, CreateAndInspect) {
  const int edges[] = {0, 1, 1, 2, 2, 3, 3, 0};
  GraphPtr p;
  ASSERT_EQ(mcover_graph_create(4, edges, 4, &p.g), MCOVER_OK);
  EXPECT_EQ(mcover_graph_num_vertices(p.g), 4);
  EXPECT_EQ(mcover_graph_num_edges(p.g), 4);
  int u = -1, v = -1;
  ASSERT_EQ(mcover_graph_edge(p.g, 2, &u, &v), MCOVER_OK);
  EXPECT_EQ(u, 2);
  EXPECT_EQ(v, 3);
  EXPECT_EQ(mcover_graph_edge(p.g, 9, &u, &v), MCOVER_E_EDGE_NOT_IN_GRAPH);
  EXPECT_NE(std::string(mcover_last_error()), "");
  EXPECT_EQ(mcover_graph_num_edges(nullptr), -1);

  mcover_graph* bad = nullptr;
  const int loop[] = {0, 5};
  EXPECT_NE(mcover_graph_create(2, loop, 1, &bad), MCOVER_OK);
  EXPECT_EQ(bad, nullptr);
}

TEST(CApi, ParseWriteRoundTrip) {
  GraphPtr p;
  ASSERT_EQ(mcover_graph_parse("C~", "graph6", &p.g), MCOVER_OK);
  EXPECT_EQ(mcover_graph_num_edges(p.g), 6);
  char* text = nullptr;
  ASSERT_EQ(mcover_graph_write(p.g, "edgelist", &text), MCOVER_OK);
  GraphPtr q;
  ASSERT_EQ(mcover_graph_parse(text, "edgelist", &q.g), MCOVER_OK);
  mcover_string_free(text);
  ASSERT_EQ(mcover_graph_write(q.g, "g6", &text), MCOVER_OK);
  EXPECT_STREQ(text, "C~\n");
  mcover_string_free(text);

  mcover_graph* bad = nullptr;
  EXPECT_EQ(mcover_graph_parse("3 2\n0 1\n", "edgelist", &bad), MCOVER_E_PARSE);
  EXPECT_EQ(mcover_graph_parse("C~", "dot", &bad), MCOVER_E_INVALID_ARGUMENT);
  EXPECT_EQ(mcover_graph_read("/nonexistent/x.g6", nullptr, &bad), MCOVER_E_IO);

  const int multi[] = {0, 1, 0, 1};
  GraphPtr m;
  ASSERT_EQ(mcover_graph_create(2, multi, 2, &m.g), MCOVER_OK);
  EXPECT_EQ(mcover_graph_write(m.g, "graph6", &text), MCOVER_E_GRAPH6_MULTIGRAPH);
}

TEST(CApi, AnalyzeAndValidate) {
  GraphPtr p;
  ASSERT_EQ(mcover_graph_parse("IheA@GUAo", "graph6", &p.g), MCOVER_OK);
  char* out = nullptr;
  ASSERT_EQ(mcover_analyze(p.g, R"({"seed": 7})", &out), MCOVER_OK);
  std::string text = out;
  mcover_string_free(out);
  auto r = json::parse(text);
  EXPECT_EQ(r["nf_star_empty"], false);
  EXPECT_EQ(r["chromatic_index"], 4);
  EXPECT_EQ(r["seed"], 7);
  ASSERT_EQ(mcover_validate_report(text.c_str(), &out), MCOVER_OK);
  EXPECT_EQ(take(out)["valid"], true);
  r["dim_nF"] = 0;
  ASSERT_EQ(mcover_validate_report(r.dump().c_str(), &out), MCOVER_OK);
  EXPECT_EQ(take(out)["valid"], false);
  EXPECT_EQ(mcover_analyze(p.g, "{not json", &out), MCOVER_E_PARSE);
}

TEST(CApi, Feasible) {
  GraphPtr p;
  ASSERT_EQ(mcover_graph_parse("C~", "graph6", &p.g), MCOVER_OK);
  char* out = nullptr;
  const int one[] = {0};
  ASSERT_EQ(mcover_feasible(p.g, one, 1, 0, &out), MCOVER_OK);
  EXPECT_EQ(take(out)["feasible"], true);
  // Edges come back sorted: 01 02 03 12 13 23. The star of 0 is a cut and
  // the triangle 012 is its complement.
  const int star[] = {0, 1, 2};
  ASSERT_EQ(mcover_feasible(p.g, star, 3, 0, &out), MCOVER_OK);
  auto j = take(out);
  EXPECT_EQ(j["feasible"], false);
  EXPECT_EQ(j["class"], "empty-class");
  const int triangle[] = {0, 1, 3};
  ASSERT_EQ(mcover_feasible(p.g, triangle, 3, 0, &out), MCOVER_OK);
  EXPECT_EQ(take(out)["class"], "full-class");
  const int bad[] = {17};
  EXPECT_EQ(mcover_feasible(p.g, bad, 1, 0, &out), MCOVER_E_EDGE_NOT_IN_GRAPH);
  GraphPtr odd;
  const int path[] = {0, 1, 1, 2};
  ASSERT_EQ(mcover_graph_create(3, path, 2, &odd.g), MCOVER_OK);
  EXPECT_EQ(mcover_feasible(odd.g, one, 1, 0, &out), MCOVER_E_NO_PERFECT_MATCHING);
}

TEST(CApi, Decompose) {
  GraphPtr k4;
  ASSERT_EQ(mcover_graph_parse("C~", "graph6", &k4.g), MCOVER_OK);
  char* out = nullptr;
  ASSERT_EQ(mcover_decompose(k4.g, 0, 0, &out), MCOVER_OK);
  auto j = take(out);
  EXPECT_EQ(j["epsilon_sum"], 3);
  EXPECT_EQ(j["classification"]["nf_star_empty"], true);
  ASSERT_EQ(mcover_decompose(k4.g, 1, 0, &out), MCOVER_OK);
  EXPECT_EQ(take(out)["exists"], false);

  GraphPtr c6;
  const int cyc[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 0};
  ASSERT_EQ(mcover_graph_create(6, cyc, 6, &c6.g), MCOVER_OK);
  ASSERT_EQ(mcover_decompose(c6.g, 1, 0, &out), MCOVER_OK);
  j = take(out);
  EXPECT_EQ(j["exists"], true);
  EXPECT_EQ(j["all_single"], true);

  GraphPtr nmc;
  const int chord[] = {0, 1, 1, 2, 2, 3, 3, 0, 0, 2};
  ASSERT_EQ(mcover_graph_create(4, chord, 5, &nmc.g), MCOVER_OK);
  EXPECT_EQ(mcover_decompose(nmc.g, 0, 0, &out), MCOVER_E_NOT_MATCHING_COVERED);
}

TEST(CApi, ConstructAndReverify) {
  char* out = nullptr;
  ASSERT_EQ(mcover_construct(R"({"construction":"star","parts":["k4","k4","k4"]})", &out), MCOVER_OK);
  std::string text = out;
  mcover_string_free(out);
  auto c = json::parse(text);
  EXPECT_EQ(c["graph"]["n"], 12);
  EXPECT_EQ(c["summary"]["failed"], 0);
  EXPECT_EQ(c["summary"]["unverified"], 0);
  ASSERT_EQ(mcover_verify_certificate(text.c_str(), 0, &out), MCOVER_OK);
  EXPECT_EQ(take(out)["summary"]["verified"], c["summary"]["verified"]);

  for (const char* req : {R"({"construction":"qr","r":4})", R"({"construction":"petersen"})",
                          R"({"construction":"splice","left":"k4","right":"q3","e1":2,"e2":0})",
                          R"({"construction":"chain","parts":"q3,q3"})", R"({"construction":"cycle"})",
                          R"({"construction":"complete-bipartite","r":3})"}) {
    ASSERT_EQ(mcover_construct(req, &out), MCOVER_OK) << req << ": " << mcover_last_error();
    EXPECT_EQ(take(out)["summary"]["failed"], 0) << req;
  }
  EXPECT_EQ(mcover_construct(R"({"construction":"qr","r":2})", &out), MCOVER_E_INVALID_PARAMETER);
  EXPECT_EQ(mcover_construct(R"({"construction":"moebius"})", &out), MCOVER_E_INVALID_PARAMETER);
  EXPECT_EQ(mcover_construct(R"({"construction":"star","parts":["k4","x9","k4"]})", &out),
            MCOVER_E_INVALID_PARAMETER);
  EXPECT_EQ(mcover_construct(R"({"construction":"cycle","k":4})", &out), MCOVER_E_INVALID_PARAMETER);
  EXPECT_EQ(mcover_construct(R"({"r":3})", &out), MCOVER_E_PARSE);
}

TEST(CApi, CappedConstructionLeavesClaimsUnverified) {
  char* out = nullptr;
  ASSERT_EQ(mcover_construct(R"({"construction":"cycle","max_pms":10})", &out), MCOVER_OK);
  auto c = take(out);
  EXPECT_GT(c["summary"]["unverified"].get<int>(), 0);
  EXPECT_EQ(c["summary"]["failed"], 0);
  bool seen = false;
  for (const auto& cl : c["claims"]) seen = seen || cl["status"] == "unverified-claim";
  EXPECT_TRUE(seen);
}

TEST(CApi, VerifySuite) {
  char* out = nullptr;
  ASSERT_EQ(mcover_verify_suite("bipartite-theorem", R"({"max_n": 8})", &out), MCOVER_OK);
  auto j = take(out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["max_n"], 8);
  EXPECT_EQ(mcover_verify_suite("unknown", nullptr, &out), MCOVER_E_INVALID_ARGUMENT);
}

TEST(CApi, NullArguments) {
  char* out = nullptr;
  EXPECT_EQ(mcover_analyze(nullptr, nullptr, &out), MCOVER_E_INVALID_ARGUMENT);
  EXPECT_EQ(mcover_graph_parse(nullptr, "graph6", nullptr), MCOVER_E_INVALID_ARGUMENT);
  EXPECT_EQ(mcover_construct(nullptr, &out), MCOVER_E_INVALID_ARGUMENT);
  mcover_graph_free(nullptr);
  mcover_string_free(nullptr);
}

}  // namespace
