#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "groupgraphs/groupgraphs.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  gg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("group handles") {
  gg_group* g = nullptr;
  REQUIRE(gg_group_create("quaternion:4", 0, &g) == GG_OK);
  uint64_t order = 0;
  CHECK(gg_group_order(g, &order) == GG_OK);
  CHECK(order == 16);
  char* spec = nullptr;
  REQUIRE(gg_group_spec_string(g, &spec) == GG_OK);
  CHECK(take(spec) == "quaternion:4");
  uint32_t o = 0;
  CHECK(gg_group_element_order(g, 1, &o) == GG_OK);
  CHECK(o == 8);
  CHECK(gg_group_element_order(g, 16, &o) == GG_ERR_DOMAIN);
  char* label = nullptr;
  REQUIRE(gg_group_label(g, 4, &label) == GG_OK);
  CHECK(take(label) == "x^4");
  uint32_t prod = 0;
  CHECK(gg_group_multiply(g, 1, 7, &prod) == GG_OK);
  CHECK(prod == 0);
  char* desc = nullptr;
  REQUIRE(gg_group_describe(g, GG_FORMAT_JSON, &desc) == GG_OK);
  CHECK(take(desc) == "{\"spec\":\"quaternion:4\",\"order\":16,\"abelian\":false,\"element_orders\":{\"1\":1,\"2\":1,\"4\":10,\"8\":4}}\n");
  gg_group_destroy(g);
}

TEST_CASE("error reporting") {
  gg_group* g = nullptr;
  CHECK(gg_group_create("abelian:6", 0, &g) == GG_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(gg_last_error()).find("prime power") != std::string::npos);
  CHECK(gg_group_create("symmetric:8", 0, &g) == GG_ERR_ORDER_CAP);
  CHECK(gg_group_create("symmetric:8", 40320, &g) == GG_OK);
  gg_group_destroy(g);
  CHECK(gg_group_create("cayley:/nonexistent/table.txt", 0, &g) == GG_ERR_IO);
  CHECK(gg_group_create(nullptr, 0, &g) == GG_ERR_INVALID_ARGUMENT);
  CHECK(gg_group_order(nullptr, nullptr) == GG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(gg_status_string(GG_ERR_REFUSED)) == "refused");
  gg_group_destroy(nullptr);
  gg_graph_destroy(nullptr);
  gg_report_destroy(nullptr);
}

TEST_CASE("graph handles") {
  gg_group* g = nullptr;
  REQUIRE(gg_group_create("quaternion:4", 0, &g) == GG_OK);
  gg_graph* e = nullptr;
  REQUIRE(gg_graph_create(g, GG_GRAPH_ENHANCED, &e) == GG_OK);
  size_t n = 0;
  CHECK(gg_graph_vertex_count(e, &n) == GG_OK);
  CHECK(n == 16);
  gg_connectivity c{};
  REQUIRE(gg_graph_connectivity(e, &c) == GG_OK);
  CHECK(c.kappa == 2);
  CHECK(c.has_certificate == 1);
  REQUIRE(c.cut_size == 2);
  CHECK(c.cut[0] == 0);
  CHECK(c.cut[1] == 4);
  gg_connectivity_release(&c);
  CHECK(c.cut == nullptr);

  size_t count = 0;
  CHECK(gg_graph_dominating(e, nullptr, 0, &count) == GG_OK);
  CHECK(count == 2);
  std::vector<uint32_t> dom(count);
  CHECK(gg_graph_dominating(e, dom.data(), dom.size(), &count) == GG_OK);
  CHECK(dom == std::vector<uint32_t>{0, 4});
  int complete = -1;
  CHECK(gg_graph_is_complete(e, &complete) == GG_OK);
  CHECK(complete == 0);
  int64_t d = 0;
  CHECK(gg_graph_diameter(e, &d) == GG_OK);
  CHECK(d == 2);

  gg_graph* p = nullptr;
  REQUIRE(gg_graph_create(g, GG_GRAPH_ENHANCED_PROPER, &p) == GG_OK);
  CHECK(gg_graph_components(p, &n) == GG_OK);
  CHECK(n == 5);
  CHECK(gg_graph_diameter(p, &d) == GG_OK);
  CHECK(d == -1);
  char* json = nullptr;
  REQUIRE(gg_graph_export(p, GG_FORMAT_JSON, &json) == GG_OK);
  CHECK(take(json).find("\"kind\":\"enhanced-proper\"") != std::string::npos);
  char* bad = nullptr;
  CHECK(gg_graph_export(p, GG_FORMAT_CSV, &bad) == GG_ERR_INVALID_ARGUMENT);
  CHECK(gg_graph_create(g, static_cast<gg_graph_kind>(9), &p) == GG_ERR_INVALID_ARGUMENT);
  gg_graph_destroy(p);
  gg_graph_destroy(e);
  gg_group_destroy(g);
}

TEST_CASE("complete graphs have no certificate") {
  gg_group* g = nullptr;
  REQUIRE(gg_group_create("cyclic:5", 0, &g) == GG_OK);
  gg_graph* e = nullptr;
  REQUIRE(gg_graph_create(g, GG_GRAPH_ENHANCED, &e) == GG_OK);
  gg_connectivity c{};
  REQUIRE(gg_graph_connectivity(e, &c) == GG_OK);
  CHECK(c.kappa == 4);
  CHECK(c.has_certificate == 0);
  gg_connectivity_release(&c);
  gg_graph_destroy(e);
  gg_group_destroy(g);
}

TEST_CASE("theorem listing and verification") {
  CHECK(gg_theorem_count() == 26);
  CHECK(std::string(gg_theorem_name(0)) == "T1_1_pgroup_kappa1");
  CHECK(gg_theorem_name(26) == nullptr);

  gg_report* r = nullptr;
  REQUIRE(gg_verify_group("T3_1", "abelian:2,2,2", 0, &r) == GG_OK);
  size_t n = 0, fails = 9;
  CHECK(gg_report_count(r, &n) == GG_OK);
  CHECK(n == 1);
  CHECK(gg_report_failures(r, &fails) == GG_OK);
  CHECK(fails == 0);
  gg_outcome o{};
  CHECK(gg_report_outcome(r, 0, &o) == GG_OK);
  CHECK(o == GG_PASS);
  char* csv = nullptr;
  REQUIRE(gg_report_render(r, GG_FORMAT_CSV, 0, &csv) == GG_OK);
  CHECK(take(csv) ==
        "theorem_id,group_spec,order,expected,computed,outcome,elapsed_ms\n"
        "T3_1_components_pgroup,\"abelian:2,2,2\",8,7,7,pass,0.000\n");
  gg_report_destroy(r);

  CHECK(gg_verify_group("nope", "cyclic:3", 0, &r) == GG_ERR_INVALID_ARGUMENT);
  CHECK(gg_verify_group("T3_1", "cyclic:", 0, &r) == GG_ERR_PARSE);

  gg_sweep_options opts{};
  opts.family = "dihedral";
  opts.min = 2;
  opts.max = 10;
  opts.workers = 3;
  REQUIRE(gg_verify_sweep("T4_1", &opts, &r) == GG_OK);
  CHECK(gg_report_count(r, &n) == GG_OK);
  CHECK(n == 9);
  CHECK(gg_report_failures(r, &fails) == GG_OK);
  CHECK(fails == 0);
  gg_report_destroy(r);

  opts = gg_sweep_options{};
  opts.family = "no-such-family";
  CHECK(gg_verify_sweep("T4_1", &opts, &r) == GG_ERR_INVALID_ARGUMENT);
}
