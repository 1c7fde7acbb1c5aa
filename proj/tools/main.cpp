// groupgraphs command-line tool. Talks to the library only through the C API.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "groupgraphs/groupgraphs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedRecord = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

void check(gg_status status) {
  if (status != GG_OK) throw CliError{std::string(gg_status_string(status)) + ": " + gg_last_error()};
}

struct GroupDeleter {
  void operator()(gg_group* g) const { gg_group_destroy(g); }
};
struct GraphDeleter {
  void operator()(gg_graph* g) const { gg_graph_destroy(g); }
};
struct ReportDeleter {
  void operator()(gg_report* r) const { gg_report_destroy(r); }
};
using GroupPtr = std::unique_ptr<gg_group, GroupDeleter>;
using GraphPtr = std::unique_ptr<gg_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<gg_report, ReportDeleter>;

std::string take(char* s) {
  std::string out(s);
  gg_string_free(s);
  return out;
}

GroupPtr make_group(const std::string& spec, std::uint64_t cap) {
  gg_group* g = nullptr;
  check(gg_group_create(spec.c_str(), cap, &g));
  return GroupPtr(g);
}

GraphPtr make_graph(const gg_group* g, gg_graph_kind kind) {
  gg_graph* out = nullptr;
  check(gg_graph_create(g, kind, &out));
  return GraphPtr(out);
}

std::string label(const gg_group* g, std::uint32_t e) {
  char* s = nullptr;
  check(gg_group_label(g, e, &s));
  return take(s);
}

std::string label_set(const gg_group* g, const std::uint32_t* elements, std::size_t n) {
  std::string out = "{";
  for (std::size_t i = 0; i < n; ++i) out += (i ? ", " : "") + label(g, elements[i]);
  return out + "}";
}

const std::map<std::string, gg_graph_kind> kGraphKinds{
    {"power", GG_GRAPH_POWER},
    {"commuting", GG_GRAPH_COMMUTING},
    {"enhanced", GG_GRAPH_ENHANCED},
    {"enhanced-deleted", GG_GRAPH_ENHANCED_DELETED},
    {"enhanced-proper", GG_GRAPH_ENHANCED_PROPER},
};

std::uint64_t default_order_cap() {
  const char* env = std::getenv("GROUPGRAPHS_ORDER_CAP");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw CliError{std::string("invalid GROUPGRAPHS_ORDER_CAP: ") + env};
  return v;
}

int run_analyze(const std::string& spec, gg_graph_kind kind, const std::string& metric, std::uint64_t cap) {
  const auto group = make_group(spec, cap);
  const auto graph = make_graph(group.get(), kind);
  if (metric == "kappa") {
    gg_connectivity c{};
    check(gg_graph_connectivity(graph.get(), &c));
    std::string line = "kappa=" + std::to_string(c.kappa);
    if (c.has_certificate) {
      line += " cut=" + label_set(group.get(), c.cut, c.cut_size);
      line += "\nseparated=(" + label(group.get(), c.separated[0]) + ", " + label(group.get(), c.separated[1]) + ")";
    }
    gg_connectivity_release(&c);
    std::cout << line << '\n';
  } else if (metric == "components") {
    std::size_t n = 0;
    check(gg_graph_components(graph.get(), &n));
    std::cout << "components=" << n << '\n';
  } else if (metric == "dominators") {
    std::size_t count = 0;
    check(gg_graph_dominating(graph.get(), nullptr, 0, &count));
    std::vector<std::uint32_t> dom(count);
    check(gg_graph_dominating(graph.get(), dom.data(), dom.size(), &count));
    std::cout << "dominators=" << label_set(group.get(), dom.data(), dom.size()) << '\n';
  } else if (metric == "diameter") {
    std::int64_t d = 0;
    check(gg_graph_diameter(graph.get(), &d));
    std::cout << "diameter=" << (d < 0 ? std::string("inf") : std::to_string(d)) << '\n';
  } else {
    int complete = 0;
    check(gg_graph_is_complete(graph.get(), &complete));
    std::cout << "complete=" << (complete ? "true" : "false") << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  std::string group;
  std::string family;
  std::uint32_t min = 0, max = 0;
  std::uint64_t max_order = 0;
  std::string format = "csv";
  unsigned workers = 1;
  bool slow = false;
  bool no_timing = false;
};

int run_verify(const VerifyArgs& a, std::uint64_t cap) {
  gg_report* raw = nullptr;
  if (!a.group.empty()) {
    check(gg_verify_group(a.theorem.c_str(), a.group.c_str(), cap, &raw));
  } else {
    gg_sweep_options opts{};
    opts.family = a.family.empty() ? nullptr : a.family.c_str();
    opts.min = a.min;
    opts.max = a.max;
    opts.max_order = a.max_order;
    opts.workers = a.workers;
    opts.order_cap = cap;
    opts.slow = a.slow ? 1 : 0;
    check(gg_verify_sweep(a.theorem.c_str(), &opts, &raw));
  }
  const ReportPtr report(raw);
  const gg_format format = a.format == "json" ? GG_FORMAT_JSON : a.format == "text" ? GG_FORMAT_TEXT : GG_FORMAT_CSV;
  char* text = nullptr;
  check(gg_report_render(report.get(), format, a.no_timing ? 0 : 1, &text));
  std::cout << take(text);
  std::size_t failures = 0, count = 0;
  check(gg_report_failures(report.get(), &failures));
  check(gg_report_count(report.get(), &count));
  std::size_t errors = 0;
  for (std::size_t i = 0; i < count; ++i) {
    gg_outcome o{};
    check(gg_report_outcome(report.get(), i, &o));
    errors += o == GG_ERROR;
  }
  if (failures > 0) std::cerr << failures << " of " << count << " records failed\n";
  if (errors > 0) std::cerr << errors << " of " << count << " records could not be evaluated\n";
  return failures > 0 ? kExitFailedRecord : kExitOk;
}

int run_export(const std::string& spec, gg_graph_kind kind, const std::string& format, const std::string& output,
               std::uint64_t cap) {
  const auto group = make_group(spec, cap);
  const auto graph = make_graph(group.get(), kind);
  char* text = nullptr;
  check(gg_graph_export(graph.get(), format == "json" ? GG_FORMAT_JSON : GG_FORMAT_DOT, &text));
  const std::string body = take(text);
  if (output.empty() || output == "-") {
    std::cout << body;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << body)) throw CliError{"cannot write " + output};
  }
  return kExitOk;
}

int run_build(const std::string& spec, const std::string& format, std::uint64_t cap) {
  const auto group = make_group(spec, cap);
  char* text = nullptr;
  check(gg_group_describe(group.get(), format == "json" ? GG_FORMAT_JSON : GG_FORMAT_TEXT, &text));
  std::cout << take(text);
  return kExitOk;
}

int run_list_theorems() {
  for (std::size_t i = 0; i < gg_theorem_count(); ++i)
    std::cout << gg_theorem_name(i) << "  " << gg_theorem_statement(i) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power, commuting and enhanced power graphs of finite groups"};
  app.require_subcommand(1);
  std::uint64_t order_cap = 0;
  app.add_option("--order-cap", order_cap, "Largest group order to build (default 10080; env GROUPGRAPHS_ORDER_CAP)")
      ->check(CLI::PositiveNumber);

  std::string group_spec;
  std::string graph_name = "enhanced";
  const auto kind_names = [] {
    std::vector<std::string> v;
    for (const auto& [name, kind] : kGraphKinds) v.push_back(name);
    return v;
  }();

  auto* build = app.add_subcommand("build", "Build a group and print its order and element-order histogram");
  std::string build_format = "text";
  build->add_option("--group,-g", group_spec, "Group spec, e.g. abelian:2,2*cyclic:3")->required();
  build->add_option("--format", build_format)->check(CLI::IsMember({"text", "json"}));

  auto* analyze = app.add_subcommand("analyze", "Compute a graph invariant");
  std::string metric = "kappa";
  analyze->add_option("--group,-g", group_spec)->required();
  analyze->add_option("--graph", graph_name)->check(CLI::IsMember(kind_names));
  analyze->add_option("--metric", metric)->check(CLI::IsMember({"kappa", "components", "dominators", "diameter", "complete"}));

  auto* verify = app.add_subcommand("verify", "Check a theorem on one group or a family sweep");
  VerifyArgs va;
  verify->add_option("--theorem,-t", va.theorem, "Theorem id or unique prefix (see list-theorems)")->required();
  auto* verify_group = verify->add_option("--group,-g", va.group);
  auto* verify_family = verify->add_option("--family", va.family,
                                           "abelian, abelian-p, abelian-x-cyclic, coprime-products, p-groups, "
                                           "dihedral, quaternion, symmetric, alternating, corpus");
  verify_group->excludes(verify_family);
  verify->add_option("--min", va.min, "Smallest family parameter")->excludes(verify_group);
  verify->add_option("--max", va.max, "Largest family parameter")->excludes(verify_group);
  verify->add_option("--max-order", va.max_order, "Largest group order in the family")->excludes(verify_group);
  verify->add_option("--format", va.format)->check(CLI::IsMember({"csv", "json", "text"}));
  verify->add_option("--workers,-j", va.workers)->check(CLI::Range(1u, 256u));
  verify->add_flag("--slow", va.slow, "Include the slow instances (symmetric:8)");
  verify->add_flag("--no-timing", va.no_timing, "Write elapsed_ms as 0 for reproducible output");

  auto* exp = app.add_subcommand("export", "Write a graph as DOT or JSON");
  std::string export_format = "dot";
  std::string output;
  exp->add_option("--group,-g", group_spec)->required();
  exp->add_option("--graph", graph_name)->check(CLI::IsMember(kind_names));
  exp->add_option("--format", export_format)->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--output,-o", output, "Output file (default stdout)");

  auto* list = app.add_subcommand("list-theorems", "List theorem ids and statements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (order_cap == 0) order_cap = default_order_cap();
    // symmetric:8 has order 40320.
    if (order_cap == 0 && va.slow) order_cap = 40320;
    const gg_graph_kind kind = kGraphKinds.at(graph_name);
    if (*build) return run_build(group_spec, build_format, order_cap);
    if (*analyze) return run_analyze(group_spec, kind, metric, order_cap);
    if (*verify) return run_verify(va, order_cap);
    if (*exp) return run_export(group_spec, kind, export_format, output, order_cap);
    if (*list) return run_list_theorems();
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
