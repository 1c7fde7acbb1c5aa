#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "groupgraphs/analytics.hpp"
#include "groupgraphs/error.hpp"
#include "groupgraphs/graph.hpp"
#include "groupgraphs/group.hpp"
#include "groupgraphs/groupgraphs.h"
#include "groupgraphs/report.hpp"
#include "groupgraphs/theorems.hpp"

using namespace groupgraphs;

struct gg_group {
  Group group;
};

struct gg_graph {
  SimpleGraph graph;
  GraphKind kind;
  std::size_t group_order;
};

struct gg_report {
  std::vector<VerificationRecord> records;
};

namespace {

thread_local std::string last_error;

gg_status fail(gg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

gg_status from_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Domain: return GG_ERR_DOMAIN;
    case ErrorCode::Parse: return GG_ERR_PARSE;
    case ErrorCode::OrderCap: return GG_ERR_ORDER_CAP;
    case ErrorCode::Io: return GG_ERR_IO;
    case ErrorCode::Unsupported: return GG_ERR_UNSUPPORTED;
    case ErrorCode::Refused: return GG_ERR_REFUSED;
  }
  return GG_ERR_INTERNAL;
}

template <typename F>
gg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GG_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

BuildOptions build_options(std::uint64_t cap) {
  BuildOptions b;
  if (cap != 0) b.order_cap = cap;
  return b;
}

#define GG_REQUIRE(cond) \
  if (!(cond)) return fail(GG_ERR_INVALID_ARGUMENT, "invalid argument: " #cond)

}  // namespace

extern "C" {

const char* gg_last_error(void) { return last_error.c_str(); }

const char* gg_status_string(gg_status status) {
  switch (status) {
    case GG_OK: return "ok";
    case GG_ERR_PARSE: return "parse error";
    case GG_ERR_DOMAIN: return "domain error";
    case GG_ERR_ORDER_CAP: return "order cap exceeded";
    case GG_ERR_IO: return "i/o error";
    case GG_ERR_UNSUPPORTED: return "unsupported operation";
    case GG_ERR_REFUSED: return "refused";
    case GG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gg_string_free(char* s) { std::free(s); }

gg_status gg_group_create(const char* spec, uint64_t order_cap, gg_group** out) {
  GG_REQUIRE(spec != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    *out = new gg_group{build_group(parse_group_spec(spec), build_options(order_cap))};
    return GG_OK;
  });
}

void gg_group_destroy(gg_group* g) { delete g; }

gg_status gg_group_order(const gg_group* g, uint64_t* out) {
  GG_REQUIRE(g != nullptr && out != nullptr);
  *out = g->group.order();
  return GG_OK;
}

gg_status gg_group_spec_string(const gg_group* g, char** out) {
  GG_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup(to_string(g->group.spec()));
    return GG_OK;
  });
}

gg_status gg_group_element_order(const gg_group* g, uint32_t element, uint32_t* out) {
  GG_REQUIRE(g != nullptr && out != nullptr);
  if (element >= g->group.order()) return fail(GG_ERR_DOMAIN, "element index out of range");
  *out = g->group.element_order(element);
  return GG_OK;
}

gg_status gg_group_label(const gg_group* g, uint32_t element, char** out) {
  GG_REQUIRE(g != nullptr && out != nullptr);
  if (element >= g->group.order()) return fail(GG_ERR_DOMAIN, "element index out of range");
  return guarded([&] {
    *out = dup(g->group.label(element));
    return GG_OK;
  });
}

gg_status gg_group_multiply(const gg_group* g, uint32_t a, uint32_t b, uint32_t* out) {
  GG_REQUIRE(g != nullptr && out != nullptr);
  if (a >= g->group.order() || b >= g->group.order()) return fail(GG_ERR_DOMAIN, "element index out of range");
  *out = g->group.multiply(a, b);
  return GG_OK;
}

gg_status gg_group_describe(const gg_group* g, gg_format format, char** out) {
  GG_REQUIRE(g != nullptr && out != nullptr);
  GG_REQUIRE(format == GG_FORMAT_TEXT || format == GG_FORMAT_JSON);
  return guarded([&] {
    std::map<std::uint32_t, std::size_t> histogram;
    for (auto o : g->group.element_orders()) ++histogram[o];
    std::string s;
    if (format == GG_FORMAT_JSON) {
      nlohmann::ordered_json doc;
      doc["spec"] = to_string(g->group.spec());
      doc["order"] = g->group.order();
      doc["abelian"] = g->group.is_abelian();
      auto& orders = doc["element_orders"] = nlohmann::ordered_json::object();
      for (const auto& [o, c] : histogram) orders[std::to_string(o)] = c;
      s = doc.dump() + "\n";
    } else {
      s = "spec=" + to_string(g->group.spec()) + "\norder=" + std::to_string(g->group.order()) +
          "\nabelian=" + (g->group.is_abelian() ? "true" : "false") + "\nelement orders:\n";
      for (const auto& [o, c] : histogram) s += "  " + std::to_string(o) + ": " + std::to_string(c) + "\n";
    }
    *out = dup(s);
    return GG_OK;
  });
}

gg_status gg_graph_create(const gg_group* g, gg_graph_kind kind, gg_graph** out) {
  GG_REQUIRE(g != nullptr && out != nullptr);
  GG_REQUIRE(kind >= GG_GRAPH_POWER && kind <= GG_GRAPH_ENHANCED_PROPER);
  *out = nullptr;
  return guarded([&] {
    const auto k = static_cast<GraphKind>(kind);
    *out = new gg_graph{derive_graph(g->group, k), k, g->group.order()};
    return GG_OK;
  });
}

void gg_graph_destroy(gg_graph* graph) { delete graph; }

gg_status gg_graph_vertex_count(const gg_graph* graph, size_t* out) {
  GG_REQUIRE(graph != nullptr && out != nullptr);
  *out = graph->graph.size();
  return GG_OK;
}

gg_status gg_graph_edge_count(const gg_graph* graph, size_t* out) {
  GG_REQUIRE(graph != nullptr && out != nullptr);
  *out = graph->graph.edge_count();
  return GG_OK;
}

gg_status gg_graph_components(const gg_graph* graph, size_t* out) {
  GG_REQUIRE(graph != nullptr && out != nullptr);
  return guarded([&] {
    *out = components(graph->graph).count;
    return GG_OK;
  });
}

gg_status gg_graph_dominating(const gg_graph* graph, uint32_t* elements, size_t capacity, size_t* count) {
  GG_REQUIRE(graph != nullptr && count != nullptr);
  GG_REQUIRE(elements != nullptr || capacity == 0);
  return guarded([&] {
    const auto dom = dominating_vertices(graph->graph);
    *count = dom.size();
    for (std::size_t i = 0; i < dom.size() && i < capacity; ++i) elements[i] = graph->graph.element(dom[i]);
    return GG_OK;
  });
}

gg_status gg_graph_is_complete(const gg_graph* graph, int* out) {
  GG_REQUIRE(graph != nullptr && out != nullptr);
  *out = is_complete(graph->graph) ? 1 : 0;
  return GG_OK;
}

gg_status gg_graph_diameter(const gg_graph* graph, int64_t* out) {
  GG_REQUIRE(graph != nullptr && out != nullptr);
  return guarded([&] {
    const auto d = diameter(graph->graph);
    *out = d ? static_cast<int64_t>(*d) : -1;
    return GG_OK;
  });
}

gg_status gg_graph_connectivity(const gg_graph* graph, gg_connectivity* out) {
  GG_REQUIRE(graph != nullptr && out != nullptr);
  *out = gg_connectivity{};
  return guarded([&] {
    const auto c = vertex_connectivity(graph->graph);
    out->kappa = c.kappa;
    if (c.certificate) {
      const auto& cert = *c.certificate;
      out->has_certificate = 1;
      out->cut_size = cert.cut.size();
      if (!cert.cut.empty()) {
        out->cut = static_cast<uint32_t*>(std::malloc(cert.cut.size() * sizeof(uint32_t)));
        if (out->cut == nullptr) throw std::bad_alloc();
        for (std::size_t i = 0; i < cert.cut.size(); ++i) out->cut[i] = graph->graph.element(cert.cut[i]);
      }
      out->separated[0] = graph->graph.element(cert.separated_pair.first);
      out->separated[1] = graph->graph.element(cert.separated_pair.second);
    }
    return GG_OK;
  });
}

void gg_connectivity_release(gg_connectivity* c) {
  if (c == nullptr) return;
  std::free(c->cut);
  c->cut = nullptr;
  c->cut_size = 0;
}

gg_status gg_graph_export(const gg_graph* graph, gg_format format, char** out) {
  GG_REQUIRE(graph != nullptr && out != nullptr);
  GG_REQUIRE(format == GG_FORMAT_DOT || format == GG_FORMAT_JSON);
  return guarded([&] {
    *out = dup(format == GG_FORMAT_DOT ? export_dot(graph->graph, graph->kind)
                                       : export_json(graph->graph, graph->kind, graph->group_order));
    return GG_OK;
  });
}

size_t gg_theorem_count(void) { return all_theorems().size(); }

const char* gg_theorem_name(size_t index) {
  return index < all_theorems().size() ? to_string(all_theorems()[index]) : nullptr;
}

const char* gg_theorem_statement(size_t index) {
  return index < all_theorems().size() ? describe(all_theorems()[index]) : nullptr;
}

gg_status gg_verify_group(const char* theorem, const char* spec, uint64_t order_cap, gg_report** out) {
  GG_REQUIRE(theorem != nullptr && spec != nullptr && out != nullptr);
  *out = nullptr;
  const auto id = parse_theorem_id(theorem);
  if (!id) return fail(GG_ERR_INVALID_ARGUMENT, std::string("unknown theorem id: ") + theorem);
  return guarded([&] {
    CheckOptions opts;
    opts.build = build_options(order_cap);
    const GroupSpec parsed = parse_group_spec(spec);
    auto report = std::make_unique<gg_report>();
    report->records.push_back(check(*id, parsed, opts));
    *out = report.release();
    return GG_OK;
  });
}

gg_status gg_verify_sweep(const char* theorem, const gg_sweep_options* options, gg_report** out) {
  GG_REQUIRE(theorem != nullptr && options != nullptr && out != nullptr);
  *out = nullptr;
  const auto id = parse_theorem_id(theorem);
  if (!id) return fail(GG_ERR_INVALID_ARGUMENT, std::string("unknown theorem id: ") + theorem);
  FamilyRange range = default_range(*id, options->slow != 0);
  if (options->family != nullptr) {
    const auto family = parse_family(options->family);
    if (!family) return fail(GG_ERR_INVALID_ARGUMENT, std::string("unknown family: ") + options->family);
    if (*family != range.family) range = FamilyRange{*family};
    range.slow = options->slow != 0;
  }
  if (options->min != 0) range.min = options->min;
  if (options->max != 0) range.max = options->max;
  if (options->max_order != 0) range.max_order = options->max_order;
  return guarded([&] {
    SweepOptions sweep_opts;
    sweep_opts.workers = options->workers == 0 ? 1 : options->workers;
    sweep_opts.check.build = build_options(options->order_cap);
    auto report = std::make_unique<gg_report>();
    report->records = sweep(*id, range, sweep_opts).records;
    *out = report.release();
    return GG_OK;
  });
}

void gg_report_destroy(gg_report* r) { delete r; }

gg_status gg_report_count(const gg_report* r, size_t* out) {
  GG_REQUIRE(r != nullptr && out != nullptr);
  *out = r->records.size();
  return GG_OK;
}

gg_status gg_report_outcome(const gg_report* r, size_t index, gg_outcome* out) {
  GG_REQUIRE(r != nullptr && out != nullptr);
  if (index >= r->records.size()) return fail(GG_ERR_DOMAIN, "record index out of range");
  *out = static_cast<gg_outcome>(r->records[index].outcome);
  return GG_OK;
}

gg_status gg_report_failures(const gg_report* r, size_t* out) {
  GG_REQUIRE(r != nullptr && out != nullptr);
  *out = summarize(r->records).fail;
  return GG_OK;
}

gg_status gg_report_render(const gg_report* r, gg_format format, int timing, char** out) {
  GG_REQUIRE(r != nullptr && out != nullptr);
  GG_REQUIRE(format == GG_FORMAT_CSV || format == GG_FORMAT_JSON || format == GG_FORMAT_TEXT);
  return guarded([&] {
    ReportOptions opts;
    opts.format = format == GG_FORMAT_CSV ? ReportFormat::Csv
                  : format == GG_FORMAT_JSON ? ReportFormat::Json
                                             : ReportFormat::Text;
    opts.timing = timing != 0;
    *out = dup(render_report(r->records, opts));
    return GG_OK;
  });
}

}  // extern "C"
