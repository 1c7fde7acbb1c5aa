#include "groupgraphs/report.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

#include "groupgraphs/analytics.hpp"

namespace groupgraphs {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

nlohmann::ordered_json value_json(const Value& v) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(const std::vector<std::int64_t>& t) const { return t; }
    nlohmann::ordered_json operator()(const VertexSet& s) const { return s.labels; }
  } visitor;
  return std::visit(visitor, v);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_report(std::span<const VerificationRecord> records, const ReportOptions& options) {
  auto ms = [&](const VerificationRecord& r) { return options.timing ? r.elapsed_ms : 0.0; };
  const auto summary = summarize(records);
  std::string out;
  switch (options.format) {
    case ReportFormat::Csv:
      out = "theorem_id,group_spec,order,expected,computed,outcome,elapsed_ms\n";
      for (const auto& r : records) {
        out += csv_field(to_string(r.theorem)) + ',' + csv_field(to_string(r.group)) + ',' +
               std::to_string(r.order) + ',' + csv_field(render(r.expected)) + ',' + csv_field(render(r.computed)) +
               ',' + to_string(r.outcome) + ',' + format_ms(ms(r)) + '\n';
      }
      return out;
    case ReportFormat::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json row;
        row["theorem_id"] = to_string(r.theorem);
        row["group_spec"] = to_string(r.group);
        row["order"] = r.order;
        row["expected"] = value_json(r.expected);
        row["computed"] = value_json(r.computed);
        row["outcome"] = to_string(r.outcome);
        row["elapsed_ms"] = options.timing ? r.elapsed_ms : 0;
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(std::move(row));
      }
      nlohmann::ordered_json doc;
      doc["records"] = std::move(rows);
      doc["summary"] = {{"pass", summary.pass},
                        {"fail", summary.fail},
                        {"hypothesis_not_met", summary.hypothesis_not_met},
                        {"error", summary.error}};
      return doc.dump(2) + "\n";
    }
    case ReportFormat::Text:
      for (const auto& r : records) {
        out += std::string(to_string(r.outcome)) + "  " + to_string(r.theorem) + "  " + to_string(r.group) +
               "  order=" + std::to_string(r.order) + "  expected=" + render(r.expected) +
               "  computed=" + render(r.computed);
        if (!r.note.empty()) out += "  [" + r.note + "]";
        if (options.timing) out += "  " + format_ms(r.elapsed_ms) + "ms";
        out += '\n';
      }
      out += "summary: pass=" + std::to_string(summary.pass) + " fail=" + std::to_string(summary.fail) +
             " hypothesis-not-met=" + std::to_string(summary.hypothesis_not_met) +
             " error=" + std::to_string(summary.error) + '\n';
      return out;
  }
  return out;
}

std::string export_dot(const SimpleGraph& g, GraphKind kind) {
  std::vector<bool> dominating(g.size(), false);
  if (g.size() > 1)
    for (auto v : dominating_vertices(g)) dominating[v] = true;
  std::string out = "graph \"" + std::string(to_string(kind)) + "\" {\n";
  for (SimpleGraph::Vertex v = 0; v < g.size(); ++v) {
    out += "  " + std::to_string(g.element(v)) + " [label=\"" + dot_escape(g.label(v)) + "\"";
    if (dominating[v]) out += ", style=filled, fillcolor=lightblue";
    out += "];\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(g.element(u)) + " -- " + std::to_string(g.element(v)) + ";\n";
  return out + "}\n";
}

std::string export_json(const SimpleGraph& g, GraphKind kind, std::size_t group_order) {
  nlohmann::ordered_json doc;
  doc["order"] = group_order;
  doc["kind"] = to_string(kind);
  std::vector<std::string> labels;
  std::vector<Element> ids(g.elements().begin(), g.elements().end());
  for (SimpleGraph::Vertex v = 0; v < g.size(); ++v) labels.push_back(g.label(v));
  doc["vertices"] = labels;
  doc["vertex_ids"] = ids;
  std::vector<std::array<Element, 2>> edges;
  for (const auto& [u, v] : g.edges()) {
    Element a = g.element(u), b = g.element(v);
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
  }
  std::sort(edges.begin(), edges.end());
  doc["edges"] = edges;
  return doc.dump() + "\n";
}

}  // namespace groupgraphs
