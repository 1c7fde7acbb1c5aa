#pragma once

#include <span>
#include <string>

#include "groupgraphs/graph.hpp"
#include "groupgraphs/theorems.hpp"

namespace groupgraphs {

enum class ReportFormat { Csv, Json, Text };

struct ReportOptions {
  ReportFormat format = ReportFormat::Csv;
  /// When false, elapsed_ms is written as 0 so output depends only on inputs.
  bool timing = true;
};

/// Columns: theorem_id, group_spec, order, expected, computed, outcome, elapsed_ms.
std::string render_report(std::span<const VerificationRecord> records, const ReportOptions& options = {});

/// Graphviz text. Dominating vertices are drawn filled.
std::string export_dot(const SimpleGraph& g, GraphKind kind);

/// {"order", "kind", "vertices": [labels], "vertex_ids": [elements],
///  "edges": [[i, j], ...]} with element ids, i < j, sorted.
std::string export_json(const SimpleGraph& g, GraphKind kind, std::size_t group_order);

}  // namespace groupgraphs
