#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "groupgraphs/group.hpp"

namespace groupgraphs {

enum class GraphKind { Power, Commuting, Enhanced, EnhancedDeleted, EnhancedProper };

const char* to_string(GraphKind kind) noexcept;
/// Accepts "power", "commuting", "enhanced", "enhanced-deleted", "enhanced-proper".
std::optional<GraphKind> parse_graph_kind(std::string_view text) noexcept;

/// Undirected simple graph whose vertices are group elements. Vertices are
/// addressed by position [0, size()); element() maps a position back to the
/// original element index. Adjacency is stored as packed bit rows.
class SimpleGraph {
 public:
  using Vertex = std::uint32_t;

  SimpleGraph() = default;
  SimpleGraph(std::vector<Element> elements, std::vector<std::string> labels);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Element element(Vertex v) const { return elements_[v]; }
  std::span<const Element> elements() const { return elements_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> position_of(Element e) const;

  bool adjacent(Vertex u, Vertex v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
  void add_edge(Vertex u, Vertex v);
  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + std::size_t(v) * words_, words_};
  }

  /// Induced subgraph on the vertices with keep[v] true, in the same order.
  SimpleGraph induced(const std::vector<bool>& keep) const;
  /// Induced subgraph after deleting the listed positions.
  SimpleGraph without(std::span<const Vertex> removed) const;

  /// Sorted (i < j) edge list over positions.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const SimpleGraph& other) const;

 private:
  std::vector<Element> elements_;
  std::vector<std::string> labels_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// u ~ v iff one is a power of the other.
SimpleGraph build_power_graph(const Group& g);

/// Non-central elements; u ~ v iff uv = vu. Abelian groups give the empty graph.
SimpleGraph build_commuting_graph(const Group& g);

/// u ~ v iff u and v lie in a common cyclic subgroup. Built by stamping
/// every distinct cyclic subgroup as a clique.
SimpleGraph build_enhanced_power_graph(const Group& g);

/// Per-pair construction: u ~ v iff the subgroup generated by {u, v} is
/// cyclic, found by closing {u, v} under multiplication. Slow; used to
/// cross-check build_enhanced_power_graph.
SimpleGraph build_enhanced_power_graph_by_pairs(const Group& g);

/// Enhanced / EnhancedDeleted (identity removed) / EnhancedProper (all
/// dominating vertices removed), plus Power and Commuting for uniformity.
SimpleGraph derive_graph(const Group& g, GraphKind kind);

}  // namespace groupgraphs
