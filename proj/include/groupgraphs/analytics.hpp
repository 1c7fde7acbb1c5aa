#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "groupgraphs/graph.hpp"

namespace groupgraphs {

// All routines here address vertices by position in the graph
// (SimpleGraph::Vertex); use SimpleGraph::element() to recover elements.

struct ComponentPartition {
  std::vector<std::uint32_t> component_id;  // contiguous from 0, in order of first vertex
  std::size_t count = 0;
  std::vector<std::size_t> sizes;
};

ComponentPartition components(const SimpleGraph& g);

/// True for graphs with at most one component (the empty graph included).
bool is_connected(const SimpleGraph& g);

/// Vertices adjacent to every other vertex. A one-vertex graph returns it.
std::vector<SimpleGraph::Vertex> dominating_vertices(const SimpleGraph& g);

bool is_complete(const SimpleGraph& g);

/// Cut vertices of a connected graph. Throws Error(Domain) when g is disconnected.
std::vector<SimpleGraph::Vertex> articulation_points(const SimpleGraph& g);

struct CutCertificate {
  std::vector<SimpleGraph::Vertex> cut;  // sorted
  std::pair<SimpleGraph::Vertex, SimpleGraph::Vertex> separated_pair{0, 0};
  std::size_t size() const { return cut.size(); }
};

struct Connectivity {
  std::size_t kappa = 0;
  std::optional<CutCertificate> certificate;  // absent for complete graphs
};

/// Vertex connectivity with a witnessing cut. Complete graphs give
/// |V| - 1 without a certificate; a single vertex gives 0. Throws
/// Error(Domain) on the empty graph.
///
/// Layers, cheapest first: completeness, disconnection, removal of
/// dominating vertices (they belong to every cut, so
/// kappa(g) = |Dom| + kappa(g - Dom)), articulation points, and finally the
/// Esfahanian-Hakimi pair scan with unit-capacity max-flow on the
/// vertex-split digraph.
Connectivity vertex_connectivity(const SimpleGraph& g);

/// Exhaustive subset search in increasing size (graphs up to 16 vertices).
/// Throws Error(Refused) above that.
Connectivity brute_force_min_cut(const SimpleGraph& g);

inline constexpr std::size_t kBruteForceLimit = 16;

/// True when removing cert.cut leaves both ends of separated_pair present
/// and in different components.
bool validate_certificate(const SimpleGraph& g, const CutCertificate& cert);

/// Maximum number of internally vertex-disjoint paths between two
/// non-adjacent vertices, capped at `limit`.
std::size_t local_vertex_connectivity(const SimpleGraph& g, SimpleGraph::Vertex s, SimpleGraph::Vertex t,
                                      std::size_t limit);

/// Largest shortest-path distance; nullopt for disconnected or empty graphs.
std::optional<std::size_t> diameter(const SimpleGraph& g);

}  // namespace groupgraphs
