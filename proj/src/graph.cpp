#include "groupgraphs/graph.hpp"

#include <algorithm>
#include <bit>

#include "groupgraphs/analytics.hpp"

namespace groupgraphs {

const char* to_string(GraphKind kind) noexcept {
  switch (kind) {
    case GraphKind::Power: return "power";
    case GraphKind::Commuting: return "commuting";
    case GraphKind::Enhanced: return "enhanced";
    case GraphKind::EnhancedDeleted: return "enhanced-deleted";
    case GraphKind::EnhancedProper: return "enhanced-proper";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view text) noexcept {
  for (auto k : {GraphKind::Power, GraphKind::Commuting, GraphKind::Enhanced, GraphKind::EnhancedDeleted,
                 GraphKind::EnhancedProper})
    if (text == to_string(k)) return k;
  return std::nullopt;
}

SimpleGraph::SimpleGraph(std::vector<Element> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)), words_((elements_.size() + 63) / 64) {
  bits_.assign(elements_.size() * words_, 0);
}

std::optional<SimpleGraph::Vertex> SimpleGraph::position_of(Element e) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it != elements_.end() && *it == e) return static_cast<Vertex>(it - elements_.begin());
  // Vertex lists are normally sorted; fall back to a scan otherwise.
  const auto lin = std::find(elements_.begin(), elements_.end(), e);
  if (lin == elements_.end()) return std::nullopt;
  return static_cast<Vertex>(lin - elements_.begin());
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) return;
  bits_[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[std::size_t(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t SimpleGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < size(); ++v) total += degree(v);
  return total / 2;
}

std::vector<SimpleGraph::Vertex> SimpleGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<bool>& keep) const {
  constexpr Vertex kDropped = ~Vertex{0};
  std::vector<Vertex> remap(size(), kDropped);
  std::vector<Element> els;
  std::vector<std::string> labs;
  for (Vertex v = 0; v < size(); ++v)
    if (keep[v]) {
      remap[v] = static_cast<Vertex>(els.size());
      els.push_back(elements_[v]);
      labs.push_back(labels_[v]);
    }
  SimpleGraph out(std::move(els), std::move(labs));
  for (Vertex u = 0; u < size(); ++u) {
    if (remap[u] == kDropped) continue;
    std::uint64_t* dst = out.bits_.data() + std::size_t(remap[u]) * out.words_;
    const auto r = row(u);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (remap[v] != kDropped) dst[remap[v] >> 6] |= std::uint64_t{1} << (remap[v] & 63);
      }
    }
  }
  return out;
}

SimpleGraph SimpleGraph::without(std::span<const Vertex> removed) const {
  std::vector<bool> keep(size(), true);
  for (auto v : removed) keep[v] = false;
  return induced(keep);
}

std::vector<std::pair<SimpleGraph::Vertex, SimpleGraph::Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u)
    for (auto v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool SimpleGraph::operator==(const SimpleGraph& other) const {
  return elements_ == other.elements_ && bits_ == other.bits_;
}

namespace {

SimpleGraph empty_graph_on_all(const Group& g) {
  std::vector<Element> els(g.order());
  std::vector<std::string> labs(g.order());
  for (Element e = 0; e < g.order(); ++e) {
    els[e] = e;
    labs[e] = g.label(e);
  }
  return SimpleGraph(std::move(els), std::move(labs));
}

}  // namespace

SimpleGraph build_power_graph(const Group& g) {
  SimpleGraph out = empty_graph_on_all(g);
  for (Element x = 0; x < g.order(); ++x)
    for (Element m : powers_of(g, x)) out.add_edge(x, m);
  return out;
}

SimpleGraph build_commuting_graph(const Group& g) {
  const auto z = center(g);
  std::vector<bool> central(g.order(), false);
  for (auto e : z) central[e] = true;
  std::vector<Element> els;
  std::vector<std::string> labs;
  for (Element e = 0; e < g.order(); ++e)
    if (!central[e]) {
      els.push_back(e);
      labs.push_back(g.label(e));
    }
  SimpleGraph out(els, std::move(labs));
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j)
      if (g.commute(els[i], els[j])) out.add_edge(SimpleGraph::Vertex(i), SimpleGraph::Vertex(j));
  return out;
}

SimpleGraph build_enhanced_power_graph(const Group& g) {
  SimpleGraph out = empty_graph_on_all(g);
  for (Element x = 0; x < g.order(); ++x) {
    const auto members = powers_of(g, x);
    const auto n = g.element_order(x);
    // Visit each cyclic subgroup once, from its smallest-index generator.
    bool smallest = true;
    for (auto m : members)
      if (m < x && g.element_order(m) == n) {
        smallest = false;
        break;
      }
    if (!smallest) continue;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) out.add_edge(members[i], members[j]);
  }
  return out;
}

SimpleGraph build_enhanced_power_graph_by_pairs(const Group& g) {
  SimpleGraph out = empty_graph_on_all(g);
  const std::size_t n = g.order();
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::vector<Element> closure;
  for (Element u = 0; u < n; ++u)
    for (Element v = u + 1; v < n; ++v) {
      // Cyclic groups are abelian.
      if (!g.commute(u, v)) continue;
      ++epoch;
      closure.assign(1, Group::identity());
      stamp[Group::identity()] = epoch;
      for (std::size_t i = 0; i < closure.size(); ++i)
        for (Element gen : {u, v}) {
          const Element next = g.multiply(closure[i], gen);
          if (stamp[next] != epoch) {
            stamp[next] = epoch;
            closure.push_back(next);
          }
        }
      const bool cyclic = std::any_of(closure.begin(), closure.end(),
                                      [&](Element h) { return g.element_order(h) == closure.size(); });
      if (cyclic) out.add_edge(u, v);
    }
  return out;
}

SimpleGraph derive_graph(const Group& g, GraphKind kind) {
  switch (kind) {
    case GraphKind::Power: return build_power_graph(g);
    case GraphKind::Commuting: return build_commuting_graph(g);
    case GraphKind::Enhanced: return build_enhanced_power_graph(g);
    case GraphKind::EnhancedDeleted: {
      const SimpleGraph full = build_enhanced_power_graph(g);
      const SimpleGraph::Vertex id = 0;
      return full.without(std::span<const SimpleGraph::Vertex>(&id, 1));
    }
    case GraphKind::EnhancedProper: {
      const SimpleGraph full = build_enhanced_power_graph(g);
      const auto dom = dominating_vertices(full);
      return full.without(dom);
    }
  }
  return {};
}

}  // namespace groupgraphs
