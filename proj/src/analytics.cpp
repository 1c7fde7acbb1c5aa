#include "groupgraphs/analytics.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <tuple>

#include "groupgraphs/error.hpp"

namespace groupgraphs {

using Vertex = SimpleGraph::Vertex;

namespace {

/// Breadth-first reachability from `start` restricted to `allowed`
/// (bitset words); returns the reached set as bitset words.
std::vector<std::uint64_t> reach(const SimpleGraph& g, Vertex start, std::vector<std::uint64_t> allowed) {
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> seen(words, 0);
  std::vector<Vertex> queue{start};
  seen[start >> 6] |= std::uint64_t{1} << (start & 63);
  allowed[start >> 6] &= ~(std::uint64_t{1} << (start & 63));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto r = g.row(queue[head]);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t fresh = r[w] & allowed[w];
      if (!fresh) continue;
      allowed[w] &= ~fresh;
      seen[w] |= fresh;
      while (fresh) {
        queue.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(fresh)));
        fresh &= fresh - 1;
      }
    }
  }
  return seen;
}

std::vector<std::uint64_t> full_mask(std::size_t n) {
  std::vector<std::uint64_t> m((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64) m.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return m;
}

bool test_bit(const std::vector<std::uint64_t>& m, Vertex v) { return (m[v >> 6] >> (v & 63)) & 1u; }

/// Two vertices from different components of g minus `removed`, if any.
std::optional<std::pair<Vertex, Vertex>> split_pair(const SimpleGraph& g, std::span<const Vertex> removed) {
  auto allowed = full_mask(g.size());
  for (auto v : removed) allowed[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  Vertex first = 0;
  while (first < g.size() && !test_bit(allowed, first)) ++first;
  if (first >= g.size()) return std::nullopt;
  const auto seen = reach(g, first, allowed);
  for (Vertex v = 0; v < g.size(); ++v)
    if (test_bit(allowed, v) && !test_bit(seen, v)) return std::make_pair(first, v);
  return std::nullopt;
}

/// Vertex-split unit-capacity flow network: in(v) = 2v, out(v) = 2v + 1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const SimpleGraph& g) : n_(g.size()), head_(2 * n_, -1) {
    for (Vertex v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    // Edge arcs never saturate (each carries at most one unit), so every
    // minimum cut consists of vertex arcs only.
    for (const auto& [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, kUnbounded);
      add_arc(2 * v + 1, 2 * u, kUnbounded);
    }
    base_ = cap_;
  }

  /// Augments from out(s) to in(t) until `limit` paths or no more paths.
  std::size_t max_flow(Vertex s, Vertex t, std::size_t limit) {
    cap_ = base_;
    const int source = 2 * int(s) + 1, sink = 2 * int(t);
    std::size_t flow = 0;
    std::vector<int> parent_arc(2 * n_);
    while (flow < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -2);
      parent_arc[source] = -1;
      std::deque<int> queue{source};
      while (!queue.empty() && parent_arc[sink] == -2) {
        const int x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          if (cap_[a] == 0 || parent_arc[to_[a]] != -2) continue;
          parent_arc[to_[a]] = a;
          queue.push_back(to_[a]);
        }
      }
      if (parent_arc[sink] == -2) break;
      for (int x = sink; x != source; x = to_[parent_arc[x] ^ 1]) {
        --cap_[parent_arc[x]];
        ++cap_[parent_arc[x] ^ 1];
      }
      ++flow;
    }
    last_source_ = source;
    return flow;
  }

  /// After a max_flow that ended below its limit: the saturated vertex arcs
  /// on the source side of the residual cut.
  std::vector<Vertex> min_cut() const {
    std::vector<bool> seen(2 * n_, false);
    std::vector<int> queue{last_source_};
    seen[last_source_] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int a = head_[queue[h]]; a != -1; a = next_[a])
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = true;
          queue.push_back(to_[a]);
        }
    std::vector<Vertex> cut;
    for (Vertex v = 0; v < n_; ++v)
      if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    return cut;
  }

 private:
  static constexpr int kUnbounded = 100;

  void add_arc(int from, int to, int capacity) {
    for (auto [a, b, c] : {std::tuple{from, to, capacity}, std::tuple{to, from, 0}}) {
      to_.push_back(b);
      cap_.push_back(static_cast<std::int8_t>(c));
      next_.push_back(head_[a]);
      head_[a] = static_cast<int>(to_.size()) - 1;
    }
  }

  std::size_t n_;
  std::vector<int> head_, next_, to_;
  std::vector<std::int8_t> cap_, base_;
  int last_source_ = 0;
};

Connectivity general_connectivity(const SimpleGraph& g) {
  // Preconditions: connected, no dominating vertex, no articulation point.
  const std::size_t n = g.size();
  Vertex v = 0;
  for (Vertex x = 1; x < n; ++x)
    if (g.degree(x) < g.degree(v)) v = x;

  const auto nbrs = g.neighbors(v);
  CutCertificate best;
  best.cut = nbrs;
  for (Vertex w = 0; w < n; ++w)
    if (w != v && !g.adjacent(v, w)) {
      best.separated_pair = {v, w};
      break;
    }
  std::size_t kappa = nbrs.size();
  constexpr std::size_t kLowerBound = 2;  // no articulation point

  SplitNetwork net(g);
  auto try_pair = [&](Vertex a, Vertex b) {
    if (kappa <= kLowerBound) return;
    const std::size_t f = net.max_flow(a, b, kappa);
    if (f < kappa) {
      kappa = f;
      best.cut = net.min_cut();
      best.separated_pair = {a, b};
    }
  };
  for (Vertex w = 0; w < n && kappa > kLowerBound; ++w)
    if (w != v && !g.adjacent(v, w)) try_pair(v, w);
  for (std::size_t i = 0; i < nbrs.size() && kappa > kLowerBound; ++i)
    for (std::size_t j = i + 1; j < nbrs.size() && kappa > kLowerBound; ++j)
      if (!g.adjacent(nbrs[i], nbrs[j])) try_pair(nbrs[i], nbrs[j]);
  std::sort(best.cut.begin(), best.cut.end());
  return {kappa, std::move(best)};
}

}  // namespace

ComponentPartition components(const SimpleGraph& g) {
  ComponentPartition out;
  const std::size_t n = g.size();
  out.component_id.assign(n, std::numeric_limits<std::uint32_t>::max());
  auto unvisited = full_mask(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!test_bit(unvisited, v)) continue;
    const auto seen = reach(g, v, unvisited);
    std::size_t size = 0;
    for (std::size_t w = 0; w < seen.size(); ++w) {
      unvisited[w] &= ~seen[w];
      std::uint64_t bits = seen[w];
      size += static_cast<std::size_t>(std::popcount(bits));
      while (bits) {
        out.component_id[w * 64 + std::countr_zero(bits)] = static_cast<std::uint32_t>(out.count);
        bits &= bits - 1;
      }
    }
    out.sizes.push_back(size);
    ++out.count;
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return components(g).count <= 1; }

std::vector<Vertex> dominating_vertices(const SimpleGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) + 1 == g.size()) out.push_back(v);
  return out;
}

bool is_complete(const SimpleGraph& g) { return dominating_vertices(g).size() == g.size(); }

std::vector<Vertex> articulation_points(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  if (!is_connected(g)) throw Error(ErrorCode::Domain, "articulation_points needs a connected graph");
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::uint32_t timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    std::size_t children;
  };
  std::vector<Frame> stack{{0, 0, 0, 0}};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < adj[f.v].size()) {
      const Vertex w = adj[f.v][f.next++];
      if (disc[w] == kUnseen) {
        ++f.children;
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, 0, 0});
      } else if (!(stack.size() > 1 && w == f.parent)) {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    stack.pop_back();
    if (stack.empty()) {
      if (done.children > 1) is_cut[done.v] = true;
    } else {
      Frame& p = stack.back();
      low[p.v] = std::min(low[p.v], low[done.v]);
      if (stack.size() > 1 && low[done.v] >= disc[p.v]) is_cut[p.v] = true;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

Connectivity vertex_connectivity(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorCode::Domain, "vertex connectivity of the empty graph is undefined");
  if (n == 1) return {0, std::nullopt};
  const auto dom = dominating_vertices(g);
  if (dom.size() == n) return {n - 1, std::nullopt};

  if (const auto pair = split_pair(g, {})) return {0, CutCertificate{{}, *pair}};

  if (!dom.empty()) {
    const SimpleGraph rest = g.without(dom);
    std::vector<Vertex> back;  // rest position -> g position
    std::size_t d = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (d < dom.size() && dom[d] == v) {
        ++d;
        continue;
      }
      back.push_back(v);
    }
    const Connectivity sub = vertex_connectivity(rest);
    CutCertificate cert;
    cert.cut = dom;
    for (auto v : sub.certificate->cut) cert.cut.push_back(back[v]);
    std::sort(cert.cut.begin(), cert.cut.end());
    cert.separated_pair = {back[sub.certificate->separated_pair.first], back[sub.certificate->separated_pair.second]};
    return {dom.size() + sub.kappa, std::move(cert)};
  }

  const auto aps = articulation_points(g);
  if (!aps.empty()) {
    const Vertex a = aps.front();
    const auto pair = split_pair(g, std::span<const Vertex>(&a, 1));
    return {1, CutCertificate{{a}, *pair}};
  }
  return general_connectivity(g);
}

Connectivity brute_force_min_cut(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n > kBruteForceLimit)
    throw Error(ErrorCode::Refused, "brute_force_min_cut handles at most 16 vertices, got " + std::to_string(n));
  if (n == 0) throw Error(ErrorCode::Domain, "vertex connectivity of the empty graph is undefined");
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (g.adjacent(u, v)) adj[u] |= 1u << v;
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1u);

  for (std::size_t k = 0; k + 2 <= n; ++k) {
    // Gosper's hack: all k-subsets in increasing mask order.
    std::uint32_t s = k == 0 ? 0u : (1u << k) - 1u;
    while (s <= all) {
      const std::uint32_t rest = all & ~s;
      const auto first = static_cast<Vertex>(std::countr_zero(rest));
      std::uint32_t seen = 1u << first, frontier = seen;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= rest & ~seen;
        seen |= next;
        frontier = next;
      }
      if (seen != rest) {
        CutCertificate cert;
        for (std::uint32_t c = s; c; c &= c - 1) cert.cut.push_back(static_cast<Vertex>(std::countr_zero(c)));
        cert.separated_pair = {first, static_cast<Vertex>(std::countr_zero(rest & ~seen))};
        return {k, std::move(cert)};
      }
      if (k == 0) break;
      const std::uint32_t c = s & (~s + 1u);
      const std::uint32_t r = s + c;
      if (r == 0 || r > all) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return {n - 1, std::nullopt};
}

bool validate_certificate(const SimpleGraph& g, const CutCertificate& cert) {
  const auto [u, v] = cert.separated_pair;
  if (u >= g.size() || v >= g.size() || u == v) return false;
  auto allowed = full_mask(g.size());
  for (auto c : cert.cut) {
    if (c >= g.size() || c == u || c == v) return false;
    allowed[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
  }
  return !test_bit(reach(g, u, allowed), v);
}

std::size_t local_vertex_connectivity(const SimpleGraph& g, Vertex s, Vertex t, std::size_t limit) {
  if (s == t || g.adjacent(s, t))
    throw Error(ErrorCode::Domain, "local vertex connectivity needs two distinct non-adjacent vertices");
  SplitNetwork net(g);
  return net.max_flow(s, t, limit);
}

std::optional<std::size_t> diameter(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  const std::size_t words = g.words_per_row();
  std::size_t best = 0;
  std::vector<std::uint64_t> seen(words), frontier(words), next(words);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    seen[s >> 6] = frontier[s >> 6] = std::uint64_t{1} << (s & 63);
    std::size_t depth = 0;
    while (true) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w)
        for (std::uint64_t f = frontier[w]; f; f &= f - 1) {
          const auto r = g.row(static_cast<Vertex>(w * 64 + std::countr_zero(f)));
          for (std::size_t k = 0; k < words; ++k) next[k] |= r[k];
        }
      bool any = false;
      for (std::size_t k = 0; k < words; ++k) {
        next[k] &= ~seen[k];
        seen[k] |= next[k];
        any = any || next[k];
      }
      if (!any) break;
      ++depth;
      frontier.swap(next);
    }
    best = std::max(best, depth);
  }
  return best;
}

}  // namespace groupgraphs
